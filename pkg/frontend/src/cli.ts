/**
 * Figure regeneration from simulator CSV output.
 *
 * Usage:
 *   node dist/cli.js --figure 2a      --csv sweep_eta.csv           --out fig2a.svg
 *   node dist/cli.js --figure 2bc     --csv bands.csv [--csv sweep_eta.csv] --out fig2bc.svg
 *   node dist/cli.js --figure 3       --csv sweep_eta.csv           --out fig3.svg
 *   node dist/cli.js --figure 3-inset --csv s1.csv --csv s2.csv --csv s3.csv --out inset.svg
 *
 * Optional --x-min/--x-max/--y-min/--y-max clamp the axes.  The image is
 * written only after rendering succeeds, so a schema error never leaves a
 * partial file behind.  Exit status 0 on success, 1 on any error.
 */

import { writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";

import { render } from "./render.js";
import { AxisRange, FigureId, FigureSpec } from "./schema.js";

const FIGURES: readonly FigureId[] = ["2a", "2bc", "3", "3-inset"];

function range(min?: string, max?: string): AxisRange | undefined {
  if (min === undefined && max === undefined) return undefined;
  const parse = (s: string | undefined) => {
    if (s === undefined) return undefined;
    const v = Number(s);
    if (!Number.isFinite(v)) throw new Error(`not a number: ${s}`);
    return v;
  };
  return { min: parse(min), max: parse(max) };
}

export function buildSpec(argv: string[]): FigureSpec {
  const { values } = parseArgs({
    args: argv,
    options: {
      figure: { type: "string" },
      csv: { type: "string", multiple: true },
      out: { type: "string" },
      "x-min": { type: "string" },
      "x-max": { type: "string" },
      "y-min": { type: "string" },
      "y-max": { type: "string" },
    },
  });
  const figure = values.figure as FigureId | undefined;
  if (!figure || !FIGURES.includes(figure)) {
    throw new Error(`--figure must be one of ${FIGURES.join(", ")}`);
  }
  if (!values.csv || values.csv.length === 0) {
    throw new Error("at least one --csv is required");
  }
  if (!values.out) {
    throw new Error("--out is required");
  }
  return {
    figure,
    csvPaths: values.csv,
    outPath: values.out,
    xRange: range(values["x-min"], values["x-max"]),
    yRange: range(values["y-min"], values["y-max"]),
  };
}

export function main(argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = buildSpec(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  try {
    const svg = render(spec);
    writeFileSync(spec.outPath, svg, "utf8");
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  console.log(`wrote ${spec.outPath}`);
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;

if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
