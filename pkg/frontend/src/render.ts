import { basename } from "node:path";
import * as echarts from "echarts";

import { loadBands, loadSweep, loadSweepOrPoint } from "./loadCsv.js";
import { AxisRange, FigureSpec, SchemaError, SweepRow } from "./schema.js";

const WIDTH = 840;
const HEIGHT = 560;

type Pair = [number, number];

function axis(range: AxisRange | undefined, extra: object = {}): object {
  return { min: range?.min, max: range?.max, ...extra };
}

/** The renderer embeds a process-global instance counter into class and
 * clip-path names (zr0-cls-3, zr1-c0, ...); remap them to stable ids in
 * first-appearance order so repeated renders are byte-identical. */
function normalizeSvgIds(svg: string): string {
  const map = new Map<string, string>();
  let classes = 0;
  let clips = 0;
  return svg.replace(/zr\d+-(?:cls-\d+|c\d+)/g, (token) => {
    let out = map.get(token);
    if (out === undefined) {
      out = token.includes("cls") ? `zr-cls-${classes++}` : `zr-c${clips++}`;
      map.set(token, out);
    }
    return out;
  });
}

/** Headless deterministic SVG rendering; animations are disabled so the
 * output is a pure function of the option object. */
function renderOption(option: object): string {
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: WIDTH,
    height: HEIGHT,
  });
  chart.setOption({ animation: false, ...option });
  const svg = chart.renderToSVGString();
  chart.dispose();
  return normalizeSvgIds(svg);
}

function lineSeries(name: string, data: Pair[], extra: object = {}): object {
  return { name, type: "line", showSymbol: false, data, ...extra };
}

/** Soft-mode frequency against drive strength. */
function renderSoftMode(spec: FigureSpec): string {
  const rows = loadSweep(spec.csvPaths[0]);
  const data: Pair[] = rows.map((r) => [r.eta_over_etac, r.omega_soft]);
  return renderOption({
    xAxis: axis(spec.xRange, { name: "eta / eta_c", type: "value" }),
    yAxis: axis(spec.yRange, { name: "omega_soft / omega_R", type: "value" }),
    series: [lineSeries("soft mode", data)],
  });
}

/** Three folded phonon bands with the polariton frequency as a marker line.
 * A second CSV (a sweep or a point summary) supplies the polariton frequency
 * from its first row; when absent the touching point of the upper bands at
 * q -> 0 is used, which equals the zero-drive value. */
function renderBands(spec: FigureSpec): string {
  const rows = loadBands(spec.csvPaths[0]);
  let polariton = rows[0].omega2;
  if (spec.csvPaths.length > 1) {
    polariton = loadSweepOrPoint(spec.csvPaths[1])[0].omega_soft;
  }
  const bands = (["omega1", "omega2", "omega3"] as const).map((key, i) =>
    lineSeries(
      `band ${i + 1}`,
      rows.map((r) => [r.q, r[key]] as Pair),
    ),
  );
  bands[0] = {
    ...bands[0],
    markLine: {
      symbol: "none",
      animation: false,
      label: { formatter: "polariton" },
      data: [{ yAxis: polariton }],
    },
  };
  return renderOption({
    legend: { data: ["band 1", "band 2", "band 3"] },
    xAxis: axis(spec.xRange, { name: "q / k", type: "value", max: spec.xRange?.max ?? 0.5 }),
    yAxis: axis(spec.yRange, { name: "omega / omega_R", type: "value" }),
    series: bands,
  });
}

function positive(rows: SweepRow[], key: "gamma_landau" | "gamma_beliaev"): Pair[] {
  return rows.filter((r) => r[key] > 0).map((r) => [r.eta_over_etac, r[key]]);
}

/** Both damping rates on a logarithmic rate axis; nonpositive entries (an
 * exactly zero Landau rate at T = 0) cannot sit on a log axis and are
 * dropped from their series. */
function renderRates(spec: FigureSpec): string {
  const rows = loadSweep(spec.csvPaths[0]);
  const landau = positive(rows, "gamma_landau");
  const beliaev = positive(rows, "gamma_beliaev");
  if (landau.length === 0 && beliaev.length === 0) {
    throw new SchemaError(`${spec.csvPaths[0]}: no positive rates to draw`);
  }
  const series = [];
  if (landau.length > 0) series.push(lineSeries("Landau", landau));
  if (beliaev.length > 0) series.push(lineSeries("Beliaev", beliaev));
  return renderOption({
    legend: {},
    xAxis: axis(spec.xRange, { name: "eta / eta_c", type: "value" }),
    yAxis: axis(spec.yRange, {
      name: "gamma / omega_R",
      type: "log",
      axisLabel: { formatter: (v: number) => v.toExponential(0) },
    }),
    series,
  });
}

/** Beliaev-rate curves from several sweeps (one per broadening width)
 * overlaid on a linear axis; series are labeled by file name. */
function renderBroadeningStudy(spec: FigureSpec): string {
  if (spec.csvPaths.length < 2) {
    throw new SchemaError("the broadening study needs at least two sweep CSVs");
  }
  const series = spec.csvPaths.map((path) =>
    lineSeries(
      basename(path, ".csv"),
      loadSweep(path).map((r) => [r.eta_over_etac, r.gamma_beliaev] as Pair),
    ),
  );
  return renderOption({
    legend: {},
    xAxis: axis(spec.xRange, { name: "eta / eta_c", type: "value" }),
    yAxis: axis(spec.yRange, { name: "gamma_B / omega_R", type: "value" }),
    series,
  });
}

export function render(spec: FigureSpec): string {
  if (spec.csvPaths.length === 0) {
    throw new SchemaError("no input CSV given");
  }
  switch (spec.figure) {
    case "2a":
      return renderSoftMode(spec);
    case "2bc":
      return renderBands(spec);
    case "3":
      return renderRates(spec);
    case "3-inset":
      return renderBroadeningStudy(spec);
  }
}

/** eta/eta_c at the Beliaev maximum of a sweep; the rendering tests pin the
 * resonance position with this instead of parsing pixels out of the SVG. */
export function beliaevPeakLocation(rows: SweepRow[]): number {
  let best = rows[0];
  for (const row of rows) {
    if (row.gamma_beliaev > best.gamma_beliaev) best = row;
  }
  return best.eta_over_etac;
}
