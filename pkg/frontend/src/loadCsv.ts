import { readFileSync } from "node:fs";
import Papa from "papaparse";

import {
  BANDS_COLUMNS,
  BandsRow,
  POINT_COLUMNS,
  SchemaError,
  SWEEP_COLUMNS,
  SweepRow,
} from "./schema.js";

function headerMatches(
  fields: readonly string[],
  columns: readonly string[],
): boolean {
  return (
    fields.length === columns.length && columns.every((c, i) => fields[i] === c)
  );
}

/** Parse one CSV file; the header must exactly match one of the given
 * column lists, and every cell under that list must be a finite number. */
function loadRows(
  path: string,
  columnSets: readonly (readonly string[])[],
): Record<string, number>[] {
  const text = readFileSync(path, "utf8");
  const parsed = Papa.parse<Record<string, number>>(text, {
    header: true,
    dynamicTyping: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new SchemaError(`${path}: malformed CSV (${first.message})`);
  }
  const fields = parsed.meta.fields ?? [];
  const columns = columnSets.find((set) => headerMatches(fields, set));
  if (columns === undefined) {
    const expected = columnSets.map((set) => `[${set.join(",")}]`).join(" or ");
    throw new SchemaError(
      `${path}: header [${fields.join(",")}] does not match expected ${expected}`,
    );
  }
  if (parsed.data.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  for (const row of parsed.data) {
    for (const column of columns) {
      const value = row[column];
      if (typeof value !== "number" || !Number.isFinite(value)) {
        throw new SchemaError(`${path}: non-numeric value in column ${column}`);
      }
    }
  }
  return parsed.data;
}

export function loadSweep(path: string): SweepRow[] {
  return loadRows(path, [SWEEP_COLUMNS]) as unknown as SweepRow[];
}

export function loadBands(path: string): BandsRow[] {
  return loadRows(path, [BANDS_COLUMNS]) as unknown as BandsRow[];
}

/** Accept either a sweep or a single-point summary; the point header is the
 * sweep header plus the run's temperature and epsilon, so rows from either
 * satisfy the sweep shape. */
export function loadSweepOrPoint(path: string): SweepRow[] {
  return loadRows(path, [SWEEP_COLUMNS, POINT_COLUMNS]) as unknown as SweepRow[];
}
