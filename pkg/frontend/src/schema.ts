/**
 * Column contracts for the simulator's CSV outputs.
 *
 * Each loader validates the header against one of these lists and refuses
 * files that do not match exactly, so a schema drift in the producer fails
 * loudly here instead of rendering a wrong figure.
 */

export const SWEEP_COLUMNS = [
  "eta_over_etac",
  "omega_soft",
  "gamma_landau",
  "gamma_beliaev",
] as const;

export const BANDS_COLUMNS = ["q", "omega1", "omega2", "omega3"] as const;

export const PAIR_DENSITY_COLUMNS = ["omega", "d_beliaev", "d_landau"] as const;

export const POINT_COLUMNS = [
  "eta_over_etac",
  "omega_soft",
  "gamma_landau",
  "gamma_beliaev",
  "temperature",
  "epsilon",
] as const;

export interface SweepRow {
  eta_over_etac: number;
  omega_soft: number;
  gamma_landau: number;
  gamma_beliaev: number;
}

export interface BandsRow {
  q: number;
  omega1: number;
  omega2: number;
  omega3: number;
}

export type FigureId = "2a" | "2bc" | "3" | "3-inset";

export interface AxisRange {
  min?: number;
  max?: number;
}

export interface FigureSpec {
  figure: FigureId;
  /** one CSV for 2a/2bc/3; three sweep CSVs (one per epsilon) for 3-inset */
  csvPaths: string[];
  outPath: string;
  xRange?: AxisRange;
  yRange?: AxisRange;
}

export class SchemaError extends Error {}
