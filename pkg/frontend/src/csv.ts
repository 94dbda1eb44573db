/** Readers for the simulator's two CSV schemas (time series and sweeps). */
import * as fs from "node:fs";

export const TIMESERIES_COLUMNS = [
  "t",
  "q_ok",
  "frac_individual",
  "mean_ai_propensity",
  "ai_level",
  "mean_kappa",
  "env_changed",
] as const;

export const SWEEP_COLUMNS = [
  "axis1_name",
  "axis1_value",
  "axis2_name",
  "axis2_value",
  "equilibrium_mean",
  "std_error",
  "seeds",
  "status",
] as const;

export interface TimeSeries {
  t: number[];
  q_ok: number[];
  frac_individual: number[];
  mean_ai_propensity: number[];
  ai_level: number[];
  mean_kappa: number[];
  env_changed: number[];
}

export interface SweepRow {
  axis1_name: string;
  axis1_value: number;
  axis2_name: string;
  axis2_value: number;
  equilibrium_mean: number;
  std_error: number;
  seeds: number;
  status: string;
}

export class MissingInputError extends Error {
  readonly missing: string[];
  constructor(missing: string[]) {
    super(`missing input CSV(s): ${missing.join(", ")}`);
    this.name = "MissingInputError";
    this.missing = missing;
  }
}

function parseCsv(path: string): string[][] {
  // the simulator never quotes fields, so a plain split is exact
  const text = fs.readFileSync(path, "utf8");
  return text
    .split(/\r?\n/)
    .filter((line) => line.length > 0)
    .map((line) => line.split(","));
}

export function readTimeSeries(path: string): TimeSeries {
  const rows = parseCsv(path);
  const header = rows.shift();
  if (!header || header.join(",") !== TIMESERIES_COLUMNS.join(",")) {
    throw new Error(`unexpected time-series header in ${path}`);
  }
  const series: TimeSeries = {
    t: [],
    q_ok: [],
    frac_individual: [],
    mean_ai_propensity: [],
    ai_level: [],
    mean_kappa: [],
    env_changed: [],
  };
  for (const row of rows) {
    TIMESERIES_COLUMNS.forEach((name, i) => series[name].push(Number(row[i])));
  }
  return series;
}

export function readSweep(path: string): SweepRow[] {
  const rows = parseCsv(path);
  const header = rows.shift();
  if (!header || header.join(",") !== SWEEP_COLUMNS.join(",")) {
    throw new Error(`unexpected sweep header in ${path}`);
  }
  return rows.map((row) => ({
    axis1_name: row[0],
    axis1_value: Number(row[1]),
    axis2_name: row[2],
    axis2_value: Number(row[3]),
    equilibrium_mean: Number(row[4]),
    std_error: Number(row[5]),
    seeds: Number(row[6]),
    status: row[7],
  }));
}

export function requireFiles(csvDir: string, names: string[]): string[] {
  const missing = names.filter((n) => !fs.existsSync(`${csvDir}/${n}`));
  if (missing.length > 0) throw new MissingInputError(missing);
  return names.map((n) => `${csvDir}/${n}`);
}

/** Mean of fixed-width bins; keeps long runs renderable without resampling artifacts. */
export function binMeans(xs: number[], nBins: number): { x: number[]; y: number[] } {
  if (xs.length <= nBins) {
    return { x: xs.map((_, i) => i), y: xs.slice() };
  }
  const width = Math.floor(xs.length / nBins);
  const x: number[] = [];
  const y: number[] = [];
  for (let b = 0; b < nBins; b++) {
    let sum = 0;
    for (let i = b * width; i < (b + 1) * width; i++) sum += xs[i];
    x.push(b * width + width / 2);
    y.push(sum / width);
  }
  return { x, y };
}
