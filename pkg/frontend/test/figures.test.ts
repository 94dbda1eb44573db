import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { binMeans, MissingInputError, readSweep, readTimeSeries } from "../src/csv.js";
import { DEFAULT_BASELINE, renderFigure } from "../src/figures.js";
import { main } from "../src/cli.js";
import { Scale, divergingColor } from "../src/svg.js";

const TS_HEADER = "t,q_ok,frac_individual,mean_ai_propensity,ai_level,mean_kappa,env_changed";
const SWEEP_HEADER =
  "axis1_name,axis1_value,axis2_name,axis2_value,equilibrium_mean,std_error,seeds,status";

function timeSeriesCsv(n: number): string {
  const rows = [TS_HEADER];
  for (let t = 0; t < n; t++) {
    const q = 0.5 + 0.1 * Math.sin(t / 7);
    rows.push(`${t},${q.toFixed(6)},0.7,0.5,${q.toFixed(6)},1,${t % 50 === 0 ? 1 : 0}`);
  }
  return rows.join("\n") + "\n";
}

function sweepCsv(rows: Array<[string, number, string, number, number]>): string {
  const out = [SWEEP_HEADER];
  for (const [n1, v1, n2, v2, mean] of rows) {
    out.push(`${n1},${v1},${n2},${v2},${mean},0.001,3,ok`);
  }
  return out.join("\n") + "\n";
}

let dir: string;

beforeAll(() => {
  dir = fs.mkdtempSync(path.join(os.tmpdir(), "figures-"));
  fs.writeFileSync(path.join(dir, "fig2_individual_timeseries.csv"), timeSeriesCsv(500));
  fs.writeFileSync(path.join(dir, "fig2_ai_social_timeseries.csv"), timeSeriesCsv(500));
  const uRows: Array<[string, number, string, number, number]> = [];
  for (const u of [0.01, 0.1, 0.5]) uRows.push(["u", u, "", NaN, 0.58]);
  fs.writeFileSync(path.join(dir, "fig3_baseline_sweep.csv"), sweepCsv(uRows));
  fs.writeFileSync(
    path.join(dir, "fig3_critical_sweep.csv"),
    sweepCsv(uRows.map(([n1, v1, n2, v2]) => [n1, v1, n2, v2, 0.85])),
  );
  const schedule: Array<[string, number, string, number, number]> = [];
  for (const cost of [0.9, 0.5, 0.0]) {
    for (const u of [0.01, 0.1, 0.5]) {
      schedule.push(["ai_policy.social_update_cost", cost, "u", u, 0.9 - cost / 3 - u / 10]);
    }
  }
  fs.writeFileSync(path.join(dir, "fig4_update_schedule_sweep.csv"), sweepCsv(schedule));
  const grid: Array<[string, number, string, number, number]> = [];
  for (const c of [0.1, 0.5, 0.9]) {
    for (const z of [0.1, 0.5, 0.9]) {
      grid.push(["ai_policy.individual_update_cost", c, "ai_policy.z_ai", z, (1 - c) * z]);
    }
  }
  fs.writeFileSync(path.join(dir, "fig5_baseline_sweep.csv"), sweepCsv(grid));
  fs.writeFileSync(path.join(dir, "fig5_critical_sweep.csv"), sweepCsv(grid));
  for (const name of [
    "fig6_ai_only_feedback_timeseries.csv",
    "fig6_two_source_feedback_timeseries.csv",
    "fig6_two_source_nofeedback_timeseries.csv",
    "figA1_individual_timeseries.csv",
    "figA1_human_social_timeseries.csv",
    "figA2_ai_social_timeseries.csv",
  ]) {
    fs.writeFileSync(path.join(dir, name), timeSeriesCsv(300));
  }
});

afterAll(() => {
  fs.rmSync(dir, { recursive: true, force: true });
});

describe("csv readers", () => {
  it("parses the time-series schema", () => {
    const s = readTimeSeries(path.join(dir, "fig2_individual_timeseries.csv"));
    expect(s.t.length).toBe(500);
    expect(s.t[0]).toBe(0);
    expect(s.env_changed[0]).toBe(1);
    expect(s.q_ok.every((q) => q >= 0 && q <= 1)).toBe(true);
  });

  it("parses the sweep schema", () => {
    const rows = readSweep(path.join(dir, "fig3_baseline_sweep.csv"));
    expect(rows.length).toBe(3);
    expect(rows[0].axis1_name).toBe("u");
    expect(rows[0].status).toBe("ok");
  });

  it("rejects a wrong header", () => {
    const bad = path.join(dir, "bad.csv");
    fs.writeFileSync(bad, "a,b\n1,2\n");
    expect(() => readTimeSeries(bad)).toThrow(/header/);
    expect(() => readSweep(bad)).toThrow(/header/);
  });

  it("bins long series by fixed-width means", () => {
    const { x, y } = binMeans(Array.from({ length: 1000 }, (_, i) => i), 10);
    expect(x.length).toBe(10);
    expect(y[0]).toBeCloseTo(49.5);
    expect(y[9]).toBeCloseTo(949.5);
  });
});

describe("renderFigure", () => {
  for (const id of ["2", "3", "4", "6", "A1", "A2"]) {
    it(`figure ${id} draws the dashed baseline reference`, () => {
      const svg = renderFigure(id, dir);
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg).toContain('stroke-dasharray="6 4"');
      expect(svg).toContain(String(DEFAULT_BASELINE));
    });
  }

  it("figure 5 renders two heatmaps colored around the baseline", () => {
    const svg = renderFigure("5", dir);
    expect(svg).toContain("copy only");
    expect(svg).toContain("critical appraisal");
    // 18 grid cells plus the two backgrounds
    expect((svg.match(/<rect /g) ?? []).length).toBeGreaterThanOrEqual(19);
  });

  it("is a pure function of the CSVs", () => {
    expect(renderFigure("4", dir)).toBe(renderFigure("4", dir));
  });

  it("reports every missing input by name", () => {
    const empty = fs.mkdtempSync(path.join(os.tmpdir(), "empty-"));
    try {
      renderFigure("2", empty);
      throw new Error("expected MissingInputError");
    } catch (e) {
      expect(e).toBeInstanceOf(MissingInputError);
      expect((e as MissingInputError).missing).toEqual([
        "fig2_individual_timeseries.csv",
        "fig2_ai_social_timeseries.csv",
      ]);
    } finally {
      fs.rmSync(empty, { recursive: true, force: true });
    }
  });

  it("rejects an unknown figure id", () => {
    expect(() => renderFigure("99", dir)).toThrow(/unknown figure/);
  });
});

describe("cli", () => {
  it("writes an SVG and exits 0", () => {
    const out = path.join(dir, "fig4.svg");
    const rc = main(["--figure", "4", "--csv-dir", dir, "--out", out]);
    expect(rc).toBe(0);
    expect(fs.readFileSync(out, "utf8")).toContain("stroke-dasharray");
  });

  it("exits 4 on missing inputs", () => {
    const empty = fs.mkdtempSync(path.join(os.tmpdir(), "empty-"));
    try {
      const rc = main(["--figure", "2", "--csv-dir", empty, "--out", path.join(empty, "x.svg")]);
      expect(rc).toBe(4);
    } finally {
      fs.rmSync(empty, { recursive: true, force: true });
    }
  });

  it("exits 2 on bad usage", () => {
    expect(main([])).toBe(2);
    expect(main(["--figure", "4", "--csv-dir", dir, "--out", "x", "--baseline", "nope"])).toBe(2);
  });
});

describe("svg helpers", () => {
  it("scales linearly and handles a degenerate domain", () => {
    const s = new Scale([0, 10], [100, 0]);
    expect(s.apply(5)).toBe(50);
    expect(new Scale([3, 3], [0, 10]).apply(3)).toBe(5);
  });

  it("diverging color is white at the center and clamps", () => {
    expect(divergingColor(0.58311, 0.58311, 0.4)).toBe("rgb(255,255,255)");
    expect(divergingColor(99, 0.58311, 0.4)).toBe("rgb(214,39,40)");
    expect(divergingColor(-99, 0.58311, 0.4)).toBe("rgb(31,119,180)");
  });
});
