/** Chart builders: each figure is a pure function of the CSVs behind it. */
import {
  binMeans,
  readSweep,
  readTimeSeries,
  requireFiles,
  SweepRow,
  TimeSeries,
} from "./csv.js";
import { divergingColor, fmt, MARGIN, Scale, SERIES_COLORS, SvgCanvas } from "./svg.js";

export const DEFAULT_BASELINE = 0.58311; // individual-only equilibrium (1-c_i)*z_i*s_ok

export const FIGURE_IDS = ["2", "3", "4", "5", "6", "A1", "A2"] as const;
export type FigureId = (typeof FIGURE_IDS)[number];

const N_BINS = 400;

interface Panel {
  x0: number;
  y0: number;
  w: number;
  h: number;
}

function panels(canvas: SvgCanvas, n: number): Panel[] {
  const gap = 40;
  const w = (canvas.width - MARGIN.left - MARGIN.right - gap * (n - 1)) / n;
  const h = canvas.height - MARGIN.top - MARGIN.bottom;
  const out: Panel[] = [];
  for (let i = 0; i < n; i++) {
    out.push({ x0: MARGIN.left + i * (w + gap), y0: MARGIN.top, w, h });
  }
  return out;
}

function frame(canvas: SvgCanvas, p: Panel, title: string, xLabel: string, yLabel: string): void {
  canvas.line(p.x0, p.y0 + p.h, p.x0 + p.w, p.y0 + p.h, "#333");
  canvas.line(p.x0, p.y0, p.x0, p.y0 + p.h, "#333");
  canvas.text(p.x0 + p.w / 2, p.y0 - 14, title, "middle", 13);
  canvas.text(p.x0 + p.w / 2, p.y0 + p.h + 34, xLabel, "middle");
  canvas.text(p.x0 - 42, p.y0 + p.h / 2, yLabel, "middle");
}

function yTicks(canvas: SvgCanvas, p: Panel, scale: Scale): void {
  for (const v of [0, 0.25, 0.5, 0.75, 1]) {
    const y = scale.apply(v);
    canvas.line(p.x0 - 4, y, p.x0, y, "#333");
    canvas.text(p.x0 - 8, y + 4, v.toString(), "end", 10);
  }
}

function baselineRule(canvas: SvgCanvas, p: Panel, scale: Scale, baseline: number): void {
  const y = scale.apply(baseline);
  canvas.line(p.x0, y, p.x0 + p.w, y, "#555", true);
  canvas.text(p.x0 + p.w, y - 4, String(baseline), "end", 10);
}

function drawSeries(
  canvas: SvgCanvas,
  p: Panel,
  series: TimeSeries,
  columns: Array<keyof TimeSeries>,
  baseline: number,
  title: string,
): void {
  const yScale = new Scale([0, 1], [p.y0 + p.h, p.y0]);
  frame(canvas, p, title, "timestep", "fraction");
  yTicks(canvas, p, yScale);
  const n = series.t.length;
  columns.forEach((col, i) => {
    const { x, y } = binMeans(series[col], N_BINS);
    const xScale = new Scale([0, n], [p.x0, p.x0 + p.w]);
    canvas.polyline(
      x.map((xv, k) => [xScale.apply(xv), yScale.apply(y[k])] as [number, number]),
      SERIES_COLORS[i],
    );
    canvas.text(p.x0 + 6, p.y0 + 14 + 14 * i, String(col), "start", 10);
  });
  baselineRule(canvas, p, yScale, baseline);
}

function timeSeriesFigure(
  files: Array<{ path: string; title: string; columns: Array<keyof TimeSeries> }>,
  baseline: number,
): string {
  const canvas = new SvgCanvas(340 * files.length + 80, 320);
  const ps = panels(canvas, files.length);
  files.forEach((f, i) => {
    drawSeries(canvas, ps[i], readTimeSeries(f.path), f.columns, baseline, f.title);
  });
  return canvas.render();
}

function groupedBars(baselineRows: SweepRow[], criticalRows: SweepRow[], baseline: number): string {
  const canvas = new SvgCanvas(520, 340);
  const [p] = panels(canvas, 1);
  const yScale = new Scale([0, 1], [p.y0 + p.h, p.y0]);
  frame(canvas, p, "equilibrium by environment change rate", "u", "equilibrium q_ok");
  yTicks(canvas, p, yScale);
  const us = baselineRows.map((r) => r.axis1_value);
  const groupW = p.w / us.length;
  const barW = groupW * 0.3;
  us.forEach((u, g) => {
    const cx = p.x0 + groupW * (g + 0.5);
    const pairs: Array<[SweepRow, string]> = [
      [baselineRows[g], SERIES_COLORS[0]],
      [criticalRows[g], SERIES_COLORS[1]],
    ];
    pairs.forEach(([row, color], b) => {
      const x = cx + (b - 1) * barW + barW * 0.1;
      const yTop = yScale.apply(row.equilibrium_mean);
      canvas.rect(x, yTop, barW * 0.8, p.y0 + p.h - yTop, color);
    });
    canvas.text(cx, p.y0 + p.h + 16, `u=${u}`, "middle", 10);
  });
  canvas.text(p.x0 + 6, p.y0 + 14, "copy only", "start", 10);
  canvas.text(p.x0 + 6, p.y0 + 28, "critical appraisal", "start", 10);
  baselineRule(canvas, p, yScale, baseline);
  return canvas.render();
}

function updateRateLines(rows: SweepRow[], baseline: number): string {
  const canvas = new SvgCanvas(560, 360);
  const [p] = panels(canvas, 1);
  const yScale = new Scale([0, 1], [p.y0 + p.h, p.y0]);
  frame(canvas, p, "equilibrium vs update rate", "update rate (1 - cost)", "equilibrium q_ok");
  yTicks(canvas, p, yScale);
  const us = [...new Set(rows.map((r) => r.axis2_value))];
  const xScale = new Scale([0, 1], [p.x0, p.x0 + p.w]);
  us.forEach((u, i) => {
    const line = rows
      .filter((r) => r.axis2_value === u)
      .map((r) => ({ rate: 1 - r.axis1_value, y: r.equilibrium_mean }))
      .sort((a, b) => a.rate - b.rate);
    canvas.polyline(
      line.map((d) => [xScale.apply(d.rate), yScale.apply(d.y)] as [number, number]),
      SERIES_COLORS[i],
    );
    canvas.text(p.x0 + 6, p.y0 + 14 + 14 * i, `u=${u}`, "start", 10);
  });
  for (const v of [0, 0.5, 1]) {
    canvas.text(xScale.apply(v), p.y0 + p.h + 16, v.toString(), "middle", 10);
  }
  baselineRule(canvas, p, yScale, baseline);
  return canvas.render();
}

function heatmap(canvas: SvgCanvas, p: Panel, rows: SweepRow[], baseline: number, title: string): void {
  const xs = [...new Set(rows.map((r) => r.axis2_value))].sort((a, b) => a - b);
  const ys = [...new Set(rows.map((r) => r.axis1_value))].sort((a, b) => a - b);
  frame(canvas, p, title, rows[0].axis2_name, rows[0].axis1_name);
  const cw = p.w / xs.length;
  const ch = p.h / ys.length;
  for (const row of rows) {
    const i = xs.indexOf(row.axis2_value);
    const j = ys.indexOf(row.axis1_value);
    const x = p.x0 + i * cw;
    const y = p.y0 + p.h - (j + 1) * ch;
    const fill = Number.isNaN(row.equilibrium_mean)
      ? "#cccccc"
      : divergingColor(row.equilibrium_mean, baseline, 0.4);
    canvas.rect(x, y, cw, ch, fill, "#888");
    if (!Number.isNaN(row.equilibrium_mean)) {
      canvas.text(x + cw / 2, y + ch / 2 + 4, fmt(row.equilibrium_mean), "middle", 10);
    }
  }
  xs.forEach((v, i) => canvas.text(p.x0 + (i + 0.5) * cw, p.y0 + p.h + 16, v.toString(), "middle", 10));
  ys.forEach((v, j) =>
    canvas.text(p.x0 - 8, p.y0 + p.h - (j + 0.5) * ch + 4, v.toString(), "end", 10),
  );
}

export function renderFigure(figureId: string, csvDir: string, baseline = DEFAULT_BASELINE): string {
  switch (figureId as FigureId) {
    case "2": {
      const [a, b] = requireFiles(csvDir, [
        "fig2_individual_timeseries.csv",
        "fig2_ai_social_timeseries.csv",
      ]);
      return timeSeriesFigure(
        [
          { path: a, title: "individual learners only", columns: ["q_ok"] },
          { path: b, title: "individual + AI social learners", columns: ["q_ok", "frac_individual"] },
        ],
        baseline,
      );
    }
    case "3": {
      const [a, b] = requireFiles(csvDir, ["fig3_baseline_sweep.csv", "fig3_critical_sweep.csv"]);
      return groupedBars(readSweep(a), readSweep(b), baseline);
    }
    case "4": {
      const [a] = requireFiles(csvDir, ["fig4_update_schedule_sweep.csv"]);
      return updateRateLines(readSweep(a), baseline);
    }
    case "5": {
      const [a, b] = requireFiles(csvDir, ["fig5_baseline_sweep.csv", "fig5_critical_sweep.csv"]);
      const canvas = new SvgCanvas(760, 360);
      const ps = panels(canvas, 2);
      heatmap(canvas, ps[0], readSweep(a), baseline, "copy only");
      heatmap(canvas, ps[1], readSweep(b), baseline, "critical appraisal");
      return canvas.render();
    }
    case "6": {
      const [a, b, c] = requireFiles(csvDir, [
        "fig6_ai_only_feedback_timeseries.csv",
        "fig6_two_source_feedback_timeseries.csv",
        "fig6_two_source_nofeedback_timeseries.csv",
      ]);
      return timeSeriesFigure(
        [
          { path: a, title: "AI only, skill decay", columns: ["q_ok", "mean_kappa"] },
          { path: b, title: "two sources, skill decay", columns: ["q_ok", "mean_ai_propensity"] },
          { path: c, title: "two sources, no decay", columns: ["q_ok", "mean_ai_propensity"] },
        ],
        baseline,
      );
    }
    case "A1": {
      const [a, b] = requireFiles(csvDir, [
        "figA1_individual_timeseries.csv",
        "figA1_human_social_timeseries.csv",
      ]);
      return timeSeriesFigure(
        [
          { path: a, title: "individual learners only", columns: ["q_ok"] },
          { path: b, title: "individual + human social", columns: ["q_ok", "frac_individual"] },
        ],
        baseline,
      );
    }
    case "A2": {
      const [a] = requireFiles(csvDir, ["figA2_ai_social_timeseries.csv"]);
      return timeSeriesFigure(
        [{ path: a, title: "AI social learners", columns: ["q_ok", "frac_individual"] }],
        baseline,
      );
    }
    default:
      throw new Error(`unknown figure id ${figureId}; expected one of ${FIGURE_IDS.join(", ")}`);
  }
}
