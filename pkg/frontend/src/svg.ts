/** Minimal deterministic SVG builder: same inputs, byte-identical output. */

export interface Margin {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export const MARGIN: Margin = { top: 36, right: 24, bottom: 44, left: 56 };

export function fmt(x: number): string {
  // fixed formatting so output never depends on locale or float noise
  return Number(x.toFixed(3)).toString();
}

export class Scale {
  constructor(
    readonly domain: [number, number],
    readonly range: [number, number],
  ) {}

  apply(v: number): number {
    const [d0, d1] = this.domain;
    const [r0, r1] = this.range;
    if (d1 === d0) return (r0 + r1) / 2;
    return r0 + ((v - d0) / (d1 - d0)) * (r1 - r0);
  }
}

export class SvgCanvas {
  private parts: string[] = [];

  constructor(
    readonly width: number,
    readonly height: number,
  ) {}

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, dashed = false, width = 1): void {
    const dash = dashed ? ' stroke-dasharray="6 4"' : "";
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" stroke-width="${width}"${dash}/>`,
    );
  }

  polyline(points: Array<[number, number]>, stroke: string, width = 1.5): void {
    const pts = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(`<polyline points="${pts}" fill="none" stroke="${stroke}" stroke-width="${width}"/>`);
  }

  rect(x: number, y: number, w: number, h: number, fill: string, stroke = "none"): void {
    this.parts.push(
      `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" fill="${fill}" stroke="${stroke}"/>`,
    );
  }

  text(x: number, y: number, content: string, anchor: "start" | "middle" | "end" = "start", size = 12): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" text-anchor="${anchor}" font-family="sans-serif" font-size="${size}">${escapeXml(content)}</text>`,
    );
  }

  render(): string {
    return [
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">`,
      `<rect x="0" y="0" width="${this.width}" height="${this.height}" fill="white"/>`,
      ...this.parts,
      "</svg>",
    ].join("\n");
  }
}

export function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export const SERIES_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"];

/** Blue -> white -> red ramp centered on a reference value. */
export function divergingColor(v: number, center: number, halfSpan: number): string {
  const t = Math.max(-1, Math.min(1, (v - center) / halfSpan));
  const lerp = (a: number, b: number, u: number) => Math.round(a + (b - a) * u);
  const [r, g, b] =
    t >= 0
      ? [lerp(255, 214, t), lerp(255, 39, t), lerp(255, 40, t)]
      : [lerp(255, 31, -t), lerp(255, 119, -t), lerp(255, 180, -t)];
  return `rgb(${r},${g},${b})`;
}
