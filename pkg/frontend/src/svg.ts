/** Minimal dependency-free SVG line/scatter plotting. */

export interface Series {
  label: string;
  xs: number[];
  ys: number[];
  color: string;
  line?: boolean;
  markers?: boolean;
  dashed?: boolean;
}

export interface PlotSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  logY?: boolean;
  width?: number;
  height?: number;
}

export const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
];

const MARGIN = { top: 42, right: 24, bottom: 50, left: 72 };

function escapeText(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Tick positions covering [lo, hi] at a 1-2-5 spacing. */
export function linearTicks(lo: number, hi: number, target = 6): number[] {
  if (!(hi > lo)) {
    const pad = Math.abs(lo) > 0 ? Math.abs(lo) / 2 : 0.5;
    return linearTicks(lo - pad, hi + pad, target);
  }
  const rawStep = (hi - lo) / target;
  const magnitude = 10 ** Math.floor(Math.log10(rawStep));
  let step = magnitude;
  for (const mult of [1, 2, 5, 10]) {
    if (mult * magnitude >= rawStep) {
      step = mult * magnitude;
      break;
    }
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function formatTick(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e5 || abs < 1e-3) return value.toExponential(0);
  return String(Number(value.toPrecision(6)));
}

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

export function renderPlot(spec: PlotSpec): string {
  const width = spec.width ?? 760;
  const height = spec.height ?? 480;
  const innerW = width - MARGIN.left - MARGIN.right;
  const innerH = height - MARGIN.top - MARGIN.bottom;

  const xsAll: number[] = [];
  const ysAll: number[] = [];
  for (const s of spec.series) {
    for (let i = 0; i < s.xs.length; i++) {
      const y = s.ys[i];
      if (spec.logY && !(y > 0)) continue;
      xsAll.push(s.xs[i]);
      ysAll.push(spec.logY ? Math.log10(y) : y);
    }
  }
  if (xsAll.length === 0) {
    throw new Error(`figure "${spec.title}" has no drawable points`);
  }
  let [xLo, xHi] = extent(xsAll);
  let [yLo, yHi] = extent(ysAll);
  if (xLo === xHi) {
    xLo -= 0.5;
    xHi += 0.5;
  }
  if (yLo === yHi) {
    yLo -= 0.5;
    yHi += 0.5;
  }
  const yPad = (yHi - yLo) * 0.05;
  yLo -= yPad;
  yHi += yPad;

  const sx = (x: number) => MARGIN.left + ((x - xLo) / (xHi - xLo)) * innerW;
  const sy = (y: number) => {
    const value = spec.logY ? Math.log10(y) : y;
    return MARGIN.top + innerH - ((value - yLo) / (yHi - yLo)) * innerH;
  };

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    `<text x="${width / 2}" y="24" text-anchor="middle" font-size="16">${escapeText(spec.title)}</text>`,
  );

  // frame and grid
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${innerW}" height="${innerH}" fill="none" stroke="#333"/>`,
  );
  const xTicks = linearTicks(xLo, xHi);
  for (const t of xTicks) {
    const px = sx(t);
    if (px < MARGIN.left - 1e-6 || px > MARGIN.left + innerW + 1e-6) continue;
    parts.push(
      `<line x1="${px.toFixed(2)}" y1="${MARGIN.top}" x2="${px.toFixed(2)}" y2="${MARGIN.top + innerH}" stroke="#ddd"/>`,
      `<text x="${px.toFixed(2)}" y="${MARGIN.top + innerH + 18}" text-anchor="middle" font-size="11">${formatTick(t)}</text>`,
    );
  }
  const yTickValues = spec.logY
    ? linearTicks(yLo, yHi, 6).map((t) => Math.round(t))
    : linearTicks(yLo, yHi);
  for (const t of new Set(yTickValues)) {
    const scaled = MARGIN.top + innerH - ((t - yLo) / (yHi - yLo)) * innerH;
    if (scaled < MARGIN.top - 1e-6 || scaled > MARGIN.top + innerH + 1e-6) continue;
    const label = spec.logY ? `1e${t}` : formatTick(t);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${scaled.toFixed(2)}" x2="${MARGIN.left + innerW}" y2="${scaled.toFixed(2)}" stroke="#ddd"/>`,
      `<text x="${MARGIN.left - 8}" y="${(scaled + 4).toFixed(2)}" text-anchor="end" font-size="11">${label}</text>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left + innerW / 2}" y="${height - 10}" text-anchor="middle" font-size="13">${escapeText(spec.xLabel)}</text>`,
    `<text x="18" y="${MARGIN.top + innerH / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 ${MARGIN.top + innerH / 2})">${escapeText(spec.yLabel)}</text>`,
  );

  // data
  for (const s of spec.series) {
    const points: string[] = [];
    const markers: string[] = [];
    for (let i = 0; i < s.xs.length; i++) {
      const y = s.ys[i];
      if (spec.logY && !(y > 0)) continue;
      const px = sx(s.xs[i]);
      const py = sy(y);
      points.push(`${px.toFixed(2)},${py.toFixed(2)}`);
      if (s.markers) {
        markers.push(`<circle cx="${px.toFixed(2)}" cy="${py.toFixed(2)}" r="3" fill="${s.color}"/>`);
      }
    }
    if (s.line !== false && points.length > 1) {
      const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
      parts.push(
        `<polyline points="${points.join(" ")}" fill="none" stroke="${s.color}" stroke-width="1.6"${dash}/>`,
      );
    }
    parts.push(...markers);
  }

  // legend
  const legendX = MARGIN.left + innerW - 170;
  let legendY = MARGIN.top + 14;
  for (const s of spec.series) {
    const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
    parts.push(
      `<line x1="${legendX}" y1="${legendY - 4}" x2="${legendX + 26}" y2="${legendY - 4}" stroke="${s.color}" stroke-width="2"${dash}/>`,
      `<text x="${legendX + 32}" y="${legendY}" font-size="12">${escapeText(s.label)}</text>`,
    );
    legendY += 17;
  }

  parts.push("</svg>");
  return parts.join("\n");
}
