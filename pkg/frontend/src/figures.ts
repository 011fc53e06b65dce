import { basename } from "node:path";

import { asNumbers, readColumns, SchemaError } from "./csv.js";
import { leastSquaresLine } from "./fit.js";
import { PALETTE, renderPlot, Series } from "./svg.js";

export type FigureId =
  | "profiles"
  | "collimation_powers"
  | "spectrum"
  | "lambda_max"
  | "lambda_min";

export const FIGURE_IDS: FigureId[] = [
  "profiles",
  "collimation_powers",
  "spectrum",
  "lambda_max",
  "lambda_min",
];

export interface FigureResult {
  svg: string;
  /** Extra lines the script prints (fit slopes, R^2). */
  notes: string[];
}

function singleInput(id: FigureId, inputPaths: string[]): string {
  if (inputPaths.length !== 1) {
    throw new SchemaError(`figure "${id}" takes exactly one input file, got ${inputPaths.length}`);
  }
  return inputPaths[0];
}

function profileLabel(path: string): string {
  const name = basename(path);
  const power = name.match(/momentum_power_(\d+)/);
  if (power) return `pi^${power[1]}`;
  if (name.includes("random")) return "random";
  return name.replace(/\.csv$/, "");
}

function renderProfiles(inputPaths: string[]): FigureResult {
  if (inputPaths.length === 0) {
    throw new SchemaError('figure "profiles" needs at least one profile CSV');
  }
  const labelled = inputPaths
    .map((path) => ({ path, label: profileLabel(path) }))
    .sort((a, b) => a.label.localeCompare(b.label, undefined, { numeric: true }));
  const series: Series[] = labelled.map(({ path, label }, i) => {
    const cols = readColumns(path, ["a", "weight"]);
    const a = asNumbers(cols.a, path, "a");
    const weight = asNumbers(cols.weight, path, "weight");
    const order = a.map((_, k) => k).sort((x, y) => a[x] - a[y]);
    return {
      label,
      xs: order.map((k) => a[k]),
      ys: order.map((k) => weight[k]),
      color: PALETTE[i % PALETTE.length],
    };
  });
  const svg = renderPlot({
    title: "Shift profiles along the position direction",
    xLabel: "shift a",
    yLabel: "profile weight",
    series,
    logY: true,
  });
  return { svg, notes: [] };
}

function renderCollimationPowers(inputPaths: string[]): FigureResult {
  const path = singleInput("collimation_powers", inputPaths);
  const cols = readColumns(path, ["operator", "n", "c_phi"]);
  const powerX: number[] = [];
  const powerY: number[] = [];
  let baseline: number | undefined;
  for (let i = 0; i < cols.operator.length; i++) {
    if (cols.operator[i].startsWith("momentum_power_")) {
      powerX.push(asNumbers([cols.n[i]], path, "n")[0]);
      powerY.push(asNumbers([cols.c_phi[i]], path, "c_phi")[0]);
    } else if (cols.operator[i] === "random_hermitian") {
      baseline = asNumbers([cols.c_phi[i]], path, "c_phi")[0];
    }
  }
  if (powerX.length === 0) {
    throw new SchemaError(`${path}: no momentum_power rows in summary`);
  }
  const order = powerX.map((_, k) => k).sort((x, y) => powerX[x] - powerX[y]);
  const series: Series[] = [
    {
      label: "C_phi(pi^n)",
      xs: order.map((k) => powerX[k]),
      ys: order.map((k) => powerY[k]),
      color: PALETTE[0],
      markers: true,
    },
  ];
  if (baseline !== undefined) {
    series.push({
      label: "random baseline",
      xs: [Math.min(...powerX), Math.max(...powerX)],
      ys: [baseline, baseline],
      color: PALETTE[1],
      dashed: true,
    });
  }
  const svg = renderPlot({
    title: "Position collimation of momentum powers",
    xLabel: "power n",
    yLabel: "C_phi",
    series,
  });
  return { svg, notes: [] };
}

function spectrumLabel(path: string): string {
  const name = basename(path);
  const tag = name.match(/omega-([0-9.eE+-]+)/);
  return tag ? `omega=${tag[1]}` : name.replace(/\.csv$/, "");
}

function renderSpectrum(inputPaths: string[]): FigureResult {
  if (inputPaths.length === 0) {
    throw new SchemaError('figure "spectrum" needs at least one spectrum CSV');
  }
  const series: Series[] = inputPaths.map((path, i) => {
    const cols = readColumns(path, ["k", "lambda_over_omega"]);
    return {
      label: spectrumLabel(path),
      xs: asNumbers(cols.k, path, "k"),
      ys: asNumbers(cols.lambda_over_omega, path, "lambda_over_omega"),
      color: PALETTE[i % PALETTE.length],
    };
  });
  const maxK = Math.max(...series.map((s) => Math.max(...s.xs)));
  series.push({
    label: "equispaced ladder",
    xs: [0, maxK],
    ys: [0.5, maxK + 0.5],
    color: "#444",
    dashed: true,
  });
  const svg = renderPlot({
    title: "Oscillator spectrum, normalized by frequency",
    xLabel: "level k",
    yLabel: "lambda_k / omega",
    series,
  });
  return { svg, notes: [] };
}

interface SweepGroups {
  omegas: number[];
  byOmega: Map<number, { dims: number[]; values: number[] }>;
}

function groupSweep(path: string, valueColumn: string): SweepGroups {
  const cols = readColumns(path, ["dim", "omega", valueColumn]);
  const dims = asNumbers(cols.dim, path, "dim");
  const omegas = asNumbers(cols.omega, path, "omega");
  const values = asNumbers(cols[valueColumn], path, valueColumn);
  const byOmega = new Map<number, { dims: number[]; values: number[] }>();
  for (let i = 0; i < dims.length; i++) {
    const group = byOmega.get(omegas[i]) ?? { dims: [], values: [] };
    group.dims.push(dims[i]);
    group.values.push(values[i]);
    byOmega.set(omegas[i], group);
  }
  return { omegas: [...byOmega.keys()].sort((a, b) => a - b), byOmega };
}

function renderLambdaMax(inputPaths: string[]): FigureResult {
  const path = singleInput("lambda_max", inputPaths);
  const groups = groupSweep(path, "lambda_max_over_omega");
  const series: Series[] = [];
  const notes: string[] = [];
  groups.omegas.forEach((omega, i) => {
    const { dims, values } = groups.byOmega.get(omega)!;
    const color = PALETTE[i % PALETTE.length];
    series.push({ label: `omega=${omega}`, xs: dims, ys: values, color, markers: true, line: false });
    if (dims.length >= 2) {
      const fit = leastSquaresLine(dims, values);
      const lo = Math.min(...dims);
      const hi = Math.max(...dims);
      series.push({
        label: `fit omega=${omega}`,
        xs: [lo, hi],
        ys: [fit.slope * lo + fit.intercept, fit.slope * hi + fit.intercept],
        color,
        dashed: true,
      });
      notes.push(
        `omega=${omega}: slope=${fit.slope.toPrecision(6)}, intercept=${fit.intercept.toPrecision(6)}, R^2=${fit.rSquared.toFixed(6)}`,
      );
    }
  });
  const svg = renderPlot({
    title: "Top eigenvalue versus dimension",
    xLabel: "dimension n",
    yLabel: "lambda_max / omega",
    series,
  });
  return { svg, notes };
}

function renderLambdaMin(inputPaths: string[]): FigureResult {
  const path = singleInput("lambda_min", inputPaths);
  const groups = groupSweep(path, "lambda_min_over_omega");
  const series: Series[] = groups.omegas.map((omega, i) => {
    const { dims, values } = groups.byOmega.get(omega)!;
    return {
      label: `omega=${omega}`,
      xs: dims,
      ys: values,
      color: PALETTE[i % PALETTE.length],
      markers: true,
    };
  });
  const allDims = series.flatMap((s) => s.xs);
  series.push({
    label: "limit 1/2",
    xs: [Math.min(...allDims), Math.max(...allDims)],
    ys: [0.5, 0.5],
    color: "#444",
    dashed: true,
  });
  const svg = renderPlot({
    title: "Ground level versus dimension",
    xLabel: "dimension n",
    yLabel: "lambda_min / omega",
    series,
  });
  return { svg, notes: [] };
}

export function renderFigure(id: FigureId, inputPaths: string[]): FigureResult {
  switch (id) {
    case "profiles":
      return renderProfiles(inputPaths);
    case "collimation_powers":
      return renderCollimationPowers(inputPaths);
    case "spectrum":
      return renderSpectrum(inputPaths);
    case "lambda_max":
      return renderLambdaMax(inputPaths);
    case "lambda_min":
      return renderLambdaMin(inputPaths);
    default: {
      const exhaustive: never = id;
      throw new Error(`unknown figure id ${exhaustive}`);
    }
  }
}
