export interface LineFit {
  slope: number;
  intercept: number;
  rSquared: number;
}

/** Ordinary least-squares line through (xs, ys) with its R^2. */
export function leastSquaresLine(xs: number[], ys: number[]): LineFit {
  const n = xs.length;
  if (n !== ys.length || n < 2) {
    throw new Error(`need at least two paired points, got ${n}/${ys.length}`);
  }
  const meanX = xs.reduce((a, b) => a + b, 0) / n;
  const meanY = ys.reduce((a, b) => a + b, 0) / n;
  let sxx = 0;
  let sxy = 0;
  for (let i = 0; i < n; i++) {
    sxx += (xs[i] - meanX) ** 2;
    sxy += (xs[i] - meanX) * (ys[i] - meanY);
  }
  if (sxx === 0) {
    throw new Error("degenerate fit: all x values identical");
  }
  const slope = sxy / sxx;
  const intercept = meanY - slope * meanX;
  let ssRes = 0;
  let ssTot = 0;
  for (let i = 0; i < n; i++) {
    ssRes += (ys[i] - (slope * xs[i] + intercept)) ** 2;
    ssTot += (ys[i] - meanY) ** 2;
  }
  const rSquared = ssTot === 0 ? 1 : 1 - ssRes / ssTot;
  return { slope, intercept, rSquared };
}
