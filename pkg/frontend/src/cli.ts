import { writeFileSync } from "node:fs";

import { FigureId, renderFigure } from "./figures.js";

interface Args {
  inputs: string[];
  out: string;
}

export function parseArgs(argv: string[]): Args {
  const inputs: string[] = [];
  let out: string | undefined;
  let collecting: "in" | "out" | undefined;
  for (const token of argv) {
    if (token === "--in") {
      collecting = "in";
    } else if (token === "--out") {
      collecting = "out";
    } else if (token.startsWith("--")) {
      throw new Error(`unknown flag ${token}`);
    } else if (collecting === "in") {
      inputs.push(token);
    } else if (collecting === "out") {
      if (out !== undefined) throw new Error("--out given twice");
      out = token;
      collecting = undefined;
    } else {
      throw new Error(`unexpected argument ${token}`);
    }
  }
  if (inputs.length === 0) throw new Error("at least one --in path is required");
  if (out === undefined) throw new Error("--out path is required");
  return { inputs, out };
}

/** Body shared by the five figure scripts; returns the process exit code. */
export function runFigure(id: FigureId, argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`usage: fig-${id.replace(/_/g, "-")} --in <csv...> --out <svg>`);
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 2;
  }
  try {
    const { svg, notes } = renderFigure(id, args.inputs);
    writeFileSync(args.out, svg, "utf8");
    for (const note of notes) console.log(note);
    console.log(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
}
