import { readFileSync } from "node:fs";

export interface Table {
  columns: string[];
  rows: string[][];
}

/** Input file does not match the documented CSV contract. */
export class SchemaError extends Error {}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new SchemaError("empty file: no header row");
  }
  const [head, ...rest] = lines;
  const columns = head.split(",").map((cell) => cell.trim());
  const rows = rest.map((line) => line.split(",").map((cell) => cell.trim()));
  return { columns, rows };
}

/**
 * Read the named columns from a CSV file, rejecting files that are missing
 * a column (the error names it) or that carry no data rows.
 */
export function readColumns(path: string, required: string[]): Record<string, string[]> {
  const table = parseCsv(readFileSync(path, "utf8"));
  for (const name of required) {
    if (!table.columns.includes(name)) {
      throw new SchemaError(
        `${path}: missing column "${name}" (header has: ${table.columns.join(", ")})`,
      );
    }
  }
  if (table.rows.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  const out: Record<string, string[]> = {};
  for (const name of required) {
    const index = table.columns.indexOf(name);
    out[name] = table.rows.map((row) => row[index] ?? "");
  }
  return out;
}

export function asNumbers(values: string[], path: string, column: string): number[] {
  return values.map((value) => {
    const num = Number(value);
    if (!Number.isFinite(num)) {
      throw new SchemaError(`${path}: column "${column}" has non-numeric value "${value}"`);
    }
    return num;
  });
}
