/**
 * Reader for the benchmark result CSV schema.
 *
 * The column set is pinned by the benchmark harness; rows whose status is
 * not "ok" carry empty timing cells. Parsing is strict: a missing schema
 * column or a ragged row is an error naming the column or line.
 */

export const REQUIRED_COLUMNS = [
  'variant',
  'n',
  'steps',
  'threads_requested',
  'threads_resolved',
  'precision',
  'block_size',
  'repetitions',
  'mean_seconds',
  'stddev_seconds',
  'gflops',
  'status',
] as const;

export class CsvSchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'CsvSchemaError';
  }
}

export interface ResultRow {
  variant: string;
  n: number;
  steps: number;
  threadsRequested: string;
  threadsResolved: string;
  precision: string;
  blockSize: string;
  repetitions: number;
  meanSeconds: number | null;
  stddevSeconds: number | null;
  gflops: number | null;
  status: string;
}

export interface ResultTable {
  columns: string[];
  rows: ResultRow[];
}

/** Minimal RFC-4180 parser: quoted fields, doubled quotes, CRLF or LF. */
export function parseCsv(text: string): string[][] {
  const grid: string[][] = [];
  let row: string[] = [];
  let field = '';
  let inQuotes = false;
  let i = 0;
  while (i < text.length) {
    const ch = text[i]!;
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 2;
        } else {
          inQuotes = false;
          i += 1;
        }
      } else {
        field += ch;
        i += 1;
      }
      continue;
    }
    if (ch === '"') {
      inQuotes = true;
      i += 1;
    } else if (ch === ',') {
      row.push(field);
      field = '';
      i += 1;
    } else if (ch === '\r' && text[i + 1] === '\n') {
      i += 1; // swallow the CR of a CRLF pair; the LF case below ends the row
    } else if (ch === '\n') {
      row.push(field);
      grid.push(row);
      row = [];
      field = '';
      i += 1;
    } else {
      field += ch;
      i += 1;
    }
  }
  if (field.length > 0 || row.length > 0) {
    row.push(field);
    grid.push(row);
  }
  return grid;
}

function requireInt(value: string, column: string, line: number): number {
  const parsed = Number(value);
  if (!Number.isInteger(parsed)) {
    throw new CsvSchemaError(
      `CSV schema mismatch: line ${line}: column '${column}' is not an integer: '${value}'`,
    );
  }
  return parsed;
}

function optionalFloat(value: string, column: string, line: number): number | null {
  if (value === '') {
    return null;
  }
  const parsed = Number(value);
  if (!Number.isFinite(parsed)) {
    throw new CsvSchemaError(
      `CSV schema mismatch: line ${line}: column '${column}' is not a number: '${value}'`,
    );
  }
  return parsed;
}

/** Parse the full result table, validating the schema as we go. */
export function readResults(text: string): ResultTable {
  const grid = parseCsv(text);
  if (grid.length === 0) {
    throw new CsvSchemaError('CSV schema mismatch: file is empty');
  }
  const header = grid[0]!;
  for (const column of REQUIRED_COLUMNS) {
    if (!header.includes(column)) {
      throw new CsvSchemaError(`CSV schema mismatch: missing column '${column}'`);
    }
  }
  const index = new Map(header.map((name, at) => [name, at] as const));
  const rows: ResultRow[] = [];
  for (let r = 1; r < grid.length; r++) {
    const cells = grid[r]!;
    const line = r + 1;
    if (cells.length !== header.length) {
      throw new CsvSchemaError(
        `CSV schema mismatch: line ${line} has ${cells.length} fields, expected ${header.length}`,
      );
    }
    const get = (name: string): string => cells[index.get(name)!]!;
    rows.push({
      variant: get('variant'),
      n: requireInt(get('n'), 'n', line),
      steps: requireInt(get('steps'), 'steps', line),
      threadsRequested: get('threads_requested'),
      threadsResolved: get('threads_resolved'),
      precision: get('precision'),
      blockSize: get('block_size'),
      repetitions: requireInt(get('repetitions'), 'repetitions', line),
      meanSeconds: optionalFloat(get('mean_seconds'), 'mean_seconds', line),
      stddevSeconds: optionalFloat(get('stddev_seconds'), 'stddev_seconds', line),
      gflops: optionalFloat(get('gflops'), 'gflops', line),
      status: get('status'),
    });
  }
  return { columns: header, rows };
}
