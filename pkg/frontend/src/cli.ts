#!/usr/bin/env node
/**
 * Command line front end:
 *
 *   plot --kind <perf-vs-n|ladder-speedup|block-compare> --in <csv> --out <img>
 *        [--precision <p>] [--threads <t>]
 *
 * Exit codes: 0 success, 1 render failure (bad data, empty selection, IO),
 * 2 usage error.
 */

import { CsvSchemaError } from './csv';
import { FIGURE_KINDS, FigureKind, PlotError, PlotSpec, render } from './charts';

export const USAGE =
  'usage: plot --kind <perf-vs-n|ladder-speedup|block-compare> ' +
  '--in <csv> --out <img> [--precision <p>] [--threads <t>]';

class UsageError extends Error {}

function parseArgs(argv: string[]): PlotSpec {
  const values = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i]!;
    if (!['--kind', '--in', '--out', '--precision', '--threads'].includes(arg)) {
      throw new UsageError(`unknown argument '${arg}'`);
    }
    const value = argv[i + 1];
    if (value === undefined) {
      throw new UsageError(`${arg} requires a value`);
    }
    if (values.has(arg)) {
      throw new UsageError(`${arg} given more than once`);
    }
    values.set(arg, value);
    i += 1;
  }
  for (const required of ['--kind', '--in', '--out']) {
    if (!values.has(required)) {
      throw new UsageError(`${required} is required`);
    }
  }
  const kind = values.get('--kind')!;
  if (!(FIGURE_KINDS as readonly string[]).includes(kind)) {
    throw new UsageError(
      `unrecognized figure kind '${kind}'; expected one of: ${FIGURE_KINDS.join(', ')}`,
    );
  }
  const spec: PlotSpec = {
    kind: kind as FigureKind,
    input: values.get('--in')!,
    output: values.get('--out')!,
  };
  const precision = values.get('--precision');
  if (precision !== undefined) spec.precision = precision;
  const threads = values.get('--threads');
  if (threads !== undefined) spec.threads = threads;
  return spec;
}

export interface CliIo {
  out(line: string): void;
  err(line: string): void;
}

const defaultIo: CliIo = {
  out: (line) => process.stdout.write(`${line}\n`),
  err: (line) => process.stderr.write(`${line}\n`),
};

export function runCli(argv: string[], io: CliIo = defaultIo): number {
  let spec: PlotSpec;
  try {
    spec = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      io.err(`error: ${err.message}`);
      io.err(USAGE);
      return 2;
    }
    throw err;
  }
  try {
    const written = render(spec);
    io.out(`wrote ${written}`);
    return 0;
  } catch (err) {
    if (err instanceof PlotError || err instanceof CsvSchemaError) {
      io.err(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(runCli(process.argv.slice(2)));
}
