import * as fs from 'node:fs';
import * as os from 'node:os';
import * as path from 'node:path';

import { afterAll, describe, expect, it } from 'vitest';

import { CliIo, runCli, USAGE } from '../src/cli';

const SAMPLE = path.resolve('fixtures', 'sample.csv');

const tmpRoot = fs.mkdtempSync(path.join(os.tmpdir(), 'nbody-plots-cli-'));
afterAll(() => {
  fs.rmSync(tmpRoot, { recursive: true, force: true });
});

let counter = 0;
function outPath(): string {
  counter += 1;
  return path.join(tmpRoot, `figure-${counter}.svg`);
}

interface Capture extends CliIo {
  stdout: string[];
  stderr: string[];
}

function capture(): Capture {
  const stdout: string[] = [];
  const stderr: string[] = [];
  return {
    stdout,
    stderr,
    out: (line) => stdout.push(line),
    err: (line) => stderr.push(line),
  };
}

describe('runCli', () => {
  it('writes the figure and reports success', () => {
    const io = capture();
    const out = outPath();
    const code = runCli(['--kind', 'perf-vs-n', '--in', SAMPLE, '--out', out], io);
    expect(code).toBe(0);
    expect(io.stdout).toEqual([`wrote ${out}`]);
    expect(io.stderr).toEqual([]);
    expect(fs.existsSync(out)).toBe(true);
  });

  it('accepts filter flags', () => {
    const io = capture();
    const out = outPath();
    const code = runCli(
      [
        '--kind', 'block-compare',
        '--in', SAMPLE,
        '--out', out,
        '--precision', 'double',
        '--threads', '1',
      ],
      io,
    );
    expect(code).toBe(0);
    expect(fs.existsSync(out)).toBe(true);
  });

  it('rejects an unknown figure kind with usage', () => {
    const io = capture();
    const code = runCli(['--kind', 'pie', '--in', SAMPLE, '--out', outPath()], io);
    expect(code).toBe(2);
    expect(io.stderr[0]).toContain("unrecognized figure kind 'pie'");
    expect(io.stderr[1]).toBe(USAGE);
  });

  it('rejects missing required flags', () => {
    const io = capture();
    const code = runCli(['--kind', 'perf-vs-n', '--in', SAMPLE], io);
    expect(code).toBe(2);
    expect(io.stderr[0]).toContain('--out is required');
  });

  it('rejects unknown arguments', () => {
    const io = capture();
    const code = runCli(['--frobnicate'], io);
    expect(code).toBe(2);
    expect(io.stderr[0]).toContain("unknown argument '--frobnicate'");
  });

  it('rejects a flag without a value', () => {
    const io = capture();
    const code = runCli(['--kind'], io);
    expect(code).toBe(2);
    expect(io.stderr[0]).toContain('--kind requires a value');
  });

  it('rejects duplicated flags', () => {
    const io = capture();
    const code = runCli(
      ['--kind', 'perf-vs-n', '--kind', 'block-compare', '--in', SAMPLE, '--out', outPath()],
      io,
    );
    expect(code).toBe(2);
    expect(io.stderr[0]).toContain('--kind given more than once');
  });

  it('returns 1 on a schema mismatch and names the column', () => {
    const broken = path.join(tmpRoot, 'broken.csv');
    fs.writeFileSync(
      broken,
      'variant,n,steps,threads_requested,threads_resolved,precision,block_size,' +
        'repetitions,mean_seconds,stddev_seconds,status\n',
      'utf8',
    );
    const io = capture();
    const code = runCli(['--kind', 'perf-vs-n', '--in', broken, '--out', outPath()], io);
    expect(code).toBe(1);
    expect(io.stderr[0]).toContain("missing column 'gflops'");
  });

  it('returns 1 on an empty selection', () => {
    const io = capture();
    const code = runCli(
      ['--kind', 'perf-vs-n', '--in', SAMPLE, '--out', outPath(), '--precision', 'single'],
      io,
    );
    expect(code).toBe(1);
    expect(io.stderr[0]).toContain('empty selection');
  });

  it('returns 1 when the input file is missing', () => {
    const io = capture();
    const code = runCli(
      ['--kind', 'perf-vs-n', '--in', path.join(tmpRoot, 'nope.csv'), '--out', outPath()],
      io,
    );
    expect(code).toBe(1);
    expect(io.stderr[0]).toContain('cannot read input CSV');
  });
});
