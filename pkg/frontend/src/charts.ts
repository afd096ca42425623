/**
 * Figure builders for benchmark result tables.
 *
 * Input is strictly the published result contract: the CSV table plus the
 * optional `.meta.json` sidecar next to it. Rendering is deterministic —
 * the same CSV and spec always produce byte-identical SVG output.
 */

import * as fs from 'node:fs';

import { CsvSchemaError, readResults, ResultRow } from './csv';
import { Manifest, readManifest, sidecarPathFor } from './meta';
import { colorFor, dashFor, escapeXml, fmt } from './svg';

export const FIGURE_KINDS = ['perf-vs-n', 'ladder-speedup', 'block-compare'] as const;

export type FigureKind = (typeof FIGURE_KINDS)[number];

export interface PlotSpec {
  /** Path of the benchmark results CSV. */
  input: string;
  kind: FigureKind;
  /** Path the SVG is written to. */
  output: string;
  /** Keep only rows with this precision ('double' | 'single'). */
  precision?: string;
  /** Keep only rows whose requested thread count matches (e.g. '1', 'auto'). */
  threads?: string;
}

export class PlotError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'PlotError';
  }
}

/** One consecutive-rung speedup measurement at a matched configuration. */
export interface LadderRatio {
  baseline: string;
  variant: string;
  n: number;
  threads: string;
  precision: string;
  ratio: number;
}

// ---------------------------------------------------------------------------
// Row selection
// ---------------------------------------------------------------------------

function applyFilters(rows: ResultRow[], spec: PlotSpec): ResultRow[] {
  let kept = rows;
  if (spec.precision !== undefined) {
    kept = kept.filter((row) => row.precision === spec.precision);
  }
  if (spec.threads !== undefined) {
    kept = kept.filter((row) => row.threadsRequested === spec.threads);
  }
  return kept;
}

function describeFilters(spec: PlotSpec): string {
  const parts: string[] = [];
  if (spec.precision !== undefined) parts.push(`precision=${spec.precision}`);
  if (spec.threads !== undefined) parts.push(`threads=${spec.threads}`);
  return parts.length > 0 ? parts.join(', ') : 'none';
}

function usableRows(rows: ResultRow[]): ResultRow[] {
  return rows.filter((row) => row.status === 'ok' && row.gflops !== null);
}

/**
 * Variants in ladder order. The sidecar manifest is authoritative; variants
 * absent from it are appended in first-appearance order.
 */
function orderVariants(rows: ResultRow[], manifest: Manifest | null): string[] {
  const seen: string[] = [];
  for (const row of rows) {
    if (!seen.includes(row.variant)) seen.push(row.variant);
  }
  if (manifest === null) return seen;
  const fromLadder = manifest.variantLadder.filter((v) => seen.includes(v));
  const extras = seen.filter((v) => !manifest.variantLadder.includes(v));
  return [...fromLadder, ...extras];
}

/** Sort key for thread labels: numeric ascending, non-numeric (auto) last. */
function compareThreads(a: string, b: string): number {
  const na = /^\d+$/.test(a) ? Number(a) : Number.POSITIVE_INFINITY;
  const nb = /^\d+$/.test(b) ? Number(b) : Number.POSITIVE_INFINITY;
  if (na !== nb) return na - nb;
  return a < b ? -1 : a > b ? 1 : 0;
}

interface ConfigKey {
  n: number;
  threads: string;
  precision: string;
}

function compareKeys(a: ConfigKey, b: ConfigKey): number {
  if (a.n !== b.n) return a.n - b.n;
  const t = compareThreads(a.threads, b.threads);
  if (t !== 0) return t;
  return a.precision < b.precision ? -1 : a.precision > b.precision ? 1 : 0;
}

function keyId(key: ConfigKey): string {
  return `${key.n}|${key.threads}|${key.precision}`;
}

/**
 * Best (highest) GFLOPS per variant and configuration. A variant may have
 * several rows per configuration — parallel-blocked sweeps block sizes — and
 * the ladder comparison uses each rung's best configuration.
 */
function bestByVariantAndKey(rows: ResultRow[]): Map<string, Map<string, number>> {
  const best = new Map<string, Map<string, number>>();
  for (const row of rows) {
    if (row.gflops === null) continue;
    const key = keyId({ n: row.n, threads: row.threadsRequested, precision: row.precision });
    let perKey = best.get(row.variant);
    if (perKey === undefined) {
      perKey = new Map<string, number>();
      best.set(row.variant, perKey);
    }
    const prev = perKey.get(key);
    if (prev === undefined || row.gflops > prev) perKey.set(key, row.gflops);
  }
  return best;
}

function collectKeys(rows: ResultRow[]): ConfigKey[] {
  const byId = new Map<string, ConfigKey>();
  for (const row of rows) {
    const key = { n: row.n, threads: row.threadsRequested, precision: row.precision };
    byId.set(keyId(key), key);
  }
  return [...byId.values()].sort(compareKeys);
}

// ---------------------------------------------------------------------------
// Ladder speedup semantics
// ---------------------------------------------------------------------------

/**
 * Speedup of each ladder rung over its predecessor at matched (n, threads,
 * precision). Rungs with no usable rows at all (for example a skipped
 * allocator rung) drop out of the ladder; a rung that has data at a
 * configuration where its predecessor has none is an error.
 */
export function computeLadderRatios(rows: ResultRow[], ladder: string[]): LadderRatio[] {
  const usable = usableRows(rows);
  const best = bestByVariantAndKey(usable);
  const present = ladder.filter((variant) => best.has(variant));
  if (present.length < 2) {
    throw new PlotError(
      'missing baseline rung: ladder-speedup needs at least two ladder variants ' +
        `with usable rows, found ${present.length > 0 ? `only '${present[0]}'` : 'none'}`,
    );
  }
  const keys = collectKeys(usable);
  const ratios: LadderRatio[] = [];
  for (let i = 1; i < present.length; i += 1) {
    const baseline = present[i - 1]!;
    const variant = present[i]!;
    const baseBest = best.get(baseline)!;
    const currBest = best.get(variant)!;
    for (const key of keys) {
      const curr = currBest.get(keyId(key));
      if (curr === undefined) continue;
      const base = baseBest.get(keyId(key));
      if (base === undefined) {
        throw new PlotError(
          `missing baseline rung '${baseline}' for '${variant}' at ` +
            `n=${key.n}, threads=${key.threads}, precision=${key.precision}`,
        );
      }
      ratios.push({
        baseline,
        variant,
        n: key.n,
        threads: key.threads,
        precision: key.precision,
        ratio: curr / base,
      });
    }
  }
  return ratios;
}

// ---------------------------------------------------------------------------
// Shared SVG scaffolding
// ---------------------------------------------------------------------------

const WIDTH = 880;
const HEIGHT = 500;
const MARGIN = { top: 72, right: 230, bottom: 64, left: 80 } as const;
const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

function svgOpen(title: string, subtitle: string): string {
  return (
    '<?xml version="1.0" encoding="UTF-8"?>\n' +
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
    `viewBox="0 0 ${WIDTH} ${HEIGHT}">\n` +
    '<style>\n' +
    'text { font-family: Helvetica, Arial, sans-serif; fill: #1f2937; }\n' +
    '.title { font-size: 16px; font-weight: bold; }\n' +
    '.subtitle { font-size: 11px; fill: #6b7280; }\n' +
    '.axis-label { font-size: 12px; fill: #374151; }\n' +
    '.tick-label { font-size: 10px; fill: #4b5563; }\n' +
    '.bar-label { font-size: 10px; fill: #111827; }\n' +
    '.legend-label { font-size: 11px; }\n' +
    '.grid { stroke: #e5e7eb; stroke-width: 1; }\n' +
    '.axis { stroke: #9ca3af; stroke-width: 1; }\n' +
    '.parity { stroke: #6b7280; stroke-width: 1; stroke-dasharray: 4,3; }\n' +
    '.reference { stroke-width: 1.5; stroke-dasharray: 5,3; fill: none; }\n' +
    '.series-line { fill: none; stroke-width: 2; }\n' +
    '</style>\n' +
    `<rect x="0" y="0" width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>\n` +
    `<text class="title" x="${MARGIN.left}" y="28">${escapeXml(title)}</text>\n` +
    `<text class="subtitle" x="${MARGIN.left}" y="46">${escapeXml(subtitle)}</text>\n`
  );
}

const SVG_CLOSE = '</svg>\n';

function axesFrame(): string {
  const x0 = MARGIN.left;
  const y0 = MARGIN.top;
  const x1 = MARGIN.left + PLOT_W;
  const y1 = MARGIN.top + PLOT_H;
  return (
    `<line class="axis" x1="${x0}" y1="${y1}" x2="${x1}" y2="${y1}"/>\n` +
    `<line class="axis" x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}"/>\n`
  );
}

function yForValue(value: number, yMax: number): number {
  return MARGIN.top + PLOT_H - (value / yMax) * PLOT_H;
}

/** Horizontal gridlines with tick labels for a 0..yMax linear axis. */
function yAxis(yMax: number, axisTitle: string): string {
  const ticks = 5;
  let out = '';
  for (let i = 0; i <= ticks; i += 1) {
    const value = (yMax * i) / ticks;
    const y = yForValue(value, yMax);
    if (i > 0) {
      out += `<line class="grid" x1="${MARGIN.left}" y1="${fmt(y)}" x2="${MARGIN.left + PLOT_W}" y2="${fmt(y)}"/>\n`;
    }
    out +=
      `<text class="tick-label" x="${MARGIN.left - 8}" y="${fmt(y + 3)}" ` +
      `text-anchor="end">${fmt(value)}</text>\n`;
  }
  const cx = MARGIN.left - 52;
  const cy = MARGIN.top + PLOT_H / 2;
  out +=
    `<text class="axis-label" x="${cx}" y="${fmt(cy)}" text-anchor="middle" ` +
    `transform="rotate(-90 ${cx} ${fmt(cy)})">${escapeXml(axisTitle)}</text>\n`;
  return out;
}

function xAxisTitle(label: string): string {
  return (
    `<text class="axis-label" x="${MARGIN.left + PLOT_W / 2}" y="${HEIGHT - 14}" ` +
    `text-anchor="middle">${escapeXml(label)}</text>\n`
  );
}

interface LegendEntry {
  label: string;
  color: string;
  dash: string;
}

function legend(entries: LegendEntry[]): string {
  const x = MARGIN.left + PLOT_W + 18;
  let out = '';
  entries.forEach((entry, i) => {
    const y = MARGIN.top + 8 + i * 18;
    const dash = entry.dash !== '' ? ` stroke-dasharray="${entry.dash}"` : '';
    out +=
      `<line x1="${x}" y1="${y}" x2="${x + 22}" y2="${y}" ` +
      `stroke="${entry.color}" stroke-width="3"${dash}/>\n` +
      `<text class="legend-label" x="${x + 28}" y="${y + 4}">${escapeXml(entry.label)}</text>\n`;
  });
  return out;
}

/** Round a positive value up to a pleasant axis maximum. */
function niceCeiling(value: number): number {
  if (!(value > 0)) return 1;
  const exponent = Math.floor(Math.log10(value));
  const base = Math.pow(10, exponent);
  for (const mult of [1, 1.2, 1.5, 2, 2.5, 3, 4, 5, 6, 8, 10]) {
    if (mult * base >= value) return mult * base;
  }
  return 10 * base;
}

// ---------------------------------------------------------------------------
// Figure: perf-vs-n
// ---------------------------------------------------------------------------

function buildPerfVsN(rows: ResultRow[], ladder: string[], subtitle: string): string {
  const best = bestByVariantAndKey(rows);
  const ns = [...new Set(rows.map((row) => row.n))].sort((a, b) => a - b);
  const threadLabels = [...new Set(rows.map((row) => row.threadsRequested))].sort(compareThreads);
  const precisions = [...new Set(rows.map((row) => row.precision))].sort();

  const xForIndex = (i: number): number =>
    ns.length === 1
      ? MARGIN.left + PLOT_W / 2
      : MARGIN.left + (i / (ns.length - 1)) * PLOT_W;

  interface Series {
    label: string;
    color: string;
    dash: string;
    points: { x: number; y: number }[];
  }

  let peak = 0;
  for (const row of usableRows(rows)) {
    if (row.gflops !== null && row.gflops > peak) peak = row.gflops;
  }
  const yMax = niceCeiling(peak * 1.08);

  const series: Series[] = [];
  const variants = ladder.filter((variant) => best.has(variant));
  let styleIndex = 0;
  for (const variant of variants) {
    const perKey = best.get(variant)!;
    for (const precision of precisions) {
      for (const threads of threadLabels) {
        const points: { x: number; y: number }[] = [];
        ns.forEach((n, i) => {
          const value = perKey.get(keyId({ n, threads, precision }));
          if (value !== undefined) {
            points.push({ x: xForIndex(i), y: yForValue(value, yMax) });
          }
        });
        if (points.length === 0) continue;
        const qualifiers: string[] = [];
        if (threadLabels.length > 1) qualifiers.push(`threads=${threads}`);
        if (precisions.length > 1) qualifiers.push(precision);
        const suffix = qualifiers.length > 0 ? ` [${qualifiers.join(', ')}]` : '';
        series.push({
          label: `${variant}${suffix}`,
          color: colorFor(ladder.indexOf(variant) >= 0 ? ladder.indexOf(variant) : styleIndex),
          dash: dashFor(threadLabels.indexOf(threads) + precisions.indexOf(precision) * threadLabels.length),
          points,
        });
        styleIndex += 1;
      }
    }
  }

  let body = yAxis(yMax, 'throughput (GFLOPS)');
  body += axesFrame();
  ns.forEach((n, i) => {
    const x = xForIndex(i);
    body +=
      `<text class="tick-label" x="${fmt(x)}" y="${MARGIN.top + PLOT_H + 16}" ` +
      `text-anchor="middle">${n}</text>\n`;
  });
  body += xAxisTitle('bodies (n)');
  for (const s of series) {
    const pts = s.points.map((p) => `${fmt(p.x)},${fmt(p.y)}`).join(' ');
    const dash = s.dash !== '' ? ` stroke-dasharray="${s.dash}"` : '';
    body += `<polyline class="series-line" stroke="${s.color}"${dash} points="${pts}"/>\n`;
    for (const p of s.points) {
      body += `<circle cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="3" fill="${s.color}"/>\n`;
    }
  }
  body += legend(series.map((s) => ({ label: s.label, color: s.color, dash: s.dash })));
  return svgOpen('Throughput vs problem size', subtitle) + body + SVG_CLOSE;
}

// ---------------------------------------------------------------------------
// Figure: ladder-speedup
// ---------------------------------------------------------------------------

function buildLadderSpeedup(ratios: LadderRatio[], ladder: string[], subtitle: string): string {
  interface Group {
    variant: string;
    baseline: string;
    bars: LadderRatio[];
  }
  const groups: Group[] = [];
  for (const ratio of ratios) {
    let group = groups.find((g) => g.variant === ratio.variant);
    if (group === undefined) {
      group = { variant: ratio.variant, baseline: ratio.baseline, bars: [] };
      groups.push(group);
    }
    group.bars.push(ratio);
  }
  for (const group of groups) {
    group.bars.sort((a, b) =>
      compareKeys(
        { n: a.n, threads: a.threads, precision: a.precision },
        { n: b.n, threads: b.threads, precision: b.precision },
      ),
    );
  }

  const totalBars = groups.reduce((acc, g) => acc + g.bars.length, 0);
  const slots = totalBars + Math.max(groups.length - 1, 0);
  const slotW = PLOT_W / Math.max(slots, 1);
  const barW = slotW * 0.72;

  let maxRatio = 0;
  for (const ratio of ratios) {
    if (ratio.ratio > maxRatio) maxRatio = ratio.ratio;
  }
  const yMax = niceCeiling(Math.max(maxRatio * 1.15, 1.3));

  let body = yAxis(yMax, 'speedup over previous rung');
  body += axesFrame();

  const parityY = yForValue(1.0, yMax);
  body +=
    `<line class="parity" x1="${MARGIN.left}" y1="${fmt(parityY)}" ` +
    `x2="${MARGIN.left + PLOT_W}" y2="${fmt(parityY)}"/>\n` +
    `<text class="tick-label" x="${MARGIN.left + PLOT_W + 6}" y="${fmt(parityY + 3)}">1.00x</text>\n`;

  const showKeyLabels = groups.some((g) => g.bars.length > 1);
  let slot = 0;
  groups.forEach((group) => {
    const groupStart = MARGIN.left + slot * slotW;
    for (const bar of group.bars) {
      const x = MARGIN.left + slot * slotW + (slotW - barW) / 2;
      const yTop = yForValue(bar.ratio, yMax);
      const height = MARGIN.top + PLOT_H - yTop;
      const color = colorFor(Math.max(ladder.indexOf(bar.variant), 0));
      body +=
        `<rect x="${fmt(x)}" y="${fmt(yTop)}" width="${fmt(barW)}" ` +
        `height="${fmt(height)}" fill="${color}"/>\n` +
        `<text class="bar-label" x="${fmt(x + barW / 2)}" y="${fmt(yTop - 4)}" ` +
        `text-anchor="middle">${fmt(bar.ratio)}x</text>\n`;
      if (showKeyLabels) {
        body +=
          `<text class="tick-label" x="${fmt(x + barW / 2)}" y="${MARGIN.top + PLOT_H + 14}" ` +
          `text-anchor="middle">n=${bar.n}</text>\n`;
      }
      slot += 1;
    }
    const groupEnd = MARGIN.left + slot * slotW;
    const center = (groupStart + groupEnd) / 2;
    body +=
      `<text class="tick-label" x="${fmt(center)}" y="${MARGIN.top + PLOT_H + (showKeyLabels ? 28 : 16)}" ` +
      `text-anchor="middle">${escapeXml(group.variant)}</text>\n`;
    slot += 1; // gap between groups
  });

  body += xAxisTitle('ladder rung (vs previous rung)');
  body += legend(
    groups.map((group) => ({
      label: `${group.variant} / ${group.baseline}`,
      color: colorFor(Math.max(ladder.indexOf(group.variant), 0)),
      dash: '',
    })),
  );
  return svgOpen('Optimization ladder speedup', subtitle) + body + SVG_CLOSE;
}

// ---------------------------------------------------------------------------
// Figure: block-compare
// ---------------------------------------------------------------------------

const BLOCKED_VARIANT = 'parallel-blocked';
const REFERENCE_VARIANT = 'parallel-fastmath';

function buildBlockCompare(rows: ResultRow[], subtitle: string): string {
  const usable = usableRows(rows);
  const blockedRows = usable.filter(
    (row) => row.variant === BLOCKED_VARIANT && row.blockSize !== '',
  );
  if (blockedRows.length === 0) {
    throw new PlotError(
      `empty selection: no usable '${BLOCKED_VARIANT}' rows with a block size in the input`,
    );
  }
  const blocks = [...new Set(blockedRows.map((row) => Number(row.blockSize)))].sort(
    (a, b) => a - b,
  );
  const keys = collectKeys(blockedRows);

  const valueFor = new Map<string, number>();
  for (const row of blockedRows) {
    if (row.gflops === null) continue;
    const id = `${keyId({ n: row.n, threads: row.threadsRequested, precision: row.precision })}|${Number(row.blockSize)}`;
    const prev = valueFor.get(id);
    if (prev === undefined || row.gflops > prev) valueFor.set(id, row.gflops);
  }

  const referenceBest = bestByVariantAndKey(
    usable.filter((row) => row.variant === REFERENCE_VARIANT),
  ).get(REFERENCE_VARIANT);

  let peak = 0;
  for (const value of valueFor.values()) {
    if (value > peak) peak = value;
  }
  if (referenceBest !== undefined) {
    for (const key of keys) {
      const ref = referenceBest.get(keyId(key));
      if (ref !== undefined && ref > peak) peak = ref;
    }
  }
  const yMax = niceCeiling(peak * 1.1);

  const groupW = PLOT_W / keys.length;
  const innerW = groupW * 0.82;
  const barW = innerW / blocks.length;

  let body = yAxis(yMax, 'throughput (GFLOPS)');
  body += axesFrame();

  const multiThreads = new Set(keys.map((k) => k.threads)).size > 1;
  const multiPrecision = new Set(keys.map((k) => k.precision)).size > 1;

  keys.forEach((key, gi) => {
    const groupLeft = MARGIN.left + gi * groupW + (groupW - innerW) / 2;
    blocks.forEach((block, bi) => {
      const value = valueFor.get(`${keyId(key)}|${block}`);
      if (value === undefined) return;
      const x = groupLeft + bi * barW;
      const yTop = yForValue(value, yMax);
      const height = MARGIN.top + PLOT_H - yTop;
      body +=
        `<rect x="${fmt(x)}" y="${fmt(yTop)}" width="${fmt(barW * 0.9)}" ` +
        `height="${fmt(height)}" fill="${colorFor(bi)}"/>\n` +
        `<text class="bar-label" x="${fmt(x + (barW * 0.9) / 2)}" y="${fmt(yTop - 4)}" ` +
        `text-anchor="middle">${fmt(value)}</text>\n`;
    });
    if (referenceBest !== undefined) {
      const ref = referenceBest.get(keyId(key));
      if (ref !== undefined) {
        const y = yForValue(ref, yMax);
        body +=
          `<line class="reference" stroke="#111827" x1="${fmt(groupLeft)}" y1="${fmt(y)}" ` +
          `x2="${fmt(groupLeft + innerW)}" y2="${fmt(y)}"/>\n`;
      }
    }
    const labelParts = [`n=${key.n}`];
    if (multiThreads) labelParts.push(`t=${key.threads}`);
    if (multiPrecision) labelParts.push(key.precision);
    body +=
      `<text class="tick-label" x="${fmt(groupLeft + innerW / 2)}" y="${MARGIN.top + PLOT_H + 16}" ` +
      `text-anchor="middle">${escapeXml(labelParts.join(' '))}</text>\n`;
  });

  body += xAxisTitle('configuration');
  const entries: LegendEntry[] = blocks.map((block, bi) => ({
    label: `block=${block}`,
    color: colorFor(bi),
    dash: '',
  }));
  if (referenceBest !== undefined) {
    entries.push({ label: `${REFERENCE_VARIANT} (reference)`, color: '#111827', dash: '5,3' });
  }
  body += legend(entries);
  return svgOpen('Blocked kernel: block size comparison', subtitle) + body + SVG_CLOSE;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/**
 * Render the figure described by `spec`. Reads the input CSV (and, for
 * ladder-speedup, its metadata sidecar), writes one SVG to `spec.output`,
 * and returns the output path. The input files are never modified.
 */
export function render(spec: PlotSpec): string {
  if (!(FIGURE_KINDS as readonly string[]).includes(spec.kind)) {
    throw new PlotError(
      `unrecognized figure kind '${spec.kind}'; expected one of: ${FIGURE_KINDS.join(', ')}`,
    );
  }

  let text: string;
  try {
    text = fs.readFileSync(spec.input, 'utf8');
  } catch (err) {
    throw new PlotError(`cannot read input CSV '${spec.input}': ${(err as Error).message}`);
  }
  const table = readResults(text);

  const selected = applyFilters(table.rows, spec);
  if (selected.length === 0) {
    throw new PlotError(
      `empty selection: no rows match the filters (${describeFilters(spec)}) ` +
        `out of ${table.rows.length} rows in '${spec.input}'`,
    );
  }
  const usable = usableRows(selected);
  if (usable.length === 0) {
    throw new PlotError(
      `empty selection: ${selected.length} rows match the filters (${describeFilters(spec)}) ` +
        'but none have status "ok" with a throughput value',
    );
  }

  const manifest = readManifest(spec.input);
  const subtitle =
    `source: ${spec.input} | filters: ${describeFilters(spec)} | rows: ${usable.length}`;

  let svg: string;
  if (spec.kind === 'perf-vs-n') {
    svg = buildPerfVsN(usable, orderVariants(usable, manifest), subtitle);
  } else if (spec.kind === 'ladder-speedup') {
    if (manifest === null) {
      throw new PlotError(
        `metadata sidecar '${sidecarPathFor(spec.input)}' not found; ` +
          'ladder-speedup takes the rung order from the variant manifest',
      );
    }
    const ratios = computeLadderRatios(usable, manifest.variantLadder);
    svg = buildLadderSpeedup(ratios, manifest.variantLadder, subtitle);
  } else {
    svg = buildBlockCompare(usable, subtitle);
  }

  fs.writeFileSync(spec.output, svg, 'utf8');
  return spec.output;
}

export { CsvSchemaError, readResults } from './csv';
export { readManifest, sidecarPathFor } from './meta';
