/**
 * Loader for the metadata sidecar the benchmark harness writes next to
 * each results CSV (same stem, .meta.json). The sidecar carries the
 * variant ladder in canonical order, which fixes series ordering and the
 * baseline for speedup ratios.
 */

import * as fs from 'fs';

export interface Manifest {
  variantLadder: string[];
  flopsPerInteraction?: number;
  environment?: Record<string, unknown>;
}

/** results.csv -> results.meta.json (or csvPath + .meta.json otherwise). */
export function sidecarPathFor(csvPath: string): string {
  const stem = csvPath.endsWith('.csv') ? csvPath.slice(0, -4) : csvPath;
  return `${stem}.meta.json`;
}

/** Read the sidecar manifest; null when no sidecar file exists. */
export function readManifest(csvPath: string): Manifest | null {
  const sidecar = sidecarPathFor(csvPath);
  if (!fs.existsSync(sidecar)) {
    return null;
  }
  const data = JSON.parse(fs.readFileSync(sidecar, 'utf-8')) as {
    variant_ladder?: unknown;
    flops_per_interaction?: unknown;
    environment?: unknown;
  };
  if (!Array.isArray(data.variant_ladder) || !data.variant_ladder.every((v) => typeof v === 'string')) {
    throw new Error(`metadata sidecar '${sidecar}' has no 'variant_ladder' list`);
  }
  const manifest: Manifest = { variantLadder: data.variant_ladder };
  if (typeof data.flops_per_interaction === 'number') {
    manifest.flopsPerInteraction = data.flops_per_interaction;
  }
  if (data.environment && typeof data.environment === 'object') {
    manifest.environment = data.environment as Record<string, unknown>;
  }
  return manifest;
}
