/**
 * Tiny deterministic SVG helpers. Styling is a fixed palette and fixed
 * number formatting so identical inputs always produce identical bytes.
 */

export const PALETTE = [
  '#2563eb', // blue
  '#16a34a', // green
  '#d97706', // amber
  '#dc2626', // red
  '#7c3aed', // violet
  '#0891b2', // cyan
  '#be185d', // pink
  '#4d7c0f', // olive
] as const;

export const DASHES = ['', '6,4', '2,3', '8,3,2,3'] as const;

export function colorFor(index: number): string {
  return PALETTE[((index % PALETTE.length) + PALETTE.length) % PALETTE.length]!;
}

export function dashFor(index: number): string {
  return DASHES[((index % DASHES.length) + DASHES.length) % DASHES.length]!;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
    .replace(/'/g, '&apos;');
}

/** Fixed-decimal formatting; the single number style used everywhere. */
export function fmt(value: number, digits = 2): string {
  return value.toFixed(digits);
}
