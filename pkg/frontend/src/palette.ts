/**
 * The one palette definition for the whole interface.
 *
 * Roles, not decorations: every component colors query material purple,
 * subquery material green, bookmarks red, read items grey, summarized
 * spans yellow, and the shared hover state a darker yellow.  Hues are
 * drawn from ColorBrewer's colorblind-safe, print-friendly schemes.
 */

import type { ReadState } from "./types.js";

export const palette = {
  query: "#7b3294",
  subquery: "#008837",
  bookmark: "#ca0020",
  read: "#8c8c8c",
  unread: "#1a1a1a",
  highlight: "#ffffbf",
  hover: "#fdae61",
  neutral: "#000000",
  axis: "#666666",
} as const;

export type PaletteRole = keyof typeof palette;

export function readStateColor(state: ReadState): string {
  switch (state) {
    case "bookmarked":
      return palette.bookmark;
    case "read":
      return palette.read;
    default:
      return palette.unread;
  }
}

function hexToRgb(hex: string): [number, number, number] {
  const raw = hex.replace("#", "");
  return [
    parseInt(raw.slice(0, 2), 16),
    parseInt(raw.slice(2, 4), 16),
    parseInt(raw.slice(4, 6), 16),
  ];
}

function toHex(value: number): string {
  return Math.round(value).toString(16).padStart(2, "0");
}

/**
 * Brightness encoding for count markers: bucket 1 is a pale tint of the
 * term color, bucket 5+ the full color.
 */
export function countMarkerColor(base: string, bucket: number): string {
  const clamped = Math.min(Math.max(bucket, 1), 5);
  const [r, g, b] = hexToRgb(base);
  const lighten = ((5 - clamped) / 5) * 0.85;
  const mix = (channel: number) => channel + (255 - channel) * lighten;
  return `#${toHex(mix(r))}${toHex(mix(g))}${toHex(mix(b))}`;
}

/** Perceived luminance in [0, 255]; used to test brightness ordering. */
export function luminance(hex: string): number {
  const [r, g, b] = hexToRgb(hex);
  return 0.2126 * r + 0.7152 * g + 0.0722 * b;
}
