/**
 * Offset arithmetic for in-text highlighting.
 *
 * The service ships character spans against the raw body; the viewer never
 * re-searches text.  Overlapping spans (a query mention inside a
 * summarized sentence, say) are resolved by cutting the body at every span
 * boundary and stacking the active kinds on each resulting segment.
 */

import type { HighlightKind, HighlightSpan } from "./types.js";

export interface Segment {
  start: number;
  end: number;
  text: string;
  kinds: HighlightKind[];
}

export function segmentBody(body: string, spans: HighlightSpan[]): Segment[] {
  const cuts = new Set<number>([0, body.length]);
  for (const span of spans) {
    cuts.add(Math.max(0, Math.min(span.char_start, body.length)));
    cuts.add(Math.max(0, Math.min(span.char_end, body.length)));
  }
  const points = [...cuts].sort((a, b) => a - b);
  const segments: Segment[] = [];
  for (let i = 0; i + 1 < points.length; i++) {
    const start = points[i]!;
    const end = points[i + 1]!;
    if (start === end) continue;
    const kinds: HighlightKind[] = [];
    for (const span of spans) {
      if (span.char_start <= start && end <= span.char_end && !kinds.includes(span.kind)) {
        kinds.push(span.kind);
      }
    }
    segments.push({ start, end, text: body.slice(start, end), kinds });
  }
  return segments;
}

/** True when the segment lies inside [start, end). */
export function segmentWithin(segment: Segment, start: number, end: number): boolean {
  return segment.start >= start && segment.end <= end;
}

/**
 * Wrap occurrences of terms in a plain display string with <span> markers.
 * Matching is case-insensitive on whole word-ish boundaries, mirroring the
 * service's full-token match rule closely enough for display.
 */
export function markTerms(
  text: string,
  terms: { term: string; className: string }[],
): DocumentFragment {
  const fragment = document.createDocumentFragment();
  const active = terms.filter((t) => t.term.trim().length > 0);
  if (active.length === 0) {
    fragment.appendChild(document.createTextNode(text));
    return fragment;
  }
  const escaped = active.map((t) => t.term.replace(/[.*+?^${}()|[\]\\]/g, "\\$&"));
  const regex = new RegExp(`(?<![\\p{L}\\p{N}])(${escaped.join("|")})(?![\\p{L}\\p{N}])`, "giu");
  let cursor = 0;
  for (const match of text.matchAll(regex)) {
    const index = match.index ?? 0;
    if (index > cursor) {
      fragment.appendChild(document.createTextNode(text.slice(cursor, index)));
    }
    const matched = match[0];
    const term = active.find((t) => t.term.toLowerCase() === matched.toLowerCase());
    const span = document.createElement("span");
    span.className = term ? term.className : "term";
    span.textContent = matched;
    fragment.appendChild(span);
    cursor = index + matched.length;
  }
  if (cursor < text.length) {
    fragment.appendChild(document.createTextNode(text.slice(cursor)));
  }
  return fragment;
}
