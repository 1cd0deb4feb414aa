/**
 * Document viewer: the full text of one selected document with the
 * service's highlight spans painted in place.  Summarized spans carry a
 * sentence key (recovered from the expand payload's offsets) so hover
 * state can be mirrored between the feed and the viewer.
 */

import { segmentBody } from "./highlight.js";
import { sentenceKey } from "./state.js";
import type { DocumentViewData, Shortening } from "./types.js";

export interface ViewerHandlers {
  onHoverSentence: (key: string | null) => void;
}

function keyForOffset(
  docId: string,
  start: number,
  end: number,
  shortenings: Shortening[],
): string | null {
  for (const s of shortenings) {
    if (start >= s.source_char_start && end <= s.source_char_end) {
      return sentenceKey(docId, s.sentence_index);
    }
  }
  return null;
}

export function renderViewer(
  container: HTMLElement,
  view: DocumentViewData,
  shortenings: Shortening[],
  handlers: ViewerHandlers,
): void {
  container.textContent = "";

  const headline = document.createElement("h2");
  headline.className = "viewer-headline";
  headline.textContent = view.headline;
  container.appendChild(headline);

  const date = document.createElement("div");
  date.className = "viewer-date";
  date.textContent = view.date;
  container.appendChild(date);

  const body = document.createElement("div");
  body.className = "viewer-body";
  for (const segment of segmentBody(view.body, view.highlight_spans)) {
    const el = document.createElement("span");
    el.textContent = segment.text;
    el.dataset.start = String(segment.start);
    el.dataset.end = String(segment.end);
    for (const kind of segment.kinds) {
      el.classList.add(`hl-${kind}`);
    }
    if (segment.kinds.includes("shortening")) {
      const key = keyForOffset(view.doc_id, segment.start, segment.end, shortenings);
      if (key) {
        el.dataset.sentenceKey = key;
        el.addEventListener("mouseenter", () => handlers.onHoverSentence(key));
        el.addEventListener("mouseleave", () => handlers.onHoverSentence(null));
      }
    }
    body.appendChild(el);
  }
  container.appendChild(body);
}

/** Scroll the segment containing the given body offset into view. */
export function scrollToOffset(container: HTMLElement, charStart: number): boolean {
  const segments = container.querySelectorAll<HTMLElement>(".viewer-body > span");
  for (const el of segments) {
    const start = Number(el.dataset.start);
    const end = Number(el.dataset.end);
    if (start <= charStart && charStart < end) {
      el.scrollIntoView({ block: "center", behavior: "smooth" });
      return true;
    }
  }
  return false;
}

/** Toggle the shared hover color on every node tagged with the key. */
export function applyHover(root: ParentNode, key: string | null): void {
  for (const el of root.querySelectorAll<HTMLElement>("[data-sentence-key]")) {
    el.classList.toggle("hovered", key !== null && el.dataset.sentenceKey === key);
  }
}
