/**
 * Document feed: one chronological card per result document, carrying the
 * headline, a brightness-bucketed count marker, the default shortening
 * with query/subquery coloring, a bookmark star, and an expand control
 * revealing every mentioning sentence.
 */

import { markTerms } from "./highlight.js";
import { countMarkerColor, palette } from "./palette.js";
import { sentenceKey } from "./state.js";
import type { FeedEntry, Shortening } from "./types.js";

export interface FeedHandlers {
  onOpen: (docId: string, shortening: Shortening | null) => void;
  onToggleBookmark: (docId: string) => void;
  onExpand: (docId: string, container: HTMLElement) => void;
  onHoverSentence: (key: string | null) => void;
}

interface TermStyles {
  query: string | null;
  subquery: string | null;
}

function shorteningLine(
  shortening: Shortening,
  terms: TermStyles,
  handlers: FeedHandlers,
): HTMLElement {
  const line = document.createElement("div");
  line.className = "shortening";
  line.dataset.sentenceKey = sentenceKey(shortening.doc_id, shortening.sentence_index);
  line.dataset.method = shortening.method;
  const markerTerms = [];
  if (terms.query) markerTerms.push({ term: terms.query, className: "term-query" });
  if (terms.subquery) markerTerms.push({ term: terms.subquery, className: "term-subquery" });
  line.appendChild(markTerms(shortening.display_text, markerTerms));
  line.addEventListener("click", () => handlers.onOpen(shortening.doc_id, shortening));
  line.addEventListener("mouseenter", () =>
    handlers.onHoverSentence(line.dataset.sentenceKey ?? null),
  );
  line.addEventListener("mouseleave", () => handlers.onHoverSentence(null));
  return line;
}

export function renderFeedEntry(
  entry: FeedEntry,
  terms: TermStyles,
  handlers: FeedHandlers,
): HTMLElement {
  const card = document.createElement("article");
  card.className = `feed-entry ${entry.read_state}`;
  card.dataset.docId = entry.doc_id;

  const header = document.createElement("header");
  header.className = "feed-entry-header";

  const star = document.createElement("button");
  star.className = "bookmark-star";
  star.type = "button";
  star.title = "bookmark";
  star.textContent = entry.read_state === "bookmarked" ? "★" : "☆";
  if (entry.read_state === "bookmarked") star.style.color = palette.bookmark;
  star.addEventListener("click", (event) => {
    event.stopPropagation();
    handlers.onToggleBookmark(entry.doc_id);
  });
  header.appendChild(star);

  if (entry.count_marker) {
    const marker = document.createElement("span");
    marker.className = "count-marker";
    const base =
      entry.count_marker.term === terms.subquery ? palette.subquery : palette.query;
    marker.style.backgroundColor = countMarkerColor(base, entry.count_marker.bucket);
    marker.title = `${entry.count_marker.term}: ${entry.count_marker.count}`;
    header.appendChild(marker);
  }

  const date = document.createElement("span");
  date.className = "feed-date";
  date.textContent = entry.date;
  header.appendChild(date);

  const headline = document.createElement("a");
  headline.className = "feed-headline";
  headline.textContent = entry.headline;
  headline.href = "#";
  headline.addEventListener("click", (event) => {
    event.preventDefault();
    handlers.onOpen(entry.doc_id, entry.default_shortening);
  });
  header.appendChild(headline);

  const expand = document.createElement("button");
  expand.className = "expand-toggle";
  expand.type = "button";
  expand.textContent = "expand";
  header.appendChild(expand);

  card.appendChild(header);

  if (entry.default_shortening) {
    card.appendChild(shorteningLine(entry.default_shortening, terms, handlers));
  }

  const expansion = document.createElement("div");
  expansion.className = "expansion";
  expansion.hidden = true;
  card.appendChild(expansion);
  expand.addEventListener("click", (event) => {
    event.stopPropagation();
    if (expansion.hidden) {
      expansion.hidden = false;
      expand.textContent = "collapse";
      if (!expansion.dataset.loaded) handlers.onExpand(entry.doc_id, expansion);
    } else {
      expansion.hidden = true;
      expand.textContent = "expand";
    }
  });

  return card;
}

export function renderExpansion(
  container: HTMLElement,
  shortenings: Shortening[],
  terms: TermStyles,
  handlers: FeedHandlers,
): void {
  container.textContent = "";
  container.dataset.loaded = "true";
  for (const shortening of shortenings) {
    container.appendChild(shorteningLine(shortening, terms, handlers));
  }
}

export function renderFeed(
  container: HTMLElement,
  entries: FeedEntry[],
  totalVisible: number,
  terms: TermStyles,
  handlers: FeedHandlers,
): void {
  container.textContent = "";
  for (const entry of entries) {
    container.appendChild(renderFeedEntry(entry, terms, handlers));
  }
  if (entries.length < totalVisible) {
    const note = document.createElement("div");
    note.className = "pagination-note";
    note.textContent = `showing ${entries.length} of ${totalVisible} documents`;
    container.appendChild(note);
  }
}
