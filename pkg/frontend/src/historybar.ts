/**
 * Reading-history bar: a stacked read/unread/bookmarked strip with counts
 * and three checkbox toggles controlling category visibility in the feed.
 */

import { palette } from "./palette.js";
import type { HistorySummary, Visibility } from "./types.js";

export interface HistoryHandlers {
  onVisibilityChange: (changes: Partial<Visibility>) => void;
}

const CATEGORIES = [
  { key: "read", countKey: "read_count", visKey: "show_read", color: palette.read },
  { key: "unread", countKey: "unread_count", visKey: "show_unread", color: palette.unread },
  {
    key: "bookmarked",
    countKey: "bookmarked_count",
    visKey: "show_bookmarked",
    color: palette.bookmark,
  },
] as const;

export function renderHistoryBar(
  container: HTMLElement,
  summary: HistorySummary,
  visibility: Visibility,
  handlers: HistoryHandlers,
): void {
  container.textContent = "";
  const total = summary.read_count + summary.unread_count + summary.bookmarked_count;

  const bar = document.createElement("div");
  bar.className = "history-bar";
  for (const cat of CATEGORIES) {
    const count = summary[cat.countKey];
    const part = document.createElement("div");
    part.className = `history-part ${cat.key}`;
    part.style.backgroundColor = cat.color;
    part.style.width = total > 0 ? `${(count / total) * 100}%` : "0%";
    part.title = `${count} ${cat.key}`;
    bar.appendChild(part);
  }
  container.appendChild(bar);

  const legend = document.createElement("div");
  legend.className = "history-legend";
  for (const cat of CATEGORIES) {
    const label = document.createElement("label");
    label.className = `history-toggle ${cat.key}`;
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = visibility[cat.visKey];
    box.addEventListener("change", () =>
      handlers.onVisibilityChange({ [cat.visKey]: box.checked }),
    );
    label.appendChild(box);
    label.appendChild(
      document.createTextNode(` ${summary[cat.countKey]} ${cat.key}`),
    );
    legend.appendChild(label);
  }
  container.appendChild(legend);
}
