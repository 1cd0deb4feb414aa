/**
 * Scripted end-to-end behavior of the three linked views, driven through
 * the real components against recorded service payloads: clicking a feed
 * shortening opens and scrolls the viewer to the highlighted span, hover
 * syncs across views, read documents grey out in feed and rug, and the
 * count slider never grows the feed.
 */

import { beforeEach, describe, expect, it, vi } from "vitest";

import { boot, type App } from "../src/app.js";
import { palette } from "../src/palette.js";
import type { DocumentViewData, SearchResponse, Shortening } from "../src/types.js";
import { fixture, flush, installFetch, mountShell, type RecordedCall } from "./helpers.js";

const corpora = fixture<unknown>("corpora.json");
const searchDefault = fixture<SearchResponse>("search_default.json");
const searchDuarte = fixture<SearchResponse>("search_duarte.json");
const searchDuarteK3 = fixture<SearchResponse>("search_duarte_k3.json");
const searchBoth = fixture<SearchResponse>("search_duarte_reagan.json");
const docS06 = fixture<DocumentViewData>("doc_s06.json");
const expandS06 = fixture<Shortening[]>("expand_s06.json");

let scrolled: Element[] = [];

beforeEach(() => {
  mountShell();
  scrolled = [];
  Element.prototype.scrollIntoView = function (this: Element) {
    scrolled.push(this);
  };
});

interface Harness {
  app: App;
  calls: RecordedCall[];
  setSearchPayload: (payload: SearchResponse) => void;
}

async function bootApp(): Promise<Harness> {
  let bothPayload = structuredClone(searchBoth);
  let duartePayload = structuredClone(searchDuarte);
  const calls = installFetch([
    { method: "GET", path: "/corpora", params: {}, payload: corpora },
    { method: "GET", path: "/search", params: { corpus: "salvador" }, payload: searchDefault },
    {
      method: "GET",
      path: "/search",
      params: { corpus: "salvador", q: "duarte" },
      payload: () => duartePayload,
    },
    {
      method: "GET",
      path: "/search",
      params: { corpus: "salvador", q: "duarte", k: "3" },
      payload: searchDuarteK3,
    },
    {
      method: "GET",
      path: "/search",
      params: { corpus: "salvador", q: "duarte", subq: "reagan" },
      payload: () => bothPayload,
    },
    {
      method: "GET",
      path: "/doc/s06",
      params: { corpus: "salvador", q: "duarte", subq: "reagan" },
      payload: docS06,
    },
    {
      method: "GET",
      path: "/doc/s06/expand",
      params: { corpus: "salvador", q: "duarte", subq: "reagan" },
      payload: expandS06,
    },
    {
      method: "POST",
      path: "/session/query",
      params: { corpus: "salvador" },
      payload: { query: null, subquery: null, reset: true },
    },
    {
      method: "POST",
      path: "/session/visibility",
      params: { corpus: "salvador" },
      payload: { show_read: false, show_unread: true, show_bookmarked: true },
    },
    {
      method: "POST",
      path: "/doc/s05/bookmark",
      params: { corpus: "salvador" },
      payload: { doc_id: "s05", read_state: "bookmarked" },
    },
  ]);
  const app = await boot(document);
  await flush();
  return {
    app,
    calls,
    setSearchPayload: (payload) => {
      bothPayload = payload;
      duartePayload = payload;
    },
  };
}

function input(id: string): HTMLInputElement {
  return document.getElementById(id) as HTMLInputElement;
}

function setSearch(query: string, subquery = ""): void {
  input("query-input").value = query;
  input("subquery-input").value = subquery;
  input("query-input").dispatchEvent(new Event("change"));
}

describe("linked views", () => {
  it("boots into the neutral all-documents view", async () => {
    await bootApp();
    expect(document.querySelectorAll("#feed .feed-entry")).toHaveLength(
      searchDefault.feed.length,
    );
    const line = document.querySelector("#timeseries .series-line.neutral");
    expect(line?.getAttribute("stroke")).toBe(palette.neutral);
    expect(document.querySelector("#feed .count-marker")).toBeNull();
  });

  it("clicking a feed shortening opens the viewer scrolled to its span", async () => {
    const harness = await bootApp();
    setSearch("duarte", "reagan");
    await flush();
    expect(document.querySelectorAll("#feed .feed-entry")).toHaveLength(
      searchBoth.feed.length,
    );

    // the service will report s06 read after the fetch; mirror that in the
    // payload served to the refresh triggered by opening the document
    const refreshed = structuredClone(searchBoth);
    refreshed.feed.find((e) => e.doc_id === "s06")!.read_state = "read";
    refreshed.timeseries.rug_points.find((p) => p.doc_id === "s06")!.read_state = "read";
    refreshed.summary = { read_count: 1, unread_count: 2, bookmarked_count: 0 };
    harness.setSearchPayload(refreshed);

    const line = document.querySelector<HTMLElement>(
      '#feed .feed-entry[data-doc-id="s06"] .shortening',
    );
    expect(line).not.toBeNull();
    line!.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    await flush();

    // viewer shows the document with the shortening span highlighted
    const fetched = harness.calls.some(
      (c) => c.method === "GET" && c.url.pathname === "/doc/s06",
    );
    expect(fetched).toBe(true);
    const spans = document.querySelectorAll<HTMLElement>(
      '#viewer .hl-shortening[data-sentence-key="s06:1"]',
    );
    expect(spans.length).toBeGreaterThan(0);
    const spanText = [...spans].map((el) => el.textContent).join("");
    expect(spanText).toContain("Reagan sent congratulations");

    // and was scrolled to the clicked shortening's source offset
    const entry = searchBoth.feed.find((e) => e.doc_id === "s06")!;
    const target = scrolled.find((el) => {
      const start = Number((el as HTMLElement).dataset.start);
      const end = Number((el as HTMLElement).dataset.end);
      return start <= entry.default_shortening!.source_char_start
        && entry.default_shortening!.source_char_start < end;
    });
    expect(target).toBeDefined();

    // reading history propagated: feed entry greyed, rug point grey
    const card = document.querySelector('#feed .feed-entry[data-doc-id="s06"]');
    expect(card?.classList.contains("read")).toBe(true);
    const rug = document.querySelector('#timeseries .rug-point[data-doc-id="s06"]');
    expect(rug?.getAttribute("stroke")).toBe(palette.read);
  });

  it("hover applies the shared hover color in both views", async () => {
    await bootApp();
    setSearch("duarte", "reagan");
    await flush();
    document
      .querySelector<HTMLElement>('#feed .feed-entry[data-doc-id="s06"] .shortening')!
      .dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    await flush();

    const feedLine = document.querySelector<HTMLElement>(
      '#feed [data-sentence-key="s06:1"]',
    )!;
    const viewerSpans = () =>
      document.querySelectorAll<HTMLElement>('#viewer [data-sentence-key="s06:1"]');
    expect(viewerSpans().length).toBeGreaterThan(0);

    // feed -> viewer
    feedLine.dispatchEvent(new MouseEvent("mouseenter"));
    expect([...viewerSpans()].every((el) => el.classList.contains("hovered"))).toBe(true);
    expect(feedLine.classList.contains("hovered")).toBe(true);
    feedLine.dispatchEvent(new MouseEvent("mouseleave"));
    expect([...viewerSpans()].some((el) => el.classList.contains("hovered"))).toBe(false);

    // viewer -> feed
    viewerSpans()[0]!.dispatchEvent(new MouseEvent("mouseenter"));
    expect(feedLine.classList.contains("hovered")).toBe(true);
    viewerSpans()[0]!.dispatchEvent(new MouseEvent("mouseleave"));
    expect(feedLine.classList.contains("hovered")).toBe(false);
  });

  it("raising the count threshold never grows the feed", async () => {
    await bootApp();
    setSearch("duarte");
    await flush();
    const before = document.querySelectorAll("#feed .feed-entry").length;
    expect(before).toBe(searchDuarte.feed.length);

    const slider = input("k-slider");
    slider.value = "3";
    slider.dispatchEvent(new Event("input"));
    slider.dispatchEvent(new Event("change"));
    await flush();

    const after = document.querySelectorAll("#feed .feed-entry").length;
    expect(after).toBe(searchDuarteK3.feed.length);
    expect(after).toBeLessThanOrEqual(before);
    expect(document.getElementById("k-value")?.textContent).toBe("3");
  });

  it("narrowing the date range re-issues the search and narrows the feed", async () => {
    await bootApp();
    setSearch("duarte");
    await flush();
    const before = document.querySelectorAll("#feed .feed-entry").length;

    const narrowed = structuredClone(searchDuarte);
    narrowed.feed = narrowed.feed.filter((e) => e.date.startsWith("1984"));
    narrowed.timeseries.rug_points = narrowed.timeseries.rug_points.filter((p) =>
      p.date.startsWith("1984"),
    );
    narrowed.timeseries.years = [1984];
    narrowed.timeseries.query_counts = [narrowed.feed.length];
    narrowed.total_results = narrowed.visible_results = narrowed.feed.length;
    installFetch([
      { method: "GET", path: "/corpora", params: {}, payload: corpora },
      {
        method: "GET",
        path: "/search",
        params: { corpus: "salvador", q: "duarte", from: "1984-01-01", to: "1984-12-31" },
        payload: narrowed,
      },
    ]);

    input("date-from").value = "1984-01-01";
    input("date-to").value = "1984-12-31";
    input("date-to").dispatchEvent(new Event("change"));
    await flush();

    const after = document.querySelectorAll("#feed .feed-entry").length;
    expect(after).toBe(narrowed.feed.length);
    expect(after).toBeLessThan(before);
    const dates = [...document.querySelectorAll("#feed .feed-date")].map(
      (el) => el.textContent,
    );
    expect(dates.every((d) => d?.startsWith("1984"))).toBe(true);
  });

  it("clearing the query returns to the neutral overview", async () => {
    await bootApp();
    setSearch("duarte");
    await flush();
    expect(document.querySelector("#timeseries .series-line.query")).not.toBeNull();
    setSearch("");
    await flush();
    const line = document.querySelector("#timeseries .series-line.neutral");
    expect(line?.getAttribute("stroke")).toBe(palette.neutral);
  });

  it("bookmarking from the feed marks the entry and its rug point red", async () => {
    const harness = await bootApp();
    setSearch("duarte");
    await flush();

    const refreshed = structuredClone(searchDuarte);
    refreshed.feed.find((e) => e.doc_id === "s05")!.read_state = "bookmarked";
    refreshed.timeseries.rug_points.find((p) => p.doc_id === "s05")!.read_state =
      "bookmarked";
    refreshed.summary = { read_count: 0, unread_count: 9, bookmarked_count: 1 };
    harness.setSearchPayload(refreshed);

    document
      .querySelector<HTMLElement>('#feed .feed-entry[data-doc-id="s05"] .bookmark-star')!
      .dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await flush();
    await flush();

    const posted = harness.calls.some(
      (c) => c.method === "POST" && c.url.pathname === "/doc/s05/bookmark",
    );
    expect(posted).toBe(true);
    const star = document.querySelector<HTMLElement>(
      '#feed .feed-entry[data-doc-id="s05"] .bookmark-star',
    );
    expect(star?.textContent).toBe("★");
    const rug = document.querySelector('#timeseries .rug-point[data-doc-id="s05"]');
    expect(rug?.getAttribute("stroke")).toBe(palette.bookmark);
    const bar = document.querySelector<HTMLElement>("#history-bar .history-part.bookmarked");
    expect(bar?.style.width).not.toBe("0%");
  });

  it("history toggles repost visibility and refresh the feed", async () => {
    const harness = await bootApp();
    setSearch("duarte");
    await flush();

    const filtered = structuredClone(searchDuarte);
    filtered.feed = filtered.feed.filter((e) => e.doc_id !== "s05");
    filtered.timeseries.rug_points = filtered.timeseries.rug_points.filter(
      (p) => p.doc_id !== "s05",
    );
    filtered.visible_results = filtered.feed.length;
    harness.setSearchPayload(filtered);

    const checkbox = document.querySelector<HTMLInputElement>(
      "#history-bar .history-toggle.read input",
    )!;
    checkbox.checked = false;
    checkbox.dispatchEvent(new Event("change"));
    await flush();
    await flush();

    const posted = harness.calls.find(
      (c) => c.method === "POST" && c.url.pathname === "/session/visibility",
    );
    expect(posted).toBeDefined();
    expect(posted!.body).toEqual({ show_read: false });
    expect(
      document.querySelector('#feed .feed-entry[data-doc-id="s05"]'),
    ).toBeNull();
  });
});
