/**
 * Application shell: wires the search bar and filters to the service and
 * keeps the three views (feed, viewer, time series) linked.
 */

import { ApiClient } from "./api.js";
import { renderExpansion, renderFeed } from "./feed.js";
import { renderHistoryBar } from "./historybar.js";
import { clampK, emptyFilters, normalizeTerm, type Filters } from "./state.js";
import { renderTimeSeries } from "./timeseries.js";
import { applyHover, renderViewer, scrollToOffset } from "./viewer.js";
import type { SearchResponse, Shortening, Visibility } from "./types.js";

export interface AppElements {
  queryInput: HTMLInputElement;
  subqueryInput: HTMLInputElement;
  dateFromInput: HTMLInputElement;
  dateToInput: HTMLInputElement;
  kSlider: HTMLInputElement;
  kValue: HTMLElement;
  feed: HTMLElement;
  viewer: HTMLElement;
  timeseries: HTMLElement;
  historyBar: HTMLElement;
  status: HTMLElement;
}

export class App {
  filters: Filters = emptyFilters();
  visibility: Visibility = { show_read: true, show_unread: true, show_bookmarked: true };
  lastResponse: SearchResponse | null = null;
  private openShortenings: Shortening[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly corpus: string,
    private readonly el: AppElements,
  ) {}

  mount(): void {
    const rerun = () => void this.runSearch();
    this.el.queryInput.addEventListener("change", rerun);
    this.el.subqueryInput.addEventListener("change", rerun);
    this.el.dateFromInput.addEventListener("change", rerun);
    this.el.dateToInput.addEventListener("change", rerun);
    this.el.kSlider.addEventListener("input", () => {
      this.el.kValue.textContent = this.el.kSlider.value;
    });
    this.el.kSlider.addEventListener("change", rerun);
  }

  readFilters(): Filters {
    const query = normalizeTerm(this.el.queryInput.value);
    return {
      query,
      subquery: query ? normalizeTerm(this.el.subqueryInput.value) : null,
      dateFrom: normalizeTerm(this.el.dateFromInput.value),
      dateTo: normalizeTerm(this.el.dateToInput.value),
      k: clampK(Number(this.el.kSlider.value)),
    };
  }

  async runSearch(): Promise<void> {
    const next = this.readFilters();
    const queryChanged =
      next.query !== this.filters.query || next.subquery !== this.filters.subquery;
    this.filters = next;
    if (queryChanged) {
      await this.api.setQuery(this.corpus, next.query, next.subquery);
    }
    let response: SearchResponse;
    try {
      response = await this.api.search(this.corpus, this.filters);
    } catch (error) {
      if ((error as Error).name === "AbortError") return;
      this.el.status.textContent = String(error);
      return;
    }
    this.render(response);
  }

  render(response: SearchResponse): void {
    this.lastResponse = response;
    const terms = { query: this.filters.query, subquery: this.filters.subquery };
    const handlers = {
      onOpen: (docId: string, shortening: Shortening | null) =>
        void this.openDocument(docId, shortening),
      onToggleBookmark: (docId: string) => void this.toggleBookmark(docId),
      onExpand: (docId: string, container: HTMLElement) =>
        void this.expandEntry(docId, container, handlers),
      onHoverSentence: (key: string | null) => applyHover(document, key),
    };
    renderFeed(this.el.feed, response.feed, response.visible_results, terms, handlers);
    renderTimeSeries(this.el.timeseries, response.timeseries, undefined, {
      onRugClick: (point) => void this.openDocument(point.doc_id, null),
    });
    renderHistoryBar(this.el.historyBar, response.summary, this.visibility, {
      onVisibilityChange: (changes) => void this.changeVisibility(changes),
    });
    this.el.status.textContent = `${response.total_results} documents`;
  }

  private async expandEntry(
    docId: string,
    container: HTMLElement,
    handlers: Parameters<typeof renderExpansion>[3],
  ): Promise<void> {
    const shortenings = await this.api.expand(this.corpus, docId, this.filters);
    const terms = { query: this.filters.query, subquery: this.filters.subquery };
    renderExpansion(container, shortenings, terms, handlers);
  }

  async openDocument(docId: string, shortening: Shortening | null): Promise<void> {
    const [view, shortenings] = await Promise.all([
      this.api.document(this.corpus, docId, this.filters),
      this.filters.query
        ? this.api.expand(this.corpus, docId, this.filters)
        : Promise.resolve([]),
    ]);
    this.openShortenings = shortenings;
    renderViewer(this.el.viewer, view, this.openShortenings, {
      onHoverSentence: (key) => applyHover(document, key),
    });
    if (shortening) {
      scrollToOffset(this.el.viewer, shortening.source_char_start);
    }
    // opening the document marked it read server-side; refresh the linked views
    await this.refresh();
  }

  private async toggleBookmark(docId: string): Promise<void> {
    await this.api.toggleBookmark(this.corpus, docId);
    await this.refresh();
  }

  private async changeVisibility(changes: Partial<Visibility>): Promise<void> {
    this.visibility = { ...this.visibility, ...changes };
    await this.api.setVisibility(this.corpus, changes);
    await this.refresh();
  }

  private async refresh(): Promise<void> {
    try {
      this.render(await this.api.search(this.corpus, this.filters));
    } catch (error) {
      if ((error as Error).name !== "AbortError") {
        this.el.status.textContent = String(error);
      }
    }
  }
}

export function elementsFromDocument(root: Document): AppElements {
  const need = <T extends HTMLElement>(id: string): T => {
    const el = root.getElementById(id);
    if (!el) throw new Error(`missing #${id}`);
    return el as T;
  };
  return {
    queryInput: need<HTMLInputElement>("query-input"),
    subqueryInput: need<HTMLInputElement>("subquery-input"),
    dateFromInput: need<HTMLInputElement>("date-from"),
    dateToInput: need<HTMLInputElement>("date-to"),
    kSlider: need<HTMLInputElement>("k-slider"),
    kValue: need("k-value"),
    feed: need("feed"),
    viewer: need("viewer"),
    timeseries: need("timeseries"),
    historyBar: need("history-bar"),
    status: need("status"),
  };
}

export async function boot(root: Document, baseUrl = ""): Promise<App> {
  const api = new ApiClient(baseUrl);
  const corpora = await api.corpora();
  const first = corpora[0];
  if (!first) throw new Error("service reports no corpora");
  const app = new App(api, first.name, elementsFromDocument(root));
  app.mount();
  await app.runSearch();
  return app;
}
