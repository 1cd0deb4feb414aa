/** Typed client for the archive service. */

import type {
  CorpusInfo,
  DocumentViewData,
  SearchResponse,
  Shortening,
  Visibility,
} from "./types.js";
import type { Filters } from "./state.js";
import { searchParams } from "./state.js";

export class ApiClient {
  private inflightSearch: AbortController | null = null;

  constructor(
    private readonly baseUrl: string = "",
    private readonly sessionId: string = "default",
  ) {}

  private headers(): Record<string, string> {
    return { "X-Session-Id": this.sessionId };
  }

  private async getJson<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      headers: this.headers(),
      signal,
    });
    if (!response.ok) {
      throw new Error(`GET ${path} failed: ${response.status}`);
    }
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, body?: unknown): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { ...this.headers(), "Content-Type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
    if (!response.ok) {
      throw new Error(`POST ${path} failed: ${response.status}`);
    }
    return (await response.json()) as T;
  }

  corpora(): Promise<CorpusInfo[]> {
    return this.getJson("/corpora");
  }

  /** At most one search in flight: a new one cancels its predecessor. */
  search(corpus: string, filters: Filters): Promise<SearchResponse> {
    this.inflightSearch?.abort();
    const controller = new AbortController();
    this.inflightSearch = controller;
    const params = searchParams(corpus, filters);
    return this.getJson<SearchResponse>(`/search?${params}`, controller.signal).finally(
      () => {
        if (this.inflightSearch === controller) this.inflightSearch = null;
      },
    );
  }

  document(corpus: string, docId: string, filters: Filters): Promise<DocumentViewData> {
    const params = new URLSearchParams({ corpus });
    if (filters.query) params.set("q", filters.query);
    if (filters.query && filters.subquery) params.set("subq", filters.subquery);
    return this.getJson(`/doc/${encodeURIComponent(docId)}?${params}`);
  }

  expand(corpus: string, docId: string, filters: Filters): Promise<Shortening[]> {
    const params = new URLSearchParams({ corpus });
    if (filters.query) params.set("q", filters.query);
    if (filters.query && filters.subquery) params.set("subq", filters.subquery);
    return this.getJson(`/doc/${encodeURIComponent(docId)}/expand?${params}`);
  }

  markRead(corpus: string, docId: string): Promise<{ doc_id: string; read_state: string }> {
    return this.postJson(`/doc/${encodeURIComponent(docId)}/read?corpus=${encodeURIComponent(corpus)}`);
  }

  toggleBookmark(
    corpus: string,
    docId: string,
  ): Promise<{ doc_id: string; read_state: string }> {
    return this.postJson(
      `/doc/${encodeURIComponent(docId)}/bookmark?corpus=${encodeURIComponent(corpus)}`,
    );
  }

  setQuery(
    corpus: string,
    query: string | null,
    subquery: string | null,
  ): Promise<{ query: string | null; subquery: string | null; reset: boolean }> {
    return this.postJson(`/session/query?corpus=${encodeURIComponent(corpus)}`, {
      query,
      subquery,
    });
  }

  setVisibility(corpus: string, visibility: Partial<Visibility>): Promise<Visibility> {
    return this.postJson(`/session/visibility?corpus=${encodeURIComponent(corpus)}`, visibility);
  }
}
