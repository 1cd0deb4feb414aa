/** Filter state and its mapping onto /search query parameters. */

export interface Filters {
  query: string | null;
  subquery: string | null;
  dateFrom: string | null;
  dateTo: string | null;
  k: number;
}

export const K_MIN = 1;
export const K_MAX = 5;

export function emptyFilters(): Filters {
  return { query: null, subquery: null, dateFrom: null, dateTo: null, k: K_MIN };
}

/** Trim free-text input; blank means "no term". */
export function normalizeTerm(raw: string): string | null {
  const trimmed = raw.trim();
  return trimmed.length > 0 ? trimmed : null;
}

export function clampK(value: number): number {
  if (!Number.isFinite(value)) return K_MIN;
  return Math.min(Math.max(Math.round(value), K_MIN), K_MAX);
}

export function searchParams(corpus: string, filters: Filters): URLSearchParams {
  const params = new URLSearchParams();
  params.set("corpus", corpus);
  if (filters.query) params.set("q", filters.query);
  if (filters.query && filters.subquery) params.set("subq", filters.subquery);
  if (filters.dateFrom) params.set("from", filters.dateFrom);
  if (filters.dateTo) params.set("to", filters.dateTo);
  if (filters.k !== K_MIN) params.set("k", String(filters.k));
  return params;
}

/** Stable identifier for one sentence of one document, used to pair feed
 * shortenings with viewer spans for hover linking. */
export function sentenceKey(docId: string, sentenceIndex: number): string {
  return `${docId}:${sentenceIndex}`;
}
