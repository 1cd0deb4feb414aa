/** Wire types mirroring the service's JSON payloads. */

export type ShorteningMethod =
  | "ClauseDeletion"
  | "RelSpan"
  | "CharWindow"
  | "PassThrough";

export type ReadState = "read" | "unread" | "bookmarked";

export interface Shortening {
  doc_id: string;
  sentence_index: number;
  method: ShorteningMethod;
  kept_token_indices: number[];
  display_text: string;
  source_char_start: number;
  source_char_end: number;
  score: number;
}

export interface CountMarker {
  term: string;
  count: number;
  bucket: number;
}

export interface FeedEntry {
  doc_id: string;
  date: string;
  headline: string;
  default_shortening: Shortening | null;
  expanded: Shortening[] | null;
  count_marker: CountMarker | null;
  read_state: ReadState;
}

export interface RugPoint {
  doc_id: string;
  date: string;
  headline: string;
  read_state: ReadState;
}

export interface TimeSeriesData {
  years: number[];
  query_counts: number[];
  subquery_counts: number[] | null;
  rug_points: RugPoint[];
  neutral: boolean;
}

export interface HistorySummary {
  read_count: number;
  unread_count: number;
  bookmarked_count: number;
}

export interface SearchResponse {
  feed: FeedEntry[];
  timeseries: TimeSeriesData;
  summary: HistorySummary;
  total_results: number;
  visible_results: number;
  next_cursor: number | null;
}

export type HighlightKind = "query" | "subquery" | "shortening";

export interface HighlightSpan {
  char_start: number;
  char_end: number;
  kind: HighlightKind;
}

export interface DocumentViewData {
  doc_id: string;
  headline: string;
  date: string;
  body: string;
  highlight_spans: HighlightSpan[];
}

export interface CorpusInfo {
  name: string;
  doc_count: number;
  year_range: [number, number] | null;
}

export interface Visibility {
  show_read: boolean;
  show_unread: boolean;
  show_bookmarked: boolean;
}
