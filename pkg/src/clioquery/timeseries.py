"""Annual document-count aggregation for the time-series view.

The query line counts documents containing the query per year (date
filter applied; subquery and count filters do not bend it), the subquery
line counts documents containing both terms, and one rug point is emitted
per document in the filtered, visibility-respecting result set.
"""

from dataclasses import dataclass
from datetime import date

from . import session as session_mod
from .index import FilterState, InvertedIndex, boolean_search
from .session import SessionState


@dataclass
class RugPoint:
    doc_id: str
    date: date
    headline: str
    read_state: str

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "date": self.date.isoformat(),
            "headline": self.headline,
            "read_state": self.read_state,
        }


@dataclass
class TimeSeries:
    years: list[int]
    query_counts: list[int]
    subquery_counts: list[int] | None
    rug_points: list[RugPoint]
    neutral: bool = False

    def to_dict(self) -> dict:
        return {
            "years": self.years,
            "query_counts": self.query_counts,
            "subquery_counts": self.subquery_counts,
            "rug_points": [p.to_dict() for p in self.rug_points],
            "neutral": self.neutral,
        }


def result_ids(index: InvertedIndex, filters: FilterState) -> list[str]:
    """The filtered result set in (date, id) order.  Without a query this
    is the default view: every corpus document in the date range."""
    if filters.query is None:
        ids = [d for d in index.all_doc_ids_chronological() if filters.accepts_date(index.doc_dates[d])]
        return ids
    return boolean_search(index, filters)


def visible_result_ids(index: InvertedIndex, filters: FilterState, state: SessionState) -> list[str]:
    """Result set narrowed by the session's category visibility toggles;
    the feed and the rug points share this exact evaluation."""
    allowed = session_mod.visible_states(state)
    return [
        d for d in result_ids(index, filters)
        if session_mod.read_state(state, d) in allowed
    ]


def _year_range(index: InvertedIndex, filters: FilterState) -> list[int]:
    if index.n_docs == 0:
        return []
    y0 = filters.date_start.year if filters.date_start else min(index.doc_dates.values()).year
    y1 = filters.date_end.year if filters.date_end else max(index.doc_dates.values()).year
    if y0 > y1:
        return []
    return list(range(y0, y1 + 1))


def _counts_by_year(index: InvertedIndex, doc_ids, years: list[int]) -> list[int]:
    counts = dict.fromkeys(years, 0)
    for doc_id in doc_ids:
        year = index.doc_dates[doc_id].year
        if year in counts:
            counts[year] += 1
    return [counts[y] for y in years]


def aggregate(index: InvertedIndex, filters: FilterState, state: SessionState) -> TimeSeries:
    """Build the time series plus rug points for one search.

    Query-absent searches produce the neutral overview: per-year counts of
    all corpus documents.
    """
    years = _year_range(index, filters)
    dates_only = FilterState(date_start=filters.date_start, date_end=filters.date_end)

    if filters.query is None:
        line_ids = result_ids(index, dates_only)
        query_counts = _counts_by_year(index, line_ids, years)
        subquery_counts = None
        neutral = True
    else:
        q_filters = FilterState(
            query=filters.query,
            date_start=filters.date_start,
            date_end=filters.date_end,
        )
        query_counts = _counts_by_year(index, boolean_search(index, q_filters), years)
        subquery_counts = None
        if filters.subquery is not None:
            both_filters = FilterState(
                query=filters.query,
                subquery=filters.subquery,
                date_start=filters.date_start,
                date_end=filters.date_end,
            )
            subquery_counts = _counts_by_year(index, boolean_search(index, both_filters), years)
        neutral = False

    rug = [
        RugPoint(
            doc_id=d,
            date=index.doc_dates[d],
            headline=index.doc_headlines[d],
            read_state=session_mod.read_state(state, d),
        )
        for d in visible_result_ids(index, filters, state)
    ]
    return TimeSeries(
        years=years,
        query_counts=query_counts,
        subquery_counts=subquery_counts,
        rug_points=rug,
        neutral=neutral,
    )


def year_tooltip(ts: TimeSeries, year: int) -> int:
    """Annual count shown when hovering a year."""
    if year not in ts.years:
        raise ValueError(f"year {year} outside the series range")
    return ts.query_counts[ts.years.index(year)]
