"""Query-scoped reading-history tracking.

Every document in a result set is exactly one of read, unread, or
bookmarked (the sets never intersect).  History resets whenever the
(query, subquery) pair changes; filter-only changes keep it.  A shadow
set remembers documents that were ever opened so that removing a bookmark
restores the document's read status instead of forgetting it.
"""

import json
from dataclasses import dataclass, replace

SESSION_FORMAT_VERSION = 1

READ = "read"
UNREAD = "unread"
BOOKMARKED = "bookmarked"


class SessionError(ValueError):
    """Raised for mutations outside the current result set."""


@dataclass(frozen=True)
class SessionState:
    query: str | None = None
    subquery: str | None = None
    read: frozenset[str] = frozenset()
    bookmarked: frozenset[str] = frozenset()
    ever_read: frozenset[str] = frozenset()
    show_read: bool = True
    show_unread: bool = True
    show_bookmarked: bool = True


@dataclass(frozen=True)
class SummaryCounts:
    read_count: int
    unread_count: int
    bookmarked_count: int

    def to_dict(self) -> dict:
        return {
            "read_count": self.read_count,
            "unread_count": self.unread_count,
            "bookmarked_count": self.bookmarked_count,
        }


def set_query(state: SessionState, query: str | None, subquery: str | None = None) -> SessionState:
    """New state; history is cleared iff the (query, subquery) pair changed.
    A subquery change counts as a new query because it reshapes the set of
    mentions under review.  Visibility toggles persist."""
    if (query, subquery) == (state.query, state.subquery):
        return state
    return SessionState(
        query=query,
        subquery=subquery,
        show_read=state.show_read,
        show_unread=state.show_unread,
        show_bookmarked=state.show_bookmarked,
    )


def _require_in_result_set(doc_id: str, result_set) -> None:
    if doc_id not in result_set:
        raise SessionError(f"document {doc_id!r} is not in the current result set")


def mark_read(state: SessionState, doc_id: str, result_set) -> SessionState:
    """Record that a document was opened.  Bookmarked documents stay
    bookmarked (the partition is preserved) but are remembered as opened."""
    _require_in_result_set(doc_id, result_set)
    if doc_id in state.bookmarked:
        return replace(state, ever_read=state.ever_read | {doc_id})
    return replace(
        state,
        read=state.read | {doc_id},
        ever_read=state.ever_read | {doc_id},
    )


def toggle_bookmark(state: SessionState, doc_id: str, result_set) -> SessionState:
    _require_in_result_set(doc_id, result_set)
    if doc_id in state.bookmarked:
        restored = state.read | {doc_id} if doc_id in state.ever_read else state.read
        return replace(state, bookmarked=state.bookmarked - {doc_id}, read=restored)
    return replace(
        state,
        bookmarked=state.bookmarked | {doc_id},
        read=state.read - {doc_id},
    )


def read_state(state: SessionState, doc_id: str) -> str:
    if doc_id in state.bookmarked:
        return BOOKMARKED
    if doc_id in state.read:
        return READ
    return UNREAD


def summary(state: SessionState, result_set) -> SummaryCounts:
    """Counts of read / unread / bookmarked within the result set; they
    always sum to the result-set size."""
    ids = set(result_set)
    read_count = len(ids & state.read - state.bookmarked)
    bookmarked_count = len(ids & state.bookmarked)
    return SummaryCounts(
        read_count=read_count,
        unread_count=len(ids) - read_count - bookmarked_count,
        bookmarked_count=bookmarked_count,
    )


def visible_states(state: SessionState) -> set[str]:
    allowed = set()
    if state.show_read:
        allowed.add(READ)
    if state.show_unread:
        allowed.add(UNREAD)
    if state.show_bookmarked:
        allowed.add(BOOKMARKED)
    return allowed


def set_visibility(
    state: SessionState,
    show_read: bool | None = None,
    show_unread: bool | None = None,
    show_bookmarked: bool | None = None,
) -> SessionState:
    return replace(
        state,
        show_read=state.show_read if show_read is None else show_read,
        show_unread=state.show_unread if show_unread is None else show_unread,
        show_bookmarked=state.show_bookmarked if show_bookmarked is None else show_bookmarked,
    )


def save_session(state: SessionState, path) -> None:
    payload = {
        "version": SESSION_FORMAT_VERSION,
        "query": state.query,
        "subquery": state.subquery,
        "read": sorted(state.read),
        "bookmarked": sorted(state.bookmarked),
        "ever_read": sorted(state.ever_read),
        "visibility": {
            "show_read": state.show_read,
            "show_unread": state.show_unread,
            "show_bookmarked": state.show_bookmarked,
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_session(path) -> SessionState:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("version") != SESSION_FORMAT_VERSION:
        raise ValueError("unsupported session file version")
    vis = payload.get("visibility", {})
    return SessionState(
        query=payload.get("query"),
        subquery=payload.get("subquery"),
        read=frozenset(payload.get("read", ())),
        bookmarked=frozenset(payload.get("bookmarked", ())),
        ever_read=frozenset(payload.get("ever_read", ())),
        show_read=vis.get("show_read", True),
        show_unread=vis.get("show_unread", True),
        show_bookmarked=vis.get("show_bookmarked", True),
    )
