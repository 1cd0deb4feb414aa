"""HTTP JSON API over one or more loaded corpora.

The API is stateless apart from the session resource: searches against an
immutable corpus and index always reproduce the same responses.  Sessions
are keyed by the ``X-Session-Id`` header (default ``"default"``) and by
corpus, and their mutations are serialized under one lock.

Fetching a document view marks it read, so reading history is tracked
server-side and the whole API is exercisable without any UI.
"""

import threading
from datetime import date

from fastapi import Body, FastAPI, Header, HTTPException, Query

from . import session as session_mod
from .feed import SearchContext, document_view, expand_payload, run_search
from .index import FilterState
from .session import SessionState
from .timeseries import result_ids

DEFAULT_SESSION_ID = "default"


def _parse_date(value: str | None, label: str) -> date | None:
    if value is None:
        return None
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise HTTPException(status_code=422, detail=f"invalid {label} date: {value!r}")


class ServiceState:
    """Loaded corpora plus per-(session, corpus) reading history."""

    def __init__(self, contexts: dict[str, SearchContext]):
        if not contexts:
            raise ValueError("at least one corpus is required")
        self.contexts = contexts
        self.sessions: dict[tuple[str, str], SessionState] = {}
        self.lock = threading.Lock()

    def context(self, corpus: str | None) -> tuple[str, SearchContext]:
        if corpus is None:
            if len(self.contexts) == 1:
                return next(iter(self.contexts.items()))
            raise HTTPException(status_code=422, detail="corpus parameter is required")
        ctx = self.contexts.get(corpus)
        if ctx is None:
            raise HTTPException(status_code=404, detail=f"unknown corpus: {corpus!r}")
        return corpus, ctx

    def get_session(self, session_id: str, corpus: str) -> SessionState:
        return self.sessions.get((session_id, corpus), SessionState())

    def put_session(self, session_id: str, corpus: str, state: SessionState) -> None:
        self.sessions[(session_id, corpus)] = state

    def sync_query(self, session_id: str, corpus: str, query, subquery) -> SessionState:
        with self.lock:
            state = session_mod.set_query(self.get_session(session_id, corpus), query, subquery)
            self.put_session(session_id, corpus, state)
            return state

    def result_universe(self, ctx: SearchContext, state: SessionState) -> set[str]:
        """Documents eligible for history mutations: the active query's
        full result set (date/count filters are per-request and do not
        shrink it), or every document when no query is active."""
        if state.query is None:
            return set(ctx.index.doc_dates)
        try:
            filters = FilterState(query=state.query, subquery=state.subquery)
        except ValueError:
            return set()
        return set(result_ids(ctx.index, filters))


def _filters_or_422(query, subquery, date_start, date_end, min_count) -> FilterState:
    try:
        return FilterState(
            query=query,
            subquery=subquery,
            date_start=date_start,
            date_end=date_end,
            min_count=min_count,
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def create_app(contexts: dict[str, SearchContext]) -> FastAPI:
    app = FastAPI(title="clioquery", version="0.1.0")
    state = ServiceState(contexts)
    app.state.service = state

    @app.get("/corpora")
    def corpora() -> list[dict]:
        out = []
        for name, ctx in state.contexts.items():
            dates = ctx.index.doc_dates.values()
            year_range = [min(dates).year, max(dates).year] if dates else None
            out.append({"name": name, "doc_count": len(ctx.corpus), "year_range": year_range})
        return out

    @app.get("/search")
    def search(
        corpus: str | None = None,
        q: str | None = None,
        subq: str | None = None,
        from_: str | None = Query(None, alias="from"),
        to: str | None = None,
        k: int = Query(1, ge=1, le=5),
        cursor: int = Query(0, ge=0),
        expand: bool = False,
        x_session_id: str = Header(DEFAULT_SESSION_ID),
    ) -> dict:
        corpus_name, ctx = state.context(corpus)
        filters = _filters_or_422(q, subq, _parse_date(from_, "from"), _parse_date(to, "to"), k)
        session = state.sync_query(x_session_id, corpus_name, q, subq)
        return run_search(ctx, filters, session, cursor=cursor, expand=expand)

    def _doc_or_404(ctx: SearchContext, doc_id: str):
        doc = ctx.corpus.documents.get(doc_id)
        if doc is None:
            raise HTTPException(status_code=404, detail=f"unknown document: {doc_id!r}")
        return doc

    @app.get("/doc/{doc_id}")
    def get_doc(
        doc_id: str,
        corpus: str | None = None,
        q: str | None = None,
        subq: str | None = None,
        x_session_id: str = Header(DEFAULT_SESSION_ID),
    ) -> dict:
        corpus_name, ctx = state.context(corpus)
        _doc_or_404(ctx, doc_id)
        filters = _filters_or_422(q, subq, None, None, 1)
        session = state.sync_query(x_session_id, corpus_name, q, subq)
        with state.lock:
            universe = state.result_universe(ctx, session)
            if doc_id in universe:
                session = session_mod.mark_read(session, doc_id, universe)
                state.put_session(x_session_id, corpus_name, session)
        return document_view(ctx, doc_id, filters)

    @app.get("/doc/{doc_id}/expand")
    def expand_doc(
        doc_id: str,
        corpus: str | None = None,
        q: str | None = None,
        subq: str | None = None,
    ) -> list[dict]:
        _, ctx = state.context(corpus)
        _doc_or_404(ctx, doc_id)
        filters = _filters_or_422(q, subq, None, None, 1)
        return expand_payload(ctx, doc_id, filters)

    def _mutate(doc_id, corpus, x_session_id, op) -> dict:
        corpus_name, ctx = state.context(corpus)
        _doc_or_404(ctx, doc_id)
        with state.lock:
            session = state.get_session(x_session_id, corpus_name)
            universe = state.result_universe(ctx, session)
            try:
                session = op(session, doc_id, universe)
            except session_mod.SessionError as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            state.put_session(x_session_id, corpus_name, session)
            return {"doc_id": doc_id, "read_state": session_mod.read_state(session, doc_id)}

    @app.post("/doc/{doc_id}/read")
    def mark_doc_read(
        doc_id: str,
        corpus: str | None = None,
        x_session_id: str = Header(DEFAULT_SESSION_ID),
    ) -> dict:
        return _mutate(doc_id, corpus, x_session_id, session_mod.mark_read)

    @app.post("/doc/{doc_id}/bookmark")
    def bookmark_doc(
        doc_id: str,
        corpus: str | None = None,
        x_session_id: str = Header(DEFAULT_SESSION_ID),
    ) -> dict:
        return _mutate(doc_id, corpus, x_session_id, session_mod.toggle_bookmark)

    @app.post("/session/query")
    def session_query(
        payload: dict = Body(...),
        corpus: str | None = None,
        x_session_id: str = Header(DEFAULT_SESSION_ID),
    ) -> dict:
        corpus_name, _ = state.context(corpus)
        query = payload.get("query")
        subquery = payload.get("subquery")
        before = state.get_session(x_session_id, corpus_name)
        after = state.sync_query(x_session_id, corpus_name, query, subquery)
        return {
            "query": after.query,
            "subquery": after.subquery,
            "reset": (before.query, before.subquery) != (after.query, after.subquery),
        }

    @app.post("/session/visibility")
    def session_visibility(
        payload: dict = Body(...),
        corpus: str | None = None,
        x_session_id: str = Header(DEFAULT_SESSION_ID),
    ) -> dict:
        corpus_name, _ = state.context(corpus)
        with state.lock:
            session = session_mod.set_visibility(
                state.get_session(x_session_id, corpus_name),
                show_read=payload.get("show_read"),
                show_unread=payload.get("show_unread"),
                show_bookmarked=payload.get("show_bookmarked"),
            )
            state.put_session(x_session_id, corpus_name, session)
        return {
            "show_read": session.show_read,
            "show_unread": session.show_unread,
            "show_bookmarked": session.show_bookmarked,
        }

    return app
