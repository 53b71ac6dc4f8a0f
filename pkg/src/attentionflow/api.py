"""HTTP JSON facade: search, node detail and resolved ego-network views.

Responses are canonically serialized (sorted keys, minimal separators), so
identical queries return byte-identical bodies. All state is an immutable
store snapshot; any number of requests may run concurrently.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.middleware.cors import CORSMiddleware

from .core import ObservationWindow, canonical_json, day, day_text, align_daily, window_sum
from .influence import EgoNetwork, UnknownNodeError, extract_ego_network
from .layout import DEFAULT_RADIUS_BOUNDS, SORT_CRITERIA, resolve_layout
from .store import DatasetStore, search

DEFAULT_THRESHOLD = 0.01  # the influence slider defaults to 1%
DEFAULT_SORT = "force"
DEFAULT_MAX_ALTERS = 200


def _bad_request(message: str):
    raise HTTPException(status_code=400, detail=message)


def _parse_day_param(value: str, name: str):
    try:
        return day(value)
    except ValueError:
        _bad_request(f"query parameter {name!r} must be a YYYY-MM-DD date")


def _event_dict(event) -> dict:
    return {
        "node_id": event.node_id,
        "date": day_text(event.date),
        "label": event.label,
        "url": event.url,
    }


def _influence_dict(influence) -> dict | None:
    if influence is None:
        return None
    return {"flux": influence.flux, "normalized": influence.normalized}


def cap_alters(ego_net: EgoNetwork, max_alters: int) -> tuple[EgoNetwork, bool]:
    """Keep the ``max_alters`` strongest alters by total incident flux."""
    if len(ego_net.alters) <= max_alters:
        return ego_net, False

    def total_flux(entry) -> float:
        return math.fsum(
            inf.flux for inf in (entry.incoming, entry.outgoing) if inf is not None
        )

    kept = sorted(ego_net.alters, key=lambda a: (-total_flux(a), a.node.id))
    kept = sorted(kept[:max_alters], key=lambda a: a.node.id)
    return (
        EgoNetwork(
            ego_net.ego, ego_net.window, ego_net.threshold, tuple(kept), ego_net.self_loop
        ),
        True,
    )


def build_ego_response(
    store: DatasetStore,
    ego_id: str,
    window: ObservationWindow,
    threshold: float,
    sort: str,
    bounds: tuple[float, float] = DEFAULT_RADIUS_BOUNDS,
    max_alters: int = DEFAULT_MAX_ALTERS,
) -> dict:
    """Fully resolved ego view, hover data included for every alter."""
    ego_net = extract_ego_network(store, ego_id, window, threshold)
    ego_net, truncated = cap_alters(ego_net, max_alters)
    layout = resolve_layout(ego_net, criterion=sort, bounds=bounds)
    geometry = {n.node_id: n for n in layout.nodes}

    def rings_list(node_id: str) -> list[dict]:
        return [
            {"year": r.year, "outer_radius": r.outer_radius, "color_index": r.color_index}
            for r in geometry[node_id].rings
        ]

    ego = ego_net.ego
    alters = []
    for entry in ego_net.alters:
        node = entry.node
        geo = geometry[node.id]
        alters.append(
            {
                "id": node.id,
                "name": node.name,
                "created": day_text(node.created),
                "categories": list(node.categories),
                "meta": node.meta,
                "influencing_time": day_text(entry.influencing_time),
                "incoming": _influence_dict(entry.incoming),
                "outgoing": _influence_dict(entry.outgoing),
                "grey_period": {
                    "start": day_text(node.created),
                    "end": day_text(entry.influencing_time),
                },
                "x": geo.x,
                "y": geo.y,
                "radius": geo.radius,
                "rings": rings_list(node.id),
                "attention": align_daily(node.series, window).tolist(),
                "window_attention": window_sum(node.series, window),
            }
        )

    ego_geo = geometry[ego.id]
    return {
        "window": {"start": day_text(window.start), "end": day_text(window.end)},
        "threshold": threshold,
        "sort": sort,
        "ego": {
            "id": ego.id,
            "name": ego.name,
            "created": day_text(ego.created),
            "categories": list(ego.categories),
            "meta": ego.meta,
            "x": ego_geo.x,
            "y": ego_geo.y,
            "radius": ego_geo.radius,
            "rings": rings_list(ego.id),
            "attention": align_daily(ego.series, window).tolist(),
            "window_attention": window_sum(ego.series, window),
        },
        "alters": alters,
        "self_loop": _influence_dict(ego_net.self_loop),
        "edges": [
            {
                "source": e.source_id,
                "target": e.target_id,
                "width": e.width,
                "is_self_loop": e.is_self_loop,
            }
            for e in layout.edges
        ],
        "events": [_event_dict(ev) for ev in store.events_for(ego.id, window)],
        "alters_truncated": truncated,
    }


def create_app(
    store: DatasetStore | None = None,
    *,
    max_alters: int = DEFAULT_MAX_ALTERS,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    """Application over one immutable store; ``store=None`` serves 503s."""
    app = FastAPI(title="attentionflow", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store
    app.state.max_alters = max_alters

    def canonical(payload, status_code: int = 200) -> Response:
        return Response(
            content=canonical_json(payload),
            status_code=status_code,
            media_type="application/json",
        )

    def ready_store() -> DatasetStore:
        if app.state.store is None:
            raise HTTPException(status_code=503, detail="no dataset snapshot loaded")
        return app.state.store

    @app.get("/api/healthz")
    def healthz():
        if app.state.store is None:
            return canonical({"status": "loading"}, status_code=503)
        s = app.state.store
        return canonical(
            {
                "status": "ok",
                "nodes": s.n_nodes,
                "edges": s.n_edges,
                "events": s.n_events,
                "snapshot": s.snapshot_id,
            }
        )

    @app.get("/api/search")
    def search_endpoint(q: str | None = Query(default=None), limit: int = Query(default=20)):
        s = ready_store()
        if q is None:
            _bad_request("query parameter 'q' is required")
        if limit < 1:
            _bad_request("query parameter 'limit' must be >= 1")
        hits = search(s, q, limit)
        return canonical(
            [
                {
                    "id": h.id,
                    "name": h.name,
                    "total_attention": h.total_attention,
                    "rank_score": h.rank_score,
                }
                for h in hits
            ]
        )

    @app.get("/api/nodes/{node_id}")
    def node_detail(node_id: str):
        s = ready_store()
        try:
            node = s.node(node_id)
        except UnknownNodeError:
            raise HTTPException(status_code=404, detail=f"unknown node id {node_id!r}")
        return canonical(
            {
                "id": node.id,
                "name": node.name,
                "created": day_text(node.created),
                "categories": list(node.categories),
                "meta": node.meta,
                "series": {
                    "start": day_text(node.series.start),
                    "values": node.series.values.tolist(),
                },
                "events": [_event_dict(ev) for ev in s.events_for(node.id)],
            }
        )

    @app.get("/api/nodes/{node_id}/ego")
    def ego_view(
        node_id: str,
        start: str | None = Query(default=None),
        end: str | None = Query(default=None),
        threshold: float = Query(default=DEFAULT_THRESHOLD),
        sort: str = Query(default=DEFAULT_SORT),
        r_min: float = Query(default=DEFAULT_RADIUS_BOUNDS[0]),
        r_max: float = Query(default=DEFAULT_RADIUS_BOUNDS[1]),
    ):
        s = ready_store()
        try:
            ego = s.node(node_id)
        except UnknownNodeError:
            raise HTTPException(status_code=404, detail=f"unknown node id {node_id!r}")
        if not 0.0 <= threshold <= 1.0:
            _bad_request("query parameter 'threshold' must be within [0, 1]")
        if sort not in SORT_CRITERIA:
            _bad_request(f"query parameter 'sort' must be one of {', '.join(SORT_CRITERIA)}")
        if not 0.0 < r_min < r_max:
            _bad_request("radius bounds must satisfy 0 < r_min < r_max")
        start_day = _parse_day_param(start, "start") if start is not None else ego.created
        end_day = _parse_day_param(end, "end") if end is not None else ego.series.end
        if start_day > end_day:
            _bad_request("the observation window must satisfy start <= end")
        window = ObservationWindow(start_day, end_day)
        return canonical(
            build_ego_response(
                s,
                node_id,
                window,
                threshold,
                sort,
                bounds=(r_min, r_max),
                max_alters=app.state.max_alters,
            )
        )

    return app
