"""Dataset ingestion, the indexed in-memory store, search and snapshots.

Input files are line-delimited JSON, one record per line:

* nodes:  ``{"id", "name", "created": "YYYY-MM-DD", "categories": [...],
  "values": [...], "meta": {...}}`` -- values start at ``created``.
* edges:  ``{"source", "target", "start": "YYYY-MM-DD", "values": [...]}``
  or ``{"source", "target", "weight": number}``. A scalar weight expands to
  a flat series over the overlap of the endpoint lifetimes (stored as a
  stride-0 view, so large constant-weight edge sets stay cheap).
* events: ``{"node_id", "date", "label", "url"?}``; empty node_id = global.

A snapshot is a directory holding the three files in normalized form plus
``meta.json``; loading one goes through the same validating parser.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import (
    AttentionSeries,
    DynamicEdge,
    EventRecord,
    NodeRecord,
    ObservationWindow,
    canonical_json,
    day,
    day_text,
)
from .influence import UnknownNodeError


class DatasetError(ValueError):
    """Base class for ingest failures."""


class ParseError(DatasetError):
    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class IntegrityError(DatasetError):
    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class DuplicateIdError(DatasetError):
    def __init__(self, path, line_no: int, node_id: str):
        super().__init__(f"{path}:{line_no}: duplicate node id {node_id!r}")
        self.node_id = node_id


@dataclass(eq=False)
class SearchHit:
    id: str
    name: str
    total_attention: float
    rank_score: float


class DatasetStore:
    """Immutable-after-seal store serving unlimited concurrent readers."""

    def __init__(self) -> None:
        self.nodes: dict[str, NodeRecord] = {}
        self.out_edges: dict[str, list[DynamicEdge]] = {}
        self.in_edges: dict[str, list[DynamicEdge]] = {}
        self.events: dict[str, list[EventRecord]] = {}
        self.name_index: dict[str, list[str]] = {}
        self.snapshot_id: str = "in-memory"
        self._totals: dict[str, float] = {}
        self._n_edges = 0

    # -- construction ----------------------------------------------------

    @classmethod
    def from_records(cls, nodes, edges, events=(), snapshot_id=None) -> DatasetStore:
        """Build and seal a store from already-validated domain records."""
        store = cls()
        for node in nodes:
            if node.id in store.nodes:
                raise DatasetError(f"duplicate node id {node.id!r}")
            store.nodes[node.id] = node
        seen_pairs = set()
        for edge in edges:
            for endpoint in (edge.source, edge.target):
                if endpoint not in store.nodes:
                    raise DatasetError(f"edge references unknown node {endpoint!r}")
            if (edge.source, edge.target) in seen_pairs:
                raise DatasetError(
                    f"duplicate edge {edge.source!r} -> {edge.target!r}"
                )
            seen_pairs.add((edge.source, edge.target))
            store.out_edges.setdefault(edge.source, []).append(edge)
            store.in_edges.setdefault(edge.target, []).append(edge)
            store._n_edges += 1
        for event in events:
            if event.node_id and event.node_id not in store.nodes:
                raise DatasetError(f"event references unknown node {event.node_id!r}")
            store.events.setdefault(event.node_id, []).append(event)
        store._seal(snapshot_id)
        return store

    def _seal(self, snapshot_id=None) -> None:
        if snapshot_id is not None:
            self.snapshot_id = snapshot_id
        for edge_list in self.out_edges.values():
            edge_list.sort(key=lambda e: e.target)
        for edge_list in self.in_edges.values():
            edge_list.sort(key=lambda e: e.source)
        for event_list in self.events.values():
            event_list.sort(key=lambda ev: (ev.date, ev.label))
        for node in self.nodes.values():
            self._totals[node.id] = math.fsum(node.series.values.tolist())
            self.name_index.setdefault(node.name.casefold(), []).append(node.id)
        for ids in self.name_index.values():
            ids.sort()

    # -- access ----------------------------------------------------------

    def node(self, node_id: str) -> NodeRecord:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNodeError(f"unknown node id {node_id!r}") from None

    def total_attention(self, node_id: str) -> float:
        return self._totals[node_id]

    def events_for(self, node_id: str, window: ObservationWindow | None = None):
        """The node's events plus global ones, date ordered, window filtered."""
        merged = list(self.events.get(node_id, ())) + list(self.events.get("", ()))
        if window is not None:
            merged = [ev for ev in merged if ev.date in window]
        merged.sort(key=lambda ev: (ev.date, ev.label))
        return merged

    def iter_edges(self):
        for edge_list in self.out_edges.values():
            yield from edge_list

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return self._n_edges

    @property
    def n_events(self) -> int:
        return sum(len(evs) for evs in self.events.values())

    def span(self) -> ObservationWindow:
        """Window covering every node's support."""
        first = min(n.series.start for n in self.nodes.values())
        last = max(n.series.end for n in self.nodes.values())
        return ObservationWindow(first, last)

    def fingerprint(self) -> str:
        """Content hash over the canonical record stream (order independent)."""
        h = hashlib.sha256()
        for node_id in sorted(self.nodes):
            h.update(_node_line(self.nodes[node_id]).encode())
        for edge in sorted(self.iter_edges(), key=lambda e: (e.source, e.target)):
            h.update(_edge_line(edge).encode())
        for node_id in sorted(self.events):
            for ev in self.events[node_id]:
                h.update(_event_line(ev).encode())
        return h.hexdigest()


# -- search ---------------------------------------------------------------


def search(store: DatasetStore, query: str, limit: int = 20) -> list[SearchHit]:
    """Case-insensitive substring match on names, best-known-first.

    Rank score is total lifetime attention; ties break by id. An empty
    query matches everything.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    needle = query.casefold()
    matches = [
        node_id
        for name, ids in store.name_index.items()
        if needle in name
        for node_id in ids
    ]
    matches.sort(key=lambda nid: (-store.total_attention(nid), nid))
    return [
        SearchHit(
            id=nid,
            name=store.nodes[nid].name,
            total_attention=store.total_attention(nid),
            rank_score=store.total_attention(nid),
        )
        for nid in matches[:limit]
    ]


# -- parsing ---------------------------------------------------------------


def _iter_json_lines(path):
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(path, line_no, f"invalid JSON ({exc.msg})") from None
            if not isinstance(record, dict):
                raise ParseError(path, line_no, "record must be a JSON object")
            yield line_no, record


def _need(record, field, kind, path, line_no):
    if field not in record:
        raise ParseError(path, line_no, f"missing field {field!r}")
    value = record[field]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ParseError(path, line_no, f"field {field!r} must be a number")
        return float(value)
    if not isinstance(value, kind):
        raise ParseError(path, line_no, f"field {field!r} has the wrong type")
    return value


def _parse_day(record, field, path, line_no):
    text = _need(record, field, str, path, line_no)
    try:
        return day(text)
    except ValueError:
        raise ParseError(path, line_no, f"field {field!r} is not a YYYY-MM-DD date") from None


def _parse_node(record, path, line_no) -> NodeRecord:
    node_id = _need(record, "id", str, path, line_no)
    name = _need(record, "name", str, path, line_no)
    created = _parse_day(record, "created", path, line_no)
    values = _need(record, "values", list, path, line_no)
    categories = record.get("categories", [])
    meta = record.get("meta", {})
    if not isinstance(categories, list) or not all(isinstance(c, str) for c in categories):
        raise ParseError(path, line_no, "field 'categories' must be a list of strings")
    if not isinstance(meta, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in meta.items()
    ):
        raise ParseError(path, line_no, "field 'meta' must map strings to strings")
    try:
        series = AttentionSeries(created, np.asarray(values, dtype=np.float64))
    except (ValueError, TypeError) as exc:
        raise ParseError(path, line_no, f"field 'values': {exc}") from None
    return NodeRecord(node_id, name, created, tuple(categories), series, meta)


def ingest(nodes_path, edges_path, events_path=None) -> DatasetStore:
    """Parse, validate and index a dataset; idempotent for identical files.

    Raises :class:`ParseError` for malformed records (with line numbers),
    :class:`DuplicateIdError` for repeated node ids and
    :class:`IntegrityError` when an edge or event references a missing node.
    """
    store = DatasetStore()
    digest = hashlib.sha256()
    for p in (nodes_path, edges_path, events_path):
        if p is not None:
            with open(p, "rb") as fh:
                for chunk in iter(lambda: fh.read(1 << 20), b""):
                    digest.update(chunk)

    for line_no, record in _iter_json_lines(nodes_path):
        node = _parse_node(record, nodes_path, line_no)
        if node.id in store.nodes:
            raise DuplicateIdError(nodes_path, line_no, node.id)
        store.nodes[node.id] = node

    shared_ids = {node_id: node_id for node_id in store.nodes}
    seen_pairs = set()
    for line_no, record in _iter_json_lines(edges_path):
        source = _need(record, "source", str, edges_path, line_no)
        target = _need(record, "target", str, edges_path, line_no)
        for endpoint in (source, target):
            if endpoint not in store.nodes:
                raise IntegrityError(
                    edges_path, line_no, f"edge references unknown node {endpoint!r}"
                )
        source, target = shared_ids[source], shared_ids[target]
        if (source, target) in seen_pairs:
            raise IntegrityError(
                edges_path, line_no, f"duplicate edge {source!r} -> {target!r}"
            )
        seen_pairs.add((source, target))
        if "weight" in record:
            weight = _need(record, "weight", float, edges_path, line_no)
            if weight < 0:
                raise ParseError(edges_path, line_no, "field 'weight' must be >= 0")
            src, tgt = store.nodes[source].series, store.nodes[target].series
            lo = max(src.start, tgt.start)
            hi = min(src.end, tgt.end)
            if lo > hi:
                raise IntegrityError(
                    edges_path,
                    line_no,
                    f"edge {source!r} -> {target!r}: endpoint lifetimes do not overlap",
                )
            weights = AttentionSeries.constant(lo, weight, hi - lo + 1)
        else:
            start = _parse_day(record, "start", edges_path, line_no)
            values = _need(record, "values", list, edges_path, line_no)
            try:
                weights = AttentionSeries(start, np.asarray(values, dtype=np.float64))
            except (ValueError, TypeError) as exc:
                raise ParseError(edges_path, line_no, f"field 'values': {exc}") from None
        edge = DynamicEdge(source, target, weights)
        store.out_edges.setdefault(source, []).append(edge)
        store.in_edges.setdefault(target, []).append(edge)
        store._n_edges += 1

    if events_path is not None and os.path.exists(events_path):
        for line_no, record in _iter_json_lines(events_path):
            node_id = _need(record, "node_id", str, events_path, line_no)
            if node_id and node_id not in store.nodes:
                raise IntegrityError(
                    events_path, line_no, f"event references unknown node {node_id!r}"
                )
            date_ = _parse_day(record, "date", events_path, line_no)
            label = _need(record, "label", str, events_path, line_no)
            if not label:
                raise ParseError(events_path, line_no, "field 'label' must be non-empty")
            url = record.get("url")
            if url is not None and not isinstance(url, str):
                raise ParseError(events_path, line_no, "field 'url' must be a string")
            node_id = shared_ids.get(node_id, node_id)
            store.events.setdefault(node_id, []).append(
                EventRecord(node_id, date_, label, url)
            )

    store._seal(digest.hexdigest())
    return store


# -- export / snapshots -----------------------------------------------------


def _node_line(node: NodeRecord) -> str:
    return canonical_json(
        {
            "id": node.id,
            "name": node.name,
            "created": day_text(node.created),
            "categories": list(node.categories),
            "values": node.series.values.tolist(),
            "meta": node.meta,
        }
    )


def _edge_line(edge: DynamicEdge) -> str:
    if edge.weights.is_constant:
        return canonical_json(
            {
                "source": edge.source,
                "target": edge.target,
                "weight": float(edge.weights.values[0]),
            }
        )
    return canonical_json(
        {
            "source": edge.source,
            "target": edge.target,
            "start": day_text(edge.weights.start),
            "values": edge.weights.values.tolist(),
        }
    )


def _event_line(event: EventRecord) -> str:
    record = {"node_id": event.node_id, "date": day_text(event.date), "label": event.label}
    if event.url is not None:
        record["url"] = event.url
    return canonical_json(record)


def export_dataset(store: DatasetStore, out_dir) -> dict[str, Path]:
    """Write the store back out in ingestible normalized form.

    Scalar-origin edges are written back as scalars, so a round trip through
    :func:`ingest` reproduces the store exactly.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "nodes": out / "nodes.jsonl",
        "edges": out / "edges.jsonl",
        "events": out / "events.jsonl",
        "meta": out / "meta.json",
    }
    with open(paths["nodes"], "w", encoding="utf-8") as fh:
        for node_id in sorted(store.nodes):
            fh.write(_node_line(store.nodes[node_id]) + "\n")
    with open(paths["edges"], "w", encoding="utf-8") as fh:
        for edge in sorted(store.iter_edges(), key=lambda e: (e.source, e.target)):
            fh.write(_edge_line(edge) + "\n")
    with open(paths["events"], "w", encoding="utf-8") as fh:
        for node_id in sorted(store.events):
            for event in store.events[node_id]:
                fh.write(_event_line(event) + "\n")
    with open(paths["meta"], "w", encoding="utf-8") as fh:
        fh.write(
            canonical_json(
                {
                    "nodes": store.n_nodes,
                    "edges": store.n_edges,
                    "events": store.n_events,
                    "snapshot_id": store.snapshot_id,
                }
            )
            + "\n"
        )
    return paths


def save_snapshot(store: DatasetStore, snapshot_dir) -> Path:
    export_dataset(store, snapshot_dir)
    return Path(snapshot_dir)


def load_snapshot(snapshot_dir) -> DatasetStore:
    root = Path(snapshot_dir)
    events = root / "events.jsonl"
    return ingest(
        root / "nodes.jsonl",
        root / "edges.jsonl",
        events if events.exists() else None,
    )
