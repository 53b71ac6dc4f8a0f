"""Shared fixture builders: handcrafted stores shaped like the demo figures
plus seeded random stores for property and oracle tests."""

from __future__ import annotations

import json
import random

import numpy as np
import pytest

from attentionflow import (
    AttentionSeries,
    DatasetStore,
    DynamicEdge,
    EventRecord,
    NodeRecord,
    ObservationWindow,
    day,
)

GENRES = ("pop", "rock", "jazz", "electronic", "folk")


def make_series(start_text: str, values) -> AttentionSeries:
    return AttentionSeries(day(start_text), np.asarray(values, dtype=np.float64))


def make_node(nid, created_text, values, name=None, categories=(), meta=None) -> NodeRecord:
    created = day(created_text)
    return NodeRecord(
        id=nid,
        name=name or f"Node {nid}",
        created=created,
        categories=tuple(categories),
        series=AttentionSeries(created, np.asarray(values, dtype=np.float64)),
        meta=meta or {},
    )


def make_const_node(nid, created_text, value, length, **kwargs) -> NodeRecord:
    created = day(created_text)
    return NodeRecord(
        id=nid,
        name=kwargs.get("name") or f"Node {nid}",
        created=created,
        categories=tuple(kwargs.get("categories", ())),
        series=AttentionSeries.constant(created, value, length),
        meta=kwargs.get("meta") or {},
    )


def make_edge(src, tgt, start_text, values) -> DynamicEdge:
    return DynamicEdge(src, tgt, make_series(start_text, values))


def make_const_edge(src, tgt, start_text, value, length) -> DynamicEdge:
    return DynamicEdge(src, tgt, AttentionSeries.constant(day(start_text), value, length))


def build_store(nodes, edges, events=()) -> DatasetStore:
    return DatasetStore.from_records(nodes, edges, events)


def window(start_text: str, end_text: str) -> ObservationWindow:
    return ObservationWindow(day(start_text), day(end_text))


def days_between(start_text: str, end_text: str) -> int:
    """Inclusive day count."""
    return day(end_text) - day(start_text) + 1


# -- seeded random stores ----------------------------------------------------


def random_store(seed: int, n_nodes: int = 12, span_days: int = 240) -> DatasetStore:
    """Small random store with messy shapes: zero runs, self-loops, edges
    whose weight support pokes outside node lifetimes, uncategorised nodes."""
    rnd = random.Random(seed)
    base = day("2014-01-01")
    nodes = []
    for i in range(n_nodes):
        offset = rnd.randrange(0, max(1, int(span_days * 0.9)))
        length = rnd.randrange(1, span_days - offset + 1)
        if rnd.random() < 0.06:
            values = [0.0] * length
        else:
            values = [
                0.0 if rnd.random() < 0.12 else round(rnd.expovariate(0.02), 3)
                for _ in range(length)
            ]
        n_cats = rnd.choice((0, 1, 1, 2))
        nodes.append(
            NodeRecord(
                id=f"r{i:03d}",
                name=f"Random {i:03d}",
                created=base + offset,
                categories=tuple(sorted(rnd.sample(GENRES, n_cats))),
                series=AttentionSeries(base + offset, np.asarray(values)),
                meta={},
            )
        )

    by_id = {n.id: n for n in nodes}
    edges = []
    seen = set()
    for src in nodes:
        for tgt in nodes:
            if src.id == tgt.id and rnd.random() < 0.9:
                continue
            if rnd.random() > (0.18 if src.id != tgt.id else 0.5):
                continue
            if (src.id, tgt.id) in seen:
                continue
            seen.add((src.id, tgt.id))
            start = src.created + rnd.randrange(-10, max(1, len(src.series)))
            length = rnd.randrange(1, span_days)
            if rnd.random() < 0.4:
                edges.append(
                    DynamicEdge(
                        src.id,
                        tgt.id,
                        AttentionSeries.constant(start, round(rnd.uniform(0, 30), 3), length),
                    )
                )
            else:
                values = [round(rnd.expovariate(0.1), 3) for _ in range(length)]
                edges.append(
                    DynamicEdge(src.id, tgt.id, AttentionSeries(start, np.asarray(values)))
                )
    return DatasetStore.from_records(nodes, edges)


def random_window(rnd: random.Random, span_days: int = 240) -> ObservationWindow:
    base = day("2014-01-01")
    a = rnd.randrange(-20, span_days + 20)
    b = rnd.randrange(-20, span_days + 20)
    return ObservationWindow(base + min(a, b), base + max(a, b))


def pick_ego(rnd: random.Random, store: DatasetStore) -> str:
    """A node that has at least one incident edge, if any exists."""
    candidates = sorted(set(store.out_edges) | set(store.in_edges))
    if not candidates:
        return sorted(store.nodes)[0]
    return rnd.choice(candidates)


# -- figure-shaped fixtures ----------------------------------------------------


def _shaped(length: int, base: float, bumps) -> np.ndarray:
    """Deterministic series: constant base plus exponential-decay bumps
    given as (offset, amplitude, decay_days)."""
    t = np.arange(length, dtype=np.float64)
    values = np.full(length, base)
    for at, amp, decay in bumps:
        tail = t >= at
        values[tail] += amp * np.exp(-(t[tail] - at) / decay)
    return np.round(values, 3)


@pytest.fixture(scope="session")
def fig1_store() -> DatasetStore:
    """An ego shaped like a 2010 hit that spikes twice: once at an awards
    night in early 2012 and once when a late-2015 release drags it back up."""
    ego_created = "2010-11-30"
    end = "2017-12-31"
    ego_len = days_between(ego_created, end)
    grammy_at = day("2012-02-13") - day(ego_created)
    comeback_at = day("2015-10-23") - day(ego_created)
    ego_values = _shaped(
        ego_len,
        30.0,
        [(0, 150.0, 60.0), (grammy_at, 400.0, 12.0), (comeback_at, 250.0, 14.0)],
    )

    hello_created = "2015-10-23"
    hello_len = days_between(hello_created, end)
    hello_values = _shaped(hello_len, 100.0, [(0, 5000.0, 45.0)])

    sly_created = "2011-01-24"
    sly_len = days_between(sly_created, end)
    sly_grammy = day("2012-02-13") - day(sly_created)
    sly_comeback = day("2015-10-23") - day(sly_created)
    sly_values = _shaped(
        sly_len, 25.0, [(0, 120.0, 55.0), (sly_grammy, 310.0, 12.0), (sly_comeback, 200.0, 14.0)]
    )

    ego = make_node(
        "deep", ego_created, ego_values,
        name="Rolling Thunder", categories=("pop",), meta={"artist": "A. Star"},
    )
    hello = make_node(
        "hello", hello_created, hello_values,
        name="Hello Again", categories=("pop",), meta={"artist": "A. Star"},
    )
    sly = make_node(
        "slyou", sly_created, sly_values,
        name="Someone Similar", categories=("pop", "folk"), meta={"artist": "A. Star"},
    )

    edges = [
        DynamicEdge("hello", "deep", make_series(hello_created, np.round(0.25 * hello_values, 3))),
        make_const_edge("deep", "hello", hello_created, 3.0, hello_len),
        DynamicEdge("slyou", "deep", make_series(sly_created, np.round(0.08 * sly_values, 3))),
        make_const_edge("deep", "slyou", sly_created, 2.0, sly_len),
        make_const_edge("deep", "deep", ego_created, 2.0, ego_len),
    ]
    events = [
        EventRecord("deep", day("2012-02-12"), "54th Annual Grammy Awards",
                    "https://events.example/grammy-2012"),
        EventRecord("hello", day("2015-10-23"), "Single released", None),
        EventRecord("", day("2016-01-01"), "Streaming milestone", None),
    ]
    return build_store([ego, hello, sly], edges, events)


FIG2_WINDOW_A = ("2009-12-01", "2015-06-30")
FIG2_WINDOW_B = ("2009-12-01", "2017-07-31")


@pytest.fixture(scope="session")
def fig2_store() -> DatasetStore:
    """Artist network: five alters above 1% influence in the early window;
    two fade and two newcomers replace them when the window extends."""
    end = "2017-07-31"
    ego_len = days_between("2009-12-01", end)
    ego = make_const_node("bieber", "2009-12-01", 1000.0, ego_len,
                          name="Focus Artist", categories=("pop",))

    early_len = days_between("2010-01-01", end)
    fading_len = days_between("2010-01-01", "2015-06-30")
    late_len = days_between("2015-08-01", end)

    alters = [
        # fades: enough flux for window A, too little once the window grows
        make_const_node("mind", "2010-01-01", 200.0, early_len, name="Mind Set", categories=("pop",)),
        make_const_node("will", "2010-01-01", 300.0, early_len, name="Will Power", categories=("hiphop",)),
        # survivors
        make_const_node("tswift", "2010-01-01", 1500.0, early_len, name="Tailor Quick", categories=("pop",)),
        make_const_node("usher", "2010-01-01", 800.0, early_len, name="Usher In", categories=("rnb",)),
        make_const_node("chris", "2010-01-01", 600.0, early_len, name="Chrys Brown", categories=("rnb",)),
        # newcomers, created after window A closes
        make_const_node("ariana", "2015-08-01", 900.0, late_len, name="Aria Grand", categories=("pop",)),
        make_const_node("fifth", "2015-08-01", 700.0, late_len, name="Fifth Element", categories=("pop",)),
    ]
    edges = [
        make_const_edge("mind", "bieber", "2010-01-01", 12.0, fading_len),
        make_const_edge("will", "bieber", "2010-01-01", 12.0, fading_len),
        make_const_edge("tswift", "bieber", "2010-01-01", 50.0, early_len),
        make_const_edge("usher", "bieber", "2010-01-01", 45.0, early_len),
        make_const_edge("chris", "bieber", "2010-01-01", 40.0, early_len),
        make_const_edge("bieber", "tswift", "2010-01-01", 25.0, early_len),
        make_const_edge("ariana", "bieber", "2015-08-01", 80.0, late_len),
        make_const_edge("fifth", "bieber", "2015-08-01", 75.0, late_len),
        make_const_edge("bieber", "bieber", "2009-12-01", 30.0, ego_len),
    ]
    return build_store([ego] + alters, edges)


@pytest.fixture(scope="session")
def search_store() -> DatasetStore:
    nodes = [
        make_const_node("v1", "2015-01-01", 100.0, 400, name="Adele – Hello"),
        make_const_node("v2", "2015-01-01", 900.0, 400, name="Adele – Someone Like You"),
        make_const_node("v3", "2015-01-01", 50.0, 400, name="Hello World Lecture"),
        make_const_node("v4", "2015-01-01", 900.0, 400, name="Quiet Storm"),
    ]
    return build_store(nodes, [make_const_edge("v1", "v2", "2015-01-01", 1.0, 400)])


# -- file helpers ---------------------------------------------------------------


def write_jsonl(path, records) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record) + "\n")


def tiny_dataset_files(tmp_path):
    """Three-node dataset on disk, returning the three file paths."""
    nodes = [
        {"id": "a", "name": "Alpha Song", "created": "2020-01-01",
         "categories": ["pop"], "values": [1, 2, 3, 4, 5], "meta": {"artist": "X"}},
        {"id": "b", "name": "Beta Song", "created": "2020-01-02",
         "categories": [], "values": [10, 10, 10, 10]},
        {"id": "c", "name": "Gamma Clip", "created": "2020-01-01",
         "categories": ["rock", "pop"], "values": [0, 0, 7]},
    ]
    edges = [
        {"source": "a", "target": "b", "weight": 2.5},
        {"source": "b", "target": "a", "start": "2020-01-02", "values": [1, 1, 1]},
        {"source": "c", "target": "a", "weight": 0.5},
        {"source": "a", "target": "a", "weight": 0.25},
    ]
    events = [
        {"node_id": "a", "date": "2020-01-03", "label": "Premiere",
         "url": "https://events.example/premiere"},
        {"node_id": "", "date": "2020-01-02", "label": "Gala"},
    ]
    np_, ep, vp = tmp_path / "nodes.jsonl", tmp_path / "edges.jsonl", tmp_path / "events.jsonl"
    write_jsonl(np_, nodes)
    write_jsonl(ep, edges)
    write_jsonl(vp, events)
    return np_, ep, vp
