"""Synthetic dataset generator: a desk-scale stand-in for real corpora.

Nodes get log-normal base attention with Poisson-timed multiplicative
spikes; edges carry fluxes that are a random fraction of the source's
attention. Two motifs are always present so characteristic interactions
can be demonstrated and tested:

* resurrection -- an old, decaying node spikes within a week of a new
  node's creation, with a strong new->old edge (ids ``n00000``/``n00001``);
* twins -- two nodes sharing an almost identical series, linked both ways
  (ids ``n00002``/``n00003``).

Output is byte-identical for identical parameters.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import canonical_json, day, day_text

EPOCH = "2015-01-01"

RESURRECT_OLD = "n00000"
RESURRECT_NEW = "n00001"
TWIN_A = "n00002"
TWIN_B = "n00003"

_GENRES = ("pop", "rock", "jazz", "electronic", "folk", "hiphop", "classical", "country")
_ADJECTIVES = (
    "Golden", "Silent", "Electric", "Midnight", "Crimson", "Wandering",
    "Lucky", "Broken", "Neon", "Gentle", "Hollow", "Distant", "Velvet",
    "Burning", "Frozen", "Paper",
)
_NOUNS = (
    "River", "Echo", "Horizon", "Garden", "Mirror", "Satellite", "Harbor",
    "Tempest", "Lantern", "Meadow", "Signal", "Avenue", "Canyon", "Ember",
    "Tide", "Orchid",
)


def _node_name(rng, index: int) -> str:
    adj = _ADJECTIVES[rng.integers(len(_ADJECTIVES))]
    noun = _NOUNS[rng.integers(len(_NOUNS))]
    return f"{adj} {noun} {index:05d}"


def _base_series(rng, length: int, spike_rate: float) -> np.ndarray:
    level = rng.lognormal(mean=3.0, sigma=1.2)
    values = level * rng.lognormal(mean=0.0, sigma=0.35, size=length)
    t = np.arange(length, dtype=np.float64)
    for _ in range(int(rng.poisson(spike_rate * length / 365.0))):
        at = int(rng.integers(length))
        amp = rng.lognormal(mean=1.5, sigma=0.6)
        decay = rng.uniform(3.0, 21.0)
        tail = t >= at
        values[tail] += level * amp * np.exp(-(t[tail] - at) / decay)
    return values


def _windowed_mean(values: np.ndarray, lo: int, hi: int) -> float:
    seg = values[lo : hi + 1]
    return float(seg.mean()) if seg.size else 0.0


def generate_synthetic(
    out_dir,
    *,
    seed: int,
    n_nodes: int,
    n_edges: int,
    n_days: int,
    spike_rate: float = 8.0,
) -> dict:
    """Write nodes/edges/events files under ``out_dir``; returns paths + counts.

    Requires ``n_nodes >= 4`` (motifs), ``n_days >= 60`` and
    ``n_edges >= n_nodes + 3`` (spanning tree plus the four motif edges,
    which guarantees a weakly connected graph).
    """
    if n_nodes < 4:
        raise ValueError("n_nodes must be >= 4 (motif pairs are always included)")
    if n_days < 60:
        raise ValueError("n_days must be >= 60")
    if n_edges < n_nodes + 3:
        raise ValueError("n_edges must be >= n_nodes + 3 for connectivity and motifs")

    rng = np.random.default_rng(seed)
    day0 = day(EPOCH)
    last_offset = n_days - 1

    ids = [f"n{i:05d}" for i in range(n_nodes)]
    new_offset = n_days - max(8, min(n_days // 4, 365))
    offsets = np.empty(n_nodes, dtype=np.int64)
    offsets[0] = 0
    offsets[1] = new_offset
    offsets[2] = offsets[3] = max(1, n_days // 10)
    if n_nodes > 4:
        offsets[4:] = rng.integers(0, int(0.8 * last_offset) + 1, size=n_nodes - 4)

    values: list[np.ndarray] = [np.empty(0)] * n_nodes

    # Resurrection pair: the old node decays, then spikes within 7 days of
    # the new node's creation; the new node opens with a large burst.
    old_len = n_days
    level_old = rng.lognormal(mean=4.0, sigma=0.5)
    t_old = np.arange(old_len, dtype=np.float64)
    old_vals = level_old * np.exp(-3.0 * t_old / n_days) * rng.lognormal(0.0, 0.3, old_len)
    old_vals += 0.02 * level_old
    spike_at = int(offsets[1]) + int(rng.integers(1, 7))
    tail = t_old >= spike_at
    old_vals[tail] += 12.0 * level_old * np.exp(-(t_old[tail] - spike_at) / 10.0)
    values[0] = old_vals

    new_len = n_days - int(offsets[1])
    level_new = level_old * rng.uniform(2.0, 4.0)
    t_new = np.arange(new_len, dtype=np.float64)
    new_vals = level_new * 6.0 * np.exp(-t_new / 30.0) * rng.lognormal(0.0, 0.25, new_len)
    new_vals += 0.05 * level_new
    values[1] = new_vals

    # Twin pair: one shared base, small independent noise on top.
    twin_len = n_days - int(offsets[2])
    shared = _base_series(rng, twin_len, spike_rate)
    values[2] = shared * rng.lognormal(0.0, 0.05, twin_len)
    values[3] = shared * rng.lognormal(0.0, 0.05, twin_len)

    for i in range(4, n_nodes):
        values[i] = _base_series(rng, n_days - int(offsets[i]), spike_rate)

    for i in range(n_nodes):
        values[i] = np.maximum(np.round(values[i], 3), 0.0)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    nodes_path = out / "nodes.jsonl"
    edges_path = out / "edges.jsonl"
    events_path = out / "events.jsonl"

    motif_names = {
        0: "Resurgence Anthem",
        1: "Comeback Single",
        2: "Twin Flame A",
        3: "Twin Flame B",
    }
    with open(nodes_path, "w", encoding="utf-8") as fh:
        for i in range(n_nodes):
            n_categories = 1 + int(rng.integers(0, 2))
            categories = sorted(
                {_GENRES[int(g)] for g in rng.integers(0, len(_GENRES), size=n_categories)}
            )
            record = {
                "id": ids[i],
                "name": motif_names.get(i, _node_name(rng, i)),
                "created": day_text(day0 + int(offsets[i])),
                "categories": categories,
                "values": values[i].tolist(),
                "meta": {"artist": f"Artist {int(rng.integers(0, max(2, n_nodes // 8))):04d}"},
            }
            fh.write(canonical_json(record) + "\n")

    # Edges: four motif edges, a random spanning tree, then random fill.
    series_prob = 0.25 if n_edges <= 50_000 else 0.02
    edge_pairs: set[tuple[int, int]] = set()
    edge_lines: list[str] = []

    def emit(src: int, tgt: int, fraction: float, as_series: bool) -> None:
        lo = int(max(offsets[src], offsets[tgt]))
        hi = last_offset
        src_lo = lo - int(offsets[src])
        if as_series:
            seg = values[src][src_lo : src_lo + (hi - lo + 1)]
            flux = np.maximum(np.round(fraction * seg, 3), 0.0)
            record = {
                "source": ids[src],
                "target": ids[tgt],
                "start": day_text(day0 + lo),
                "values": flux.tolist(),
            }
        else:
            mean = _windowed_mean(values[src], src_lo, len(values[src]) - 1)
            record = {
                "source": ids[src],
                "target": ids[tgt],
                "weight": round(fraction * mean, 3),
            }
        edge_pairs.add((src, tgt))
        edge_lines.append(canonical_json(record))

    emit(1, 0, 0.35, True)  # new -> old, carries the resurrection
    emit(0, 0, 0.05, False)  # ego self-loop on the old node
    emit(2, 3, 0.08, False)
    emit(3, 2, 0.08, False)

    order = rng.permutation(n_nodes)
    for i in range(1, n_nodes):
        a = int(order[i])
        b = int(order[int(rng.integers(0, i))])
        src, tgt = (a, b) if rng.random() < 0.5 else (b, a)
        if (src, tgt) in edge_pairs:
            continue
        emit(src, tgt, float(rng.uniform(0.01, 0.15)), rng.random() < series_prob)

    attempts = 0
    max_attempts = 50 * n_edges
    while len(edge_pairs) < n_edges and attempts < max_attempts:
        attempts += 1
        src = int(rng.integers(n_nodes))
        tgt = int(rng.integers(n_nodes))
        if (src, tgt) in edge_pairs:
            continue
        if src == tgt and rng.random() < 0.9:
            continue  # keep self-loops rare
        emit(src, tgt, float(rng.uniform(0.01, 0.15)), rng.random() < series_prob)
    if len(edge_pairs) < n_edges:
        raise ValueError("could not place the requested number of distinct edges")

    with open(edges_path, "w", encoding="utf-8") as fh:
        for line in edge_lines:
            fh.write(line + "\n")

    # Events: award-style markers at each chosen node's biggest day, plus
    # two global markers.
    event_lines = []
    n_award_nodes = min(12, max(1, n_nodes // 5))
    for i in range(n_award_nodes):
        at = int(offsets[i]) + int(np.argmax(values[i]))
        when = day0 + at
        event_lines.append(
            canonical_json(
                {
                    "node_id": ids[i],
                    "date": day_text(when),
                    "label": f"Award Night {day_text(when)[:4]}",
                    "url": f"https://events.example/{ids[i]}",
                }
            )
        )
    for frac in (0.3, 0.7):
        when = day0 + int(frac * last_offset)
        event_lines.append(
            canonical_json(
                {
                    "node_id": "",
                    "date": day_text(when),
                    "label": f"Industry Gala {day_text(when)[:4]}",
                }
            )
        )
    with open(events_path, "w", encoding="utf-8") as fh:
        for line in event_lines:
            fh.write(line + "\n")

    # Motif self-check: the old node must spike within 7 days of the new
    # node's creation, relative to its level just before.
    before = values[0][max(0, spike_at - 30) : spike_at]
    window = values[0][int(offsets[1]) : int(offsets[1]) + 8]
    if not (window.max() > 3.0 * max(before.mean(), 1e-9)):
        raise AssertionError("resurrection motif failed its self-check")

    return {
        "nodes": nodes_path,
        "edges": edges_path,
        "events": events_path,
        "n_nodes": n_nodes,
        "n_edges": len(edge_pairs),
        "n_days": n_days,
    }
