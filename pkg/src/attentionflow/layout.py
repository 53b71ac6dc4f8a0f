"""Resolved geometry for the time-aligned ego network.

Converts an :class:`~attentionflow.influence.EgoNetwork` into tree rings,
timeline x-coordinates, node radii, edge widths and a vertical order, so a
renderer only draws. Everything is deterministic: identical inputs produce
identical output bytes after canonical serialization.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DateIndex,
    NodeRecord,
    ObservationWindow,
    day_text,
    window_sum,
    year_of,
    year_partition,
)
from .influence import EgoNetwork, relative_edge_widths

SORT_CRITERIA = ("force", "total", "in", "out", "category")

# Node radii as fractions of canvas height.
DEFAULT_RADIUS_BOUNDS = (0.015, 0.09)

# 1-D relaxation constants: centering pull, repulsion gain (scaled by the
# product of the two radii), softening added to the squared distance, the
# update step, and the minimum gap enforced by the final separation pass.
FORCE_ITERATIONS = 300
_CENTER_PULL = 0.06
_REPULSION = 0.6
_SOFTENING = 1e-3
_STEP = 1.0
_MIN_GAP = 2.0**-40


@dataclass(frozen=True)
class RingSpec:
    """One calendar year of a node's lifetime, as a concentric ring."""

    year: int
    outer_radius: float  # fraction of the node radius, (0, 1]
    color_index: int


@dataclass(frozen=True)
class TreeRings:
    """Ring stack for one node; degenerate when some year has no attention."""

    rings: tuple[RingSpec, ...]
    degenerate: bool


@dataclass(frozen=True, eq=False)
class NodeGeometry:
    node_id: str
    x: float  # timeline fraction; the ego sits at 1
    y: float
    radius: float
    rings: tuple[RingSpec, ...]


@dataclass(frozen=True)
class EdgeGeometry:
    source_id: str
    target_id: str
    width: float
    is_self_loop: bool


@dataclass(frozen=True, eq=False)
class ResolvedLayout:
    window: ObservationWindow
    threshold: float
    sort_criterion: str
    nodes: tuple[NodeGeometry, ...]
    edges: tuple[EdgeGeometry, ...]

    def to_dict(self) -> dict:
        return {
            "window": {"start": day_text(self.window.start), "end": day_text(self.window.end)},
            "threshold": self.threshold,
            "sort": self.sort_criterion,
            "nodes": [
                {
                    "id": n.node_id,
                    "x": n.x,
                    "y": n.y,
                    "radius": n.radius,
                    "rings": [
                        {
                            "year": r.year,
                            "outer_radius": r.outer_radius,
                            "color_index": r.color_index,
                        }
                        for r in n.rings
                    ],
                }
                for n in self.nodes
            ],
            "edges": [
                {
                    "source": e.source_id,
                    "target": e.target_id,
                    "width": e.width,
                    "is_self_loop": e.is_self_loop,
                }
                for e in self.edges
            ],
        }


def tree_rings(node: NodeRecord) -> TreeRings:
    """One ring per lifetime calendar year, ring areas proportional to
    yearly attention.

    Ring k's outer radius is sqrt(cumulative share up to year k), so the
    outermost radius is exactly 1. Zero-attention years collapse to
    zero-thickness rings and flag the stack degenerate; a node with no
    attention at all becomes a single full ring.
    """
    parts = year_partition(node.series)
    first_year = parts[0][0]
    total = 0.0
    cums = []
    for _, yearly in parts:
        total += yearly
        cums.append(total)
    if total == 0.0:
        return TreeRings((RingSpec(first_year, 1.0, 0),), True)
    rings = tuple(
        RingSpec(year, math.sqrt(cum / total), year - first_year)
        for (year, _), cum in zip(parts, cums)
    )
    degenerate = any(yearly == 0.0 for _, yearly in parts)
    return TreeRings(rings, degenerate)


def node_radius(
    ego_net: EgoNetwork, bounds: tuple[float, float] = DEFAULT_RADIUS_BOUNDS
) -> dict[str, float]:
    """Area-proportional radii from windowed attention, within bounds."""
    r_min, r_max = bounds
    if not r_min < r_max:
        raise ValueError("radius bounds must satisfy r_min < r_max")
    attention = {
        ego_net.ego.id: window_sum(ego_net.ego.series, ego_net.window),
    }
    for a in ego_net.alters:
        attention[a.node.id] = window_sum(a.node.series, ego_net.window)
    peak = max(attention.values())
    if peak == 0.0:
        return {node_id: r_min for node_id in attention}
    return {
        node_id: r_min + (r_max - r_min) * math.sqrt(attn / peak)
        for node_id, attn in attention.items()
    }


def x_position(t: DateIndex, window: ObservationWindow) -> float:
    """Linear map of a window day onto [0, 1]; a one-day window maps to 1."""
    if t not in window:
        raise ValueError(f"day {day_text(t)} outside the observation window")
    if window.start == window.end:
        return 1.0
    return (t - window.start) / (window.end - window.start)


def _stable_unit(seed: int, node_id: str) -> float:
    """Deterministic hash of (seed, id) mapped to [0, 1)."""
    digest = hashlib.blake2b(
        f"{seed}|{node_id}".encode("utf-8"), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big") / 2**64


def force_layout_1d(
    ego_net: EgoNetwork,
    x_positions: dict[str, float],
    radii: dict[str, float],
    seed: int = 0,
    iterations: int = FORCE_ITERATIONS,
    initial_y: dict[str, float] | None = None,
) -> dict[str, float]:
    """Deterministic 1-D relaxation of vertical positions.

    The ego is pinned at 0.5; every other node is pulled toward 0.5 and
    repelled pairwise with strength proportional to the product of radii
    and inversely to the softened squared distance. Initial positions come
    from a stable hash of (seed, id), so identical inputs give bit-identical
    output; ``initial_y`` overrides them for controlled experiments.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    ids = [ego_net.ego.id] + sorted(a.node.id for a in ego_net.alters)
    n = len(ids)
    x = np.array([x_positions[i] for i in ids], dtype=np.float64)
    r = np.array([radii[i] for i in ids], dtype=np.float64)
    if initial_y is None:
        y = np.array([_stable_unit(seed, i) for i in ids], dtype=np.float64)
    else:
        y = np.array([initial_y[i] for i in ids], dtype=np.float64)
    y[0] = 0.5

    for _ in range(iterations):
        total = np.zeros(n, dtype=np.float64)
        # Accumulate over j in index order; keeps the floating-point
        # operation sequence identical to a plain per-node loop.
        for j in range(n):
            dx = x - x[j]
            dy = y - y[j]
            f = _REPULSION * (r * r[j]) * dy / (dx * dx + dy * dy + _SOFTENING)
            f[j] = 0.0
            total = total + f
        y = y + _STEP * (_CENTER_PULL * (0.5 - y) + total)
        np.clip(y, 0.0, 1.0, out=y)
        y[0] = 0.5
    out = dict(zip(ids, y.tolist()))
    return separate_ties(out, ego_id=ids[0])


def separate_ties(positions: dict[str, float], ego_id: str) -> dict[str, float]:
    """Order-preserving pass guaranteeing pairwise-distinct y in [0, 1].

    Nodes clamped onto the same boundary (and exact interior collisions)
    are nudged apart by ``_MIN_GAP``; the ego wins ties. A no-op whenever
    positions are already separated by more than the gap.
    """
    order = sorted(positions, key=lambda nid: (positions[nid], nid != ego_id, nid))
    out = dict(positions)
    previous = None
    for nid in order:
        if previous is not None and out[nid] < previous + _MIN_GAP:
            out[nid] = previous + _MIN_GAP
        previous = out[nid]
    allowed = 1.0
    for nid in reversed(order):
        if out[nid] > allowed:
            out[nid] = allowed
        allowed = out[nid] - _MIN_GAP
    return out


def _slots(n: int) -> list[float]:
    return [(i + 0.5) / n for i in range(n)]


def _ranked(entries: list[tuple[str, float]]) -> list[str]:
    """Ids sorted by metric descending, ties broken by id ascending."""
    return [e for e, _ in sorted(entries, key=lambda kv: (-kv[1], kv[0]))]


def _incident_flux(ego_net: EgoNetwork) -> tuple[dict[str, float], dict[str, float]]:
    """Windowed flux into and out of every node, within the ego network.

    Sums are correctly rounded (fsum), so they do not depend on the order
    edges are visited in.
    """
    ego_id = ego_net.ego.id
    into_parts: dict[str, list[float]] = {ego_id: []}
    out_parts: dict[str, list[float]] = {ego_id: []}
    for a in ego_net.alters:
        into_parts[a.node.id] = []
        out_parts[a.node.id] = []
        if a.incoming is not None:  # alter -> ego
            into_parts[ego_id].append(a.incoming.flux)
            out_parts[a.node.id].append(a.incoming.flux)
        if a.outgoing is not None:  # ego -> alter
            into_parts[a.node.id].append(a.outgoing.flux)
            out_parts[ego_id].append(a.outgoing.flux)
    if ego_net.self_loop is not None:
        into_parts[ego_id].append(ego_net.self_loop.flux)
        out_parts[ego_id].append(ego_net.self_loop.flux)
    into = {nid: math.fsum(parts) for nid, parts in into_parts.items()}
    out_of = {nid: math.fsum(parts) for nid, parts in out_parts.items()}
    return into, out_of


def vertical_order(
    ego_net: EgoNetwork,
    criterion: str,
    bounds: tuple[float, float] = DEFAULT_RADIUS_BOUNDS,
    seed: int = 0,
    iterations: int = FORCE_ITERATIONS,
) -> dict[str, float]:
    """Vertical positions in [0, 1] under one of the five sort criteria.

    Value sorts place nodes on evenly spaced slots from the top (rank 0 is
    the smallest y). Under ``total`` and ``category`` the ego competes like
    any node; under ``in``/``out`` the ego's aggregate flux is not
    comparable to a single alter's, so the ego is anchored at 0.5 and the
    alters take the remaining slots in rank order. Ties break by node id.
    """
    if criterion not in SORT_CRITERIA:
        raise ValueError(f"unknown sort criterion {criterion!r}")
    ego_id = ego_net.ego.id
    n = 1 + len(ego_net.alters)

    if criterion == "force":
        radii = node_radius(ego_net, bounds)
        xs = {ego_id: 1.0}
        for a in ego_net.alters:
            xs[a.node.id] = x_position(a.influencing_time, ego_net.window)
        return force_layout_1d(ego_net, xs, radii, seed=seed, iterations=iterations)

    if criterion == "total":
        totals = [(ego_id, window_sum(ego_net.ego.series, ego_net.window))]
        totals += [
            (a.node.id, window_sum(a.node.series, ego_net.window))
            for a in ego_net.alters
        ]
        return dict(zip(_ranked(totals), _slots(n)))

    if criterion in ("in", "out"):
        into, out_of = _incident_flux(ego_net)
        flux = into if criterion == "in" else out_of
        ranked = _ranked(
            [(a.node.id, flux[a.node.id]) for a in ego_net.alters]
        )
        slots = [s for s in _slots(n) if s != 0.5]  # the ego owns the middle
        positions = {ego_id: 0.5}
        positions.update(zip(ranked, slots))
        return positions

    # category: alphabetical groups by first category, uncategorised last,
    # within a group by windowed attention descending.
    def group_key(node: NodeRecord) -> tuple:
        attn = window_sum(node.series, ego_net.window)
        if node.categories:
            return (0, node.categories[0], -attn, node.id)
        return (1, "", -attn, node.id)

    nodes = [ego_net.ego] + [a.node for a in ego_net.alters]
    ordered = sorted(nodes, key=group_key)
    return dict(zip((nd.id for nd in ordered), _slots(n)))


def resolve_layout(
    ego_net: EgoNetwork,
    criterion: str = "force",
    bounds: tuple[float, float] = DEFAULT_RADIUS_BOUNDS,
    seed: int = 0,
    iterations: int = FORCE_ITERATIONS,
) -> ResolvedLayout:
    """Compose rings, radii, x placement, vertical order and edge widths."""
    radii = node_radius(ego_net, bounds)
    ys = vertical_order(ego_net, criterion, bounds=bounds, seed=seed, iterations=iterations)
    widths = relative_edge_widths(ego_net)
    ego_id = ego_net.ego.id

    xs = {ego_id: 1.0}
    for a in ego_net.alters:
        xs[a.node.id] = x_position(a.influencing_time, ego_net.window)

    nodes_by_id = {ego_id: ego_net.ego}
    nodes_by_id.update((a.node.id, a.node) for a in ego_net.alters)
    order = [ego_id] + sorted(nid for nid in nodes_by_id if nid != ego_id)
    node_geoms = tuple(
        NodeGeometry(
            node_id=nid,
            x=xs[nid],
            y=ys[nid],
            radius=radii[nid],
            rings=tree_rings(nodes_by_id[nid]).rings,
        )
        for nid in order
    )
    edge_geoms = tuple(
        EdgeGeometry(src, tgt, widths[(src, tgt)], src == tgt)
        for src, tgt in sorted(widths)
    )
    return ResolvedLayout(ego_net.window, ego_net.threshold, criterion, node_geoms, edge_geoms)
