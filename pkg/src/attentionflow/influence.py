"""Influence quantities and ego-network extraction.

An alter becomes part of the ego's view once the cumulative flux on some
edge between them, taken from the window start and divided by the ego's
windowed attention, reaches the threshold. The day that first happens
(never earlier than the alter's creation) is its influencing time and fixes
its place on the timeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    AttentionSeries,
    DateIndex,
    DynamicEdge,
    NodeRecord,
    ObservationWindow,
    align_daily,
    day_text,
    window_sum,
)


class UnknownNodeError(LookupError):
    """Raised when a query names a node id that is not in the store."""


@dataclass(frozen=True, eq=False)
class EdgeInfluence:
    """One directed edge summed over the window.

    ``normalized`` is the flux as a fraction of the ego's windowed
    attention, clamped to 1; it is 0 whenever the flux is 0 or the ego has
    no attention in the window.
    """

    edge: DynamicEdge
    flux: float
    normalized: float


@dataclass(frozen=True, eq=False)
class AlterEntry:
    """A visible direct neighbour with its edges and influencing time."""

    node: NodeRecord
    incoming: EdgeInfluence | None  # alter -> ego
    outgoing: EdgeInfluence | None  # ego -> alter
    influencing_time: DateIndex


@dataclass(frozen=True, eq=False)
class EgoNetwork:
    """Filtered radius-1 view around the ego for one window and threshold."""

    ego: NodeRecord
    window: ObservationWindow
    threshold: float
    alters: tuple[AlterEntry, ...]
    self_loop: EdgeInfluence | None

    @property
    def ego_attention(self) -> float:
        return window_sum(self.ego.series, self.window)

    def to_dict(self) -> dict:
        def edge_dict(inf: EdgeInfluence | None):
            if inf is None:
                return None
            return {
                "source": inf.edge.source,
                "target": inf.edge.target,
                "flux": inf.flux,
                "normalized": inf.normalized,
            }

        return {
            "ego": self.ego.id,
            "window": {"start": day_text(self.window.start), "end": day_text(self.window.end)},
            "threshold": self.threshold,
            "alters": [
                {
                    "id": a.node.id,
                    "influencing_time": day_text(a.influencing_time),
                    "incoming": edge_dict(a.incoming),
                    "outgoing": edge_dict(a.outgoing),
                }
                for a in self.alters
            ],
            "self_loop": edge_dict(self.self_loop),
        }


def edge_flux(edge: DynamicEdge, window: ObservationWindow) -> float:
    """Attention carried by the edge within the window."""
    return window_sum(edge.weights, window)


def normalized_influence(
    edge: DynamicEdge, ego: NodeRecord, window: ObservationWindow
) -> float:
    """Edge flux as a fraction of the ego's windowed attention, in [0, 1]."""
    if ego.id != edge.source and ego.id != edge.target:
        raise ValueError(f"node {ego.id!r} is not an endpoint of the edge")
    flux = edge_flux(edge, window)
    attention = window_sum(ego.series, window)
    if flux == 0.0 or attention == 0.0:
        return 0.0
    return min(1.0, flux / attention)


def _first_crossing(
    edge: DynamicEdge,
    window: ObservationWindow,
    ego_attention: float,
    threshold: float,
) -> DateIndex | None:
    """Earliest window day where cumulative flux / ego attention >= threshold."""
    if threshold == 0.0:
        # Cumulative influence is >= 0 from the first day, even when the
        # ego has no attention (normalized influence is defined as 0 then).
        return window.start
    if ego_attention == 0.0:
        return None
    if edge.weights.end < window.start or edge.weights.start > window.end:
        return None  # no flux inside the window, threshold is positive
    cum = np.cumsum(align_daily(edge.weights, window))
    hits = np.nonzero(cum / ego_attention >= threshold)[0]
    if hits.size == 0:
        return None
    return window.start + int(hits[0])


def influencing_time(
    alter_edges,
    ego: NodeRecord,
    alter: NodeRecord,
    window: ObservationWindow,
    threshold: float,
) -> DateIndex | None:
    """When the alter starts to influence the ego, or None if it never does.

    Both edge directions count; the earliest crossing wins. The result is
    never earlier than the alter's creation or the window start.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be within [0, 1]")
    attention = window_sum(ego.series, window)
    return _influencing_time(alter_edges, attention, alter, window, threshold)


def _influencing_time(
    alter_edges, ego_attention, alter, window, threshold
) -> DateIndex | None:
    crossings = [
        t
        for e in alter_edges
        if (t := _first_crossing(e, window, ego_attention, threshold)) is not None
    ]
    if not crossings:
        return None
    return max(min(crossings), alter.created, window.start)


def visible(
    alter_edges,
    ego: NodeRecord,
    alter: NodeRecord,
    window: ObservationWindow,
    threshold: float,
) -> bool:
    """True iff the alter crosses the threshold and already exists in the window."""
    if alter.created > window.end:
        return False
    return influencing_time(alter_edges, ego, alter, window, threshold) is not None


def extract_ego_network(
    store, ego_id: str, window: ObservationWindow, threshold: float
) -> EgoNetwork:
    """Resolve the filtered ego network for one window and threshold.

    Alters are every direct neighbour passing :func:`visible`, ordered by
    id; the ego's self-loop is reported separately and never counts as an
    alter. Raises :class:`UnknownNodeError` for an unknown ego id.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be within [0, 1]")
    ego = store.node(ego_id)
    attention = window_sum(ego.series, window)

    self_loop_edge: DynamicEdge | None = None
    incident: dict[str, dict[str, DynamicEdge]] = {}
    for e in store.out_edges.get(ego_id, ()):
        if e.target == ego_id:
            self_loop_edge = e
        else:
            incident.setdefault(e.target, {})["out"] = e
    for e in store.in_edges.get(ego_id, ()):
        if e.source != ego_id:
            incident.setdefault(e.source, {})["in"] = e

    def influence(edge: DynamicEdge) -> EdgeInfluence:
        flux = edge_flux(edge, window)
        if flux == 0.0 or attention == 0.0:
            norm = 0.0
        else:
            norm = min(1.0, flux / attention)
        return EdgeInfluence(edge, flux, norm)

    alters = []
    for alter_id in sorted(incident):
        alter = store.node(alter_id)
        if alter.created > window.end:
            continue
        edges = list(incident[alter_id].values())
        t = _influencing_time(edges, attention, alter, window, threshold)
        if t is None:
            continue
        pair = incident[alter_id]
        alters.append(
            AlterEntry(
                node=alter,
                incoming=influence(pair["in"]) if "in" in pair else None,
                outgoing=influence(pair["out"]) if "out" in pair else None,
                influencing_time=t,
            )
        )

    self_loop = influence(self_loop_edge) if self_loop_edge is not None else None
    return EgoNetwork(ego, window, threshold, tuple(alters), self_loop)


def relative_edge_widths(ego_net: EgoNetwork) -> dict[tuple[str, str], float]:
    """Edge widths normalised by the maximum flux in the ego network.

    The self-loop participates in the maximum. All-zero fluxes yield all-zero
    widths (degenerate network).
    """
    influences: list[EdgeInfluence] = []
    for a in ego_net.alters:
        if a.incoming is not None:
            influences.append(a.incoming)
        if a.outgoing is not None:
            influences.append(a.outgoing)
    if ego_net.self_loop is not None:
        influences.append(ego_net.self_loop)

    peak = max((inf.flux for inf in influences), default=0.0)
    if peak == 0.0:
        return {(inf.edge.source, inf.edge.target): 0.0 for inf in influences}
    return {
        (inf.edge.source, inf.edge.target): inf.flux / peak for inf in influences
    }
