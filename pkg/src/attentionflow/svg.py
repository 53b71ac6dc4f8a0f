"""Headless SVG rendering of a resolved layout, for golden tests and demos.

Output is deterministic: fixed float formatting, fixed element order, fixed
ring palette keyed by color_index.
"""

from __future__ import annotations

from .core import day_text
from .layout import ResolvedLayout

RING_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
)

_CANVAS_W = 1000.0
_CANVAS_H = 600.0
_MARGIN = 60.0


def _fx(v: float) -> str:
    return f"{v:.2f}"


def render_svg(layout: ResolvedLayout, names: dict[str, str] | None = None) -> str:
    """Standalone SVG of the time-aligned ego network."""
    names = names or {}
    plot_w = _CANVAS_W - 2 * _MARGIN
    plot_h = _CANVAS_H - 2 * _MARGIN

    def px(x: float) -> float:
        return _MARGIN + x * plot_w

    def py(y: float) -> float:
        return _MARGIN + y * plot_h

    positions = {n.node_id: (px(n.x), py(n.y)) for n in layout.nodes}
    radii = {n.node_id: n.radius * _CANVAS_H for n in layout.nodes}

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fx(_CANVAS_W)}" '
        f'height="{_fx(_CANVAS_H)}" viewBox="0 0 {_fx(_CANVAS_W)} {_fx(_CANVAS_H)}">',
        f"<title>ego network {layout.nodes[0].node_id} "
        f"{day_text(layout.window.start)}..{day_text(layout.window.end)}</title>",
        f'<rect width="{_fx(_CANVAS_W)}" height="{_fx(_CANVAS_H)}" fill="#ffffff"/>',
    ]

    axis_y = _CANVAS_H - _MARGIN / 2
    parts.append(
        f'<line x1="{_fx(_MARGIN)}" y1="{_fx(axis_y)}" x2="{_fx(_CANVAS_W - _MARGIN)}" '
        f'y2="{_fx(axis_y)}" stroke="#999999" stroke-width="1"/>'
    )
    for frac, label in ((0.0, day_text(layout.window.start)), (1.0, day_text(layout.window.end))):
        anchor = "start" if frac == 0.0 else "end"
        parts.append(
            f'<text x="{_fx(px(frac))}" y="{_fx(axis_y + 16)}" font-size="11" '
            f'fill="#555555" text-anchor="{anchor}">{label}</text>'
        )

    for e in layout.edges:
        stroke = _fx(0.5 + e.width * 6.5)
        if e.is_self_loop:
            x, y = positions[e.source_id]
            loop_r = radii[e.source_id] * 0.75
            parts.append(
                f'<circle cx="{_fx(x)}" cy="{_fx(y - radii[e.source_id])}" r="{_fx(loop_r)}" '
                f'fill="none" stroke="#888888" stroke-width="{stroke}"/>'
            )
        else:
            x1, y1 = positions[e.source_id]
            x2, y2 = positions[e.target_id]
            parts.append(
                f'<line x1="{_fx(x1)}" y1="{_fx(y1)}" x2="{_fx(x2)}" y2="{_fx(y2)}" '
                f'stroke="#888888" stroke-width="{stroke}" stroke-opacity="0.6"/>'
            )

    for n in layout.nodes:
        x, y = positions[n.node_id]
        outer = radii[n.node_id]
        # Largest ring first so later (inner) rings paint on top of it.
        for ring in reversed(n.rings):
            color = RING_PALETTE[ring.color_index % len(RING_PALETTE)]
            parts.append(
                f'<circle cx="{_fx(x)}" cy="{_fx(y)}" r="{_fx(outer * ring.outer_radius)}" '
                f'fill="{color}" stroke="none"/>'
            )
        parts.append(
            f'<circle cx="{_fx(x)}" cy="{_fx(y)}" r="{_fx(outer)}" '
            f'fill="none" stroke="#333333" stroke-width="0.75"/>'
        )
        label = names.get(n.node_id, n.node_id)
        parts.append(
            f'<text x="{_fx(x)}" y="{_fx(y - outer - 4)}" font-size="10" '
            f'fill="#333333" text-anchor="middle">{_escape(label)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
