"""SVG rendering: golden bytes, determinism, well-formedness, CLI path."""

import xml.etree.ElementTree as ET
from pathlib import Path

from click.testing import CliRunner

from attentionflow import (
    ObservationWindow,
    day,
    extract_ego_network,
    resolve_layout,
    save_snapshot,
)
from attentionflow.cli import main
from attentionflow.svg import render_svg

GOLDEN = Path(__file__).resolve().parent / "golden" / "fig1_layout.svg"


def _fig1_svg(store):
    w = ObservationWindow(day("2014-01-01"), day("2017-12-31"))
    net = extract_ego_network(store, "deep", w, 0.01)
    layout = resolve_layout(net, "total")
    names = {n.id: n.name for n in [net.ego] + [a.node for a in net.alters]}
    return render_svg(layout, names)


def test_golden_bytes(fig1_store):
    assert _fig1_svg(fig1_store) == GOLDEN.read_text()


def test_render_is_deterministic(fig1_store):
    assert _fig1_svg(fig1_store) == _fig1_svg(fig1_store)


def test_svg_is_well_formed(fig1_store):
    root = ET.fromstring(_fig1_svg(fig1_store))
    assert root.tag.endswith("svg")
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert circles  # tree rings drawn


def test_render_cli_matches_golden(fig1_store, tmp_path):
    snap = tmp_path / "snap"
    save_snapshot(fig1_store, snap)
    out = tmp_path / "out.svg"
    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "render",
            "--snapshot", str(snap),
            "--ego", "deep",
            "--start", "2014-01-01",
            "--end", "2017-12-31",
            "--threshold", "0.01",
            "--sort", "total",
            "--out", str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    assert out.read_text() == GOLDEN.read_text()
