"""Synthetic generator: determinism, motifs, connectivity, ingestability."""

import json

import numpy as np
import pytest

from attentionflow import day, generate_synthetic, ingest
from attentionflow.synth import RESURRECT_NEW, RESURRECT_OLD, TWIN_A, TWIN_B

from oracles import weakly_connected


def _read_jsonl(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh]


def test_same_seed_is_byte_identical(tmp_path):
    a = generate_synthetic(tmp_path / "a", seed=1, n_nodes=60, n_edges=200, n_days=120)
    b = generate_synthetic(tmp_path / "b", seed=1, n_nodes=60, n_edges=200, n_days=120)
    for key in ("nodes", "edges", "events"):
        assert a[key].read_bytes() == b[key].read_bytes()


def test_different_seed_differs(tmp_path):
    a = generate_synthetic(tmp_path / "a", seed=1, n_nodes=30, n_edges=100, n_days=90)
    b = generate_synthetic(tmp_path / "b", seed=2, n_nodes=30, n_edges=100, n_days=90)
    assert a["nodes"].read_bytes() != b["nodes"].read_bytes()


def test_resurrection_motif_in_emitted_files(tmp_path):
    result = generate_synthetic(tmp_path, seed=3, n_nodes=40, n_edges=140, n_days=240)
    nodes = {r["id"]: r for r in _read_jsonl(result["nodes"])}
    old, new = nodes[RESURRECT_OLD], nodes[RESURRECT_NEW]
    offset = day(new["created"]) - day(old["created"])
    values = np.asarray(old["values"])
    before = values[max(0, offset - 30) : offset]
    after = values[offset : offset + 8]
    assert after.max() > 3.0 * before.mean()
    # and the strong new -> old edge exists
    edges = _read_jsonl(result["edges"])
    assert any(e["source"] == RESURRECT_NEW and e["target"] == RESURRECT_OLD for e in edges)


def test_twin_motif_series_are_correlated(tmp_path):
    result = generate_synthetic(tmp_path, seed=4, n_nodes=40, n_edges=140, n_days=180)
    nodes = {r["id"]: r for r in _read_jsonl(result["nodes"])}
    a = np.asarray(nodes[TWIN_A]["values"])
    b = np.asarray(nodes[TWIN_B]["values"])
    assert nodes[TWIN_A]["created"] == nodes[TWIN_B]["created"]
    assert np.corrcoef(a, b)[0, 1] > 0.9
    edges = _read_jsonl(result["edges"])
    pairs = {(e["source"], e["target"]) for e in edges}
    assert (TWIN_A, TWIN_B) in pairs and (TWIN_B, TWIN_A) in pairs


def test_generated_graph_is_weakly_connected(tmp_path):
    result = generate_synthetic(tmp_path, seed=6, n_nodes=100, n_edges=400, n_days=90)
    index = {f"n{i:05d}": i for i in range(100)}
    pairs = [
        (index[e["source"]], index[e["target"]]) for e in _read_jsonl(result["edges"])
    ]
    assert len(pairs) == 400
    assert weakly_connected(100, pairs)


def test_generated_dataset_ingests_cleanly(tmp_path):
    result = generate_synthetic(tmp_path, seed=7, n_nodes=50, n_edges=170, n_days=100)
    store = ingest(result["nodes"], result["edges"], result["events"])
    assert store.n_nodes == 50
    assert store.n_edges == 170
    assert store.n_events > 0
    # every value non-negative, every edge endpoint resolved (ingest enforces)
    for node in store.nodes.values():
        assert float(node.series.values.min()) >= 0.0


def test_parameter_validation(tmp_path):
    with pytest.raises(ValueError):
        generate_synthetic(tmp_path, seed=1, n_nodes=3, n_edges=50, n_days=100)
    with pytest.raises(ValueError):
        generate_synthetic(tmp_path, seed=1, n_nodes=10, n_edges=5, n_days=100)
    with pytest.raises(ValueError):
        generate_synthetic(tmp_path, seed=1, n_nodes=10, n_edges=50, n_days=10)
