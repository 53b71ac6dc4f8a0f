"""Command line entry points: gen-synthetic, ingest, serve, render."""

from __future__ import annotations

import sys

import click

from .core import ObservationWindow, day
from .influence import extract_ego_network
from .layout import DEFAULT_RADIUS_BOUNDS, SORT_CRITERIA, resolve_layout
from .store import DatasetError, ingest as ingest_files, load_snapshot, save_snapshot
from .svg import render_svg
from .synth import generate_synthetic


@click.group()
def main() -> None:
    """Ego-network views over networks of time series."""


@main.command("gen-synthetic")
@click.option("--seed", type=int, required=True)
@click.option("--nodes", "n_nodes", type=int, required=True)
@click.option("--edges", "n_edges", type=int, required=True)
@click.option("--days", "n_days", type=int, required=True)
@click.option("--spike-rate", type=float, default=8.0, show_default=True)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), required=True)
def gen_synthetic(seed, n_nodes, n_edges, n_days, spike_rate, out_dir) -> None:
    """Generate a deterministic synthetic dataset."""
    try:
        result = generate_synthetic(
            out_dir,
            seed=seed,
            n_nodes=n_nodes,
            n_edges=n_edges,
            n_days=n_days,
            spike_rate=spike_rate,
        )
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(
        f"wrote {result['n_nodes']} nodes / {result['n_edges']} edges "
        f"over {result['n_days']} days to {out_dir}"
    )


@main.command("ingest")
@click.option("--nodes", "nodes_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--edges", "edges_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--events", "events_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", "snapshot_dir", type=click.Path(file_okay=False), required=True)
def ingest(nodes_path, edges_path, events_path, snapshot_dir) -> None:
    """Validate a dataset and write a normalized snapshot directory."""
    try:
        store = ingest_files(nodes_path, edges_path, events_path)
    except DatasetError as exc:
        raise click.ClickException(str(exc))
    save_snapshot(store, snapshot_dir)
    click.echo(
        f"snapshot {store.snapshot_id[:12]}: {store.n_nodes} nodes, "
        f"{store.n_edges} edges, {store.n_events} events -> {snapshot_dir}"
    )


@main.command("serve")
@click.option(
    "--snapshot", "snapshot_dir", envvar="SNAPSHOT",
    type=click.Path(exists=True, file_okay=False), required=True,
)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", envvar="PORT", type=int, default=8000, show_default=True)
@click.option("--max-alters", type=int, default=200, show_default=True)
@click.option("--cors-origin", "cors_origins", multiple=True, default=("*",))
def serve(snapshot_dir, host, port, max_alters, cors_origins) -> None:
    """Serve the HTTP API over a snapshot."""
    import uvicorn

    from .api import create_app

    try:
        store = load_snapshot(snapshot_dir)
    except DatasetError as exc:
        raise click.ClickException(str(exc))
    click.echo(
        f"serving {store.n_nodes} nodes / {store.n_edges} edges on {host}:{port}",
        err=True,
    )
    app = create_app(store, max_alters=max_alters, cors_origins=tuple(cors_origins))
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command("render")
@click.option(
    "--snapshot", "snapshot_dir", envvar="SNAPSHOT",
    type=click.Path(exists=True, file_okay=False), required=True,
)
@click.option("--ego", "ego_id", required=True)
@click.option("--start", default=None, help="window start (YYYY-MM-DD); default: ego creation")
@click.option("--end", default=None, help="window end (YYYY-MM-DD); default: ego series end")
@click.option("--threshold", type=float, default=0.01, show_default=True)
@click.option("--sort", "criterion", type=click.Choice(SORT_CRITERIA), default="force", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default="-", show_default=True)
def render(snapshot_dir, ego_id, start, end, threshold, criterion, out_path) -> None:
    """Render an ego network to SVG (stdout with --out -)."""
    try:
        store = load_snapshot(snapshot_dir)
        ego = store.node(ego_id)
        window = ObservationWindow(
            day(start) if start else ego.created,
            day(end) if end else ego.series.end,
        )
        ego_net = extract_ego_network(store, ego_id, window, threshold)
    except (DatasetError, LookupError, ValueError) as exc:
        raise click.ClickException(str(exc))
    layout = resolve_layout(ego_net, criterion=criterion, bounds=DEFAULT_RADIUS_BOUNDS)
    names = {n.id: n.name for n in [ego_net.ego] + [a.node for a in ego_net.alters]}
    svg = render_svg(layout, names)
    if out_path == "-":
        sys.stdout.write(svg)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(svg)
        click.echo(f"wrote {out_path}")


if __name__ == "__main__":
    main()
