"""Ego-network views over networks of time series with dynamic influence edges."""

from .core import (
    AttentionSeries,
    DateIndex,
    DynamicEdge,
    EventRecord,
    NodeRecord,
    ObservationWindow,
    align_daily,
    canonical_json,
    day,
    day_text,
    window_sum,
    year_partition,
)
from .influence import (
    AlterEntry,
    EdgeInfluence,
    EgoNetwork,
    UnknownNodeError,
    edge_flux,
    extract_ego_network,
    influencing_time,
    normalized_influence,
    relative_edge_widths,
    visible,
)
from .layout import (
    DEFAULT_RADIUS_BOUNDS,
    SORT_CRITERIA,
    EdgeGeometry,
    NodeGeometry,
    ResolvedLayout,
    RingSpec,
    TreeRings,
    force_layout_1d,
    node_radius,
    resolve_layout,
    tree_rings,
    vertical_order,
    x_position,
)
from .store import (
    DatasetError,
    DatasetStore,
    DuplicateIdError,
    IntegrityError,
    ParseError,
    SearchHit,
    export_dataset,
    ingest,
    load_snapshot,
    save_snapshot,
    search,
)
from .synth import generate_synthetic

__version__ = "0.1.0"

__all__ = [
    "AttentionSeries",
    "DateIndex",
    "DynamicEdge",
    "EventRecord",
    "NodeRecord",
    "ObservationWindow",
    "align_daily",
    "canonical_json",
    "day",
    "day_text",
    "window_sum",
    "year_partition",
    "AlterEntry",
    "EdgeInfluence",
    "EgoNetwork",
    "UnknownNodeError",
    "edge_flux",
    "extract_ego_network",
    "influencing_time",
    "normalized_influence",
    "relative_edge_widths",
    "visible",
    "DEFAULT_RADIUS_BOUNDS",
    "SORT_CRITERIA",
    "EdgeGeometry",
    "NodeGeometry",
    "ResolvedLayout",
    "RingSpec",
    "TreeRings",
    "force_layout_1d",
    "node_radius",
    "resolve_layout",
    "tree_rings",
    "vertical_order",
    "x_position",
    "DatasetError",
    "DatasetStore",
    "DuplicateIdError",
    "IntegrityError",
    "ParseError",
    "SearchHit",
    "export_dataset",
    "ingest",
    "load_snapshot",
    "save_snapshot",
    "search",
    "generate_synthetic",
    "__version__",
]
