"""Red/blue edge partitions of 1-plane embedded graphs."""

from .augment import crossing_augment, detect_kites, fill_faces, skeleton, triangulate
from .deg1 import build_2sat, partition_deg1, solve_2sat
from .deg3 import Deg3Certificate, NotNICError, choose_red_pair, partition_deg3
from .graph import (
    Color,
    CrossingPair,
    EdgeColoring,
    GraphError,
    OnePlaneGraph,
    check_partition,
    faces,
    is_3connected,
    is_ic,
    is_nic,
    planarize,
    validate,
)
from .oracle import SearchAborted, Status, decide_k, enumerate_valid, min_k
from .orient import compute_3orientation

__all__ = [
    "Color",
    "CrossingPair",
    "Deg3Certificate",
    "EdgeColoring",
    "GraphError",
    "NotNICError",
    "OnePlaneGraph",
    "SearchAborted",
    "Status",
    "build_2sat",
    "check_partition",
    "choose_red_pair",
    "compute_3orientation",
    "crossing_augment",
    "decide_k",
    "detect_kites",
    "enumerate_valid",
    "faces",
    "fill_faces",
    "is_3connected",
    "is_ic",
    "is_nic",
    "min_k",
    "partition_deg1",
    "partition_deg3",
    "planarize",
    "skeleton",
    "solve_2sat",
    "triangulate",
    "validate",
]
