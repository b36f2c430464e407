"""Colour circle graphs with at most 7 * omega^2 colours via pillar assignments."""

from .augment import AugmentConfig, augment_step, color_system
from .balanced import build_balanced
from .generator import gen_crossing_clique, gen_nested_chain, gen_uniform_matching
from .intervals import Interval, IntervalSystem, normalize, overlap_graph, overlaps, segments_of
from .perm_coloring import ClassColoring, compose
from .pillars import Pillar, PillarAssignmentState, make_state

__all__ = [
    "AugmentConfig",
    "ClassColoring",
    "Interval",
    "IntervalSystem",
    "Pillar",
    "PillarAssignmentState",
    "augment_step",
    "build_balanced",
    "color_system",
    "compose",
    "gen_crossing_clique",
    "gen_nested_chain",
    "gen_uniform_matching",
    "make_state",
    "normalize",
    "overlap_graph",
    "overlaps",
    "segments_of",
]
