"""Deterministic (max_degree + 1) edge coloring of simple graphs.

The coloring algorithm is the Misra & Gries refinement of Vizing's
constructive argument: repeatedly pick an uncolored edge, build a maximal
fan, flip a Kempe chain when the candidate color is blocked, and rotate the
fan. Every structural lemma the argument relies on is available as an
executable checker, and an exhaustive backtracking oracle provides exact
chromatic indices for small instances.
"""

from .altpath import (
    AltPath,
    InversionReport,
    adjacent,
    all_adjacent_pairs,
    alternates,
    check_path,
    inversion_report,
    invert,
    is_inverted,
    is_maximal_path,
    maximal_path,
    next_color,
    next_vertex,
    path_edges,
)
from .coloring import (
    Color,
    EdgeColoring,
    Verdict,
    Violation,
    empty_coloring,
    format_coloring,
    parse_coloring,
)
from .fan import Fan, check_fan, is_maximal_fan, maximal_fan, rotate_fan, singleton_fan
from .graph import (
    FAMILIES,
    Graph,
    complete_graph,
    cycle_graph,
    format_dimacs,
    gen_family,
    gnp_graph,
    parse_dimacs,
    path_graph,
    petersen_graph,
    star_graph,
)
from .oracle import backtrack_color, exact_chromatic_index, verify_coloring
from .vizing import StepTrace, extend_coloring, find_subfan, mk_edge_coloring

from . import errors

__all__ = [
    "AltPath",
    "InversionReport",
    "Color",
    "EdgeColoring",
    "FAMILIES",
    "Fan",
    "Graph",
    "StepTrace",
    "Verdict",
    "Violation",
    "adjacent",
    "all_adjacent_pairs",
    "alternates",
    "backtrack_color",
    "check_fan",
    "check_path",
    "complete_graph",
    "cycle_graph",
    "empty_coloring",
    "errors",
    "exact_chromatic_index",
    "extend_coloring",
    "find_subfan",
    "format_coloring",
    "format_dimacs",
    "gen_family",
    "gnp_graph",
    "inversion_report",
    "invert",
    "is_inverted",
    "is_maximal_fan",
    "is_maximal_path",
    "maximal_fan",
    "maximal_path",
    "mk_edge_coloring",
    "next_color",
    "next_vertex",
    "parse_coloring",
    "parse_dimacs",
    "path_edges",
    "path_graph",
    "petersen_graph",
    "rotate_fan",
    "singleton_fan",
    "star_graph",
    "verify_coloring",
]
