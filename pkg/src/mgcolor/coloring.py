"""Partial proper edge colorings over a fixed palette.

Colors are integers in [0, palette); an uncolored edge is `None`. The
coloring is stored as a symmetric n-by-n matrix so color lookup is O(1) in
either orientation. Per-vertex incident-color multisets are maintained
alongside the matrix so free-color queries and recoloring validity checks
are O(1) as well.

`set_edge_color` mutates the coloring in place; the previous logical value
is gone afterwards. Use `copy()` first wherever a before/after comparison
is needed (the invariant checkers treat colorings as values).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadPaletteError,
    DimensionMismatchError,
    InvalidColorError,
    NotAnEdgeError,
    ParseError,
    VertexRangeError,
)
from .graph import Graph

Color = int | None


@dataclass(frozen=True)
class Violation:
    """First defect found by a full-scan check.

    kind is one of: dimension, diagonal, symmetry, non_edge,
    duplicate_color, incomplete, bound.
    """

    kind: str
    edge: tuple[int, int] | None = None
    vertex: int | None = None
    colors: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [self.kind]
        if self.edge is not None:
            parts.append(f"edge ({self.edge[0]}, {self.edge[1]})")
        if self.vertex is not None:
            parts.append(f"vertex {self.vertex}")
        if self.colors:
            parts.append("colors " + ", ".join(str(c) for c in self.colors))
        return " ".join(parts)


@dataclass(frozen=True)
class Verdict:
    """Structured result of a full coloring check.

    proper: structural invariants hold (symmetric, loop-free diagonal, only
    real edges colored, no two incident edges share a color).
    complete: every graph edge is colored.
    bound_ok: every color id fits the palette.
    first_violation is present exactly when one of the three is false; when
    several categories fail, the reported one follows the fixed priority
    diagonal, symmetry, non_edge, duplicate_color, incomplete, bound, with
    ascending scan order inside each category.
    """

    proper: bool
    complete: bool
    colors_used: int
    bound_ok: bool
    first_violation: Violation | None = None

    @property
    def ok(self) -> bool:
        return self.proper and self.complete and self.bound_ok


class EdgeColoring:
    """Partial proper edge coloring of a graph with a fixed palette size.

    Constructing one gives the empty coloring (everything uncolored).
    """

    __slots__ = ("graph", "palette", "matrix", "_incident", "_color_edges", "_colored")

    def __init__(self, graph: Graph, palette: int):
        if palette < 1:
            raise BadPaletteError(f"palette size must be >= 1, got {palette}")
        self.graph = graph
        self.palette = palette
        n = graph.n
        self.matrix: list[list[Color]] = [[None] * n for _ in range(n)]
        # color -> multiplicity of that color among edges at each vertex.
        # Multisets (not sets) so the unchecked setter stays consistent even
        # through deliberately improper states built by parsers and tests.
        self._incident: list[dict[int, int]] = [{} for _ in range(n)]
        self._color_edges: dict[int, int] = {}
        self._colored = 0

    # -- queries ---------------------------------------------------------

    def color_of(self, u: int, v: int) -> Color:
        """Color of edge {u, v}; None for uncolored edges and non-edges."""
        n = self.graph.n
        if not 0 <= u < n:
            raise VertexRangeError(u, n)
        if not 0 <= v < n:
            raise VertexRangeError(v, n)
        return self.matrix[u][v]

    def is_free(self, v: int, color: int) -> bool:
        """True iff `color` appears on no edge incident to v."""
        n = self.graph.n
        if not 0 <= v < n:
            raise VertexRangeError(v, n)
        return color not in self._incident[v]

    def free_colors_on(self, v: int) -> list[int]:
        """Palette colors absent from v's incident edges, ascending."""
        n = self.graph.n
        if not 0 <= v < n:
            raise VertexRangeError(v, n)
        inc = self._incident[v]
        return [a for a in range(self.palette) if a not in inc]

    def min_free_color(self, v: int) -> int:
        """Smallest free color on v; the deterministic 'choose a free color'."""
        inc = self._incident[v]
        for a in range(self.palette):
            if a not in inc:
                return a
        raise InvalidColorError(f"no free color on vertex {v} (palette {self.palette})")

    def edge_color_valid(self, u: int, v: int, color: Color) -> bool:
        """True iff `color` is None or free on both endpoints of edge {u, v}."""
        if not self.graph.has_edge(u, v):
            raise NotAnEdgeError(u, v)
        if color is None:
            return True
        return color not in self._incident[u] and color not in self._incident[v]

    def count_colored(self) -> int:
        """Number of undirected edges currently colored."""
        return self._colored

    def colors_used(self) -> int:
        """Number of distinct color ids currently present."""
        return len(self._color_edges)

    # -- mutation --------------------------------------------------------

    def set_edge_color(self, u: int, v: int, color: Color) -> None:
        """Recolor edge {u, v} with `color` (None uncolors it). In place.

        Requires {u, v} to be a graph edge and the color to be valid there;
        an InvalidColorError coming out of algorithm code means the
        algorithm itself is broken.
        """
        if not self.graph.has_edge(u, v):
            raise NotAnEdgeError(u, v)
        if color is not None:
            if not 0 <= color < self.palette:
                raise InvalidColorError(
                    f"color {color} outside palette [0, {self.palette})"
                )
            if color in self._incident[u] or color in self._incident[v]:
                raise InvalidColorError(
                    f"color {color} is not free on both endpoints of ({u}, {v})"
                )
        self._apply(u, v, color)

    def set_edge_color_unchecked(self, u: int, v: int, color: Color) -> None:
        """Write a color with no edge or properness validation.

        For parsers and tests that need to materialize deliberately invalid
        states for the full-scan checker. Indices must still be in range.
        """
        n = self.graph.n
        if not 0 <= u < n:
            raise VertexRangeError(u, n)
        if not 0 <= v < n:
            raise VertexRangeError(v, n)
        self._apply(u, v, color)

    def _apply(self, u: int, v: int, color: Color) -> None:
        old = self.matrix[u][v]
        if old == color:
            return
        self.matrix[u][v] = color
        self.matrix[v][u] = color
        if old is not None:
            for w in (u, v):
                inc = self._incident[w]
                if inc.get(old, 0) <= 1:
                    inc.pop(old, None)
                else:
                    inc[old] -= 1
            if self._color_edges.get(old, 0) <= 1:
                self._color_edges.pop(old, None)
            else:
                self._color_edges[old] -= 1
            self._colored -= 1
        if color is not None:
            for w in (u, v):
                inc = self._incident[w]
                inc[color] = inc.get(color, 0) + 1
            self._color_edges[color] = self._color_edges.get(color, 0) + 1
            self._colored += 1

    def copy(self) -> EdgeColoring:
        """Independent snapshot sharing only the (immutable) graph."""
        dup = EdgeColoring.__new__(EdgeColoring)
        dup.graph = self.graph
        dup.palette = self.palette
        dup.matrix = [row[:] for row in self.matrix]
        dup._incident = [dict(inc) for inc in self._incident]
        dup._color_edges = dict(self._color_edges)
        dup._colored = self._colored
        return dup

    # -- checking --------------------------------------------------------

    def is_proper(self) -> Verdict:
        """Full-scan check of every invariant, ignoring the cached state.

        Scans the raw matrix against the graph so it also diagnoses states
        produced by `set_edge_color_unchecked` or direct matrix edits.
        """
        g = self.graph
        n = g.n
        c = self.palette
        mat = self.matrix
        if len(mat) != n or any(len(row) != n for row in mat):
            return Verdict(False, False, 0, False, Violation("dimension"))

        diagonal = symmetry = non_edge = duplicate = incomplete = bound = None
        seen_colors: set[int] = set()

        for u in range(n):
            if mat[u][u] is not None and diagonal is None:
                diagonal = Violation("diagonal", vertex=u, colors=(mat[u][u],))
            for v in range(u + 1, n):
                x = mat[u][v]
                if x != mat[v][u] and symmetry is None:
                    bad = tuple(c0 for c0 in (x, mat[v][u]) if c0 is not None)
                    symmetry = Violation("symmetry", edge=(u, v), colors=bad)
                if x is not None:
                    seen_colors.add(x)
                    if non_edge is None and not g.has_edge(u, v):
                        non_edge = Violation("non_edge", edge=(u, v), colors=(x,))
                    if bound is None and not 0 <= x < c:
                        bound = Violation("bound", edge=(u, v), colors=(x,))

        for u in range(n):
            row_seen: set[int] = set()
            for v in range(n):
                x = mat[u][v]
                if x is None:
                    continue
                if x in row_seen:
                    if duplicate is None:
                        duplicate = Violation(
                            "duplicate_color", vertex=u, edge=(u, v), colors=(x,)
                        )
                    break
                row_seen.add(x)
            if duplicate is not None:
                break

        for u, v in g.edge_set():
            if mat[u][v] is None:
                incomplete = Violation("incomplete", edge=(u, v))
                break

        proper = diagonal is None and symmetry is None and non_edge is None and duplicate is None
        first = diagonal or symmetry or non_edge or duplicate or incomplete or bound
        return Verdict(
            proper=proper,
            complete=incomplete is None,
            colors_used=len(seen_colors),
            bound_ok=bound is None,
            first_violation=first,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (
            self.graph.n == other.graph.n
            and self.palette == other.palette
            and self.matrix == other.matrix
        )

    def __repr__(self) -> str:
        return (
            f"EdgeColoring(n={self.graph.n}, palette={self.palette}, "
            f"colored={self._colored})"
        )


def empty_coloring(graph: Graph, palette: int) -> EdgeColoring:
    """The all-uncolored coloring of `graph` with the given palette size."""
    return EdgeColoring(graph, palette)


def format_coloring(coloring: EdgeColoring) -> str:
    """Serialize a coloring: `s <n> <m> <palette> <colors_used>` header, then
    one `e <u> <v> <color>` line per colored edge (all fields 1-based),
    canonical edge order, uncolored edges omitted."""
    g = coloring.graph
    lines = [f"s {g.n} {g.m} {coloring.palette} {coloring.colors_used()}"]
    for u, v in g.edge_set():
        col = coloring.matrix[u][v]
        if col is not None:
            lines.append(f"e {u + 1} {v + 1} {col + 1}")
    return "\n".join(lines) + "\n"


def parse_coloring(graph: Graph, text: str) -> EdgeColoring:
    """Parse the coloring format against `graph`.

    The parser is deliberately permissive about *semantic* defects so the
    checker can classify them: colors beyond the palette and lines naming
    non-edges are loaded as-is and reported by the verdict, not here. It is
    strict about syntax, duplicate edge lines, and dimensions; the header's
    colors_used field is informational and not validated.
    """
    header: tuple[int, int, int] | None = None
    coloring: EdgeColoring | None = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "s":
            if header is not None:
                raise ParseError("duplicate 's' header", lineno)
            if len(fields) != 5:
                raise ParseError(
                    "header must be 's <n> <m> <palette> <colors_used>'", lineno
                )
            n, m, palette, _used = (_int_field(f, lineno) for f in fields[1:])
            if n != graph.n or m != graph.m:
                raise DimensionMismatchError(
                    f"coloring header n={n} m={m} does not match graph "
                    f"n={graph.n} m={graph.m}"
                )
            if palette < 1:
                raise ParseError("palette must be >= 1", lineno)
            header = (n, m, palette)
            coloring = EdgeColoring(graph, palette)
        elif fields[0] == "e":
            if coloring is None:
                raise ParseError("edge line before 's' header", lineno)
            if len(fields) != 4:
                raise ParseError("edge line must be 'e <u> <v> <color>'", lineno)
            u, v, col = (_int_field(f, lineno) for f in fields[1:])
            if not 1 <= u <= graph.n or not 1 <= v <= graph.n:
                raise ParseError(f"vertex out of range 1..{graph.n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            if col < 1:
                raise ParseError("colors are 1-based and must be >= 1", lineno)
            key = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if key in seen:
                raise ParseError(f"duplicate edge line ({u}, {v})", lineno)
            seen.add(key)
            coloring.set_edge_color_unchecked(u - 1, v - 1, col - 1)
        else:
            raise ParseError(f"unknown line type {fields[0]!r}", lineno)
    if coloring is None:
        raise ParseError("missing 's' header")
    return coloring


def _int_field(s: str, lineno: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}", lineno) from None
