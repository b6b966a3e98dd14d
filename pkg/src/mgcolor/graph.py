"""Simple undirected graphs: validated construction, generators, DIMACS text I/O.

Vertices are the integers 0..n-1. Neighbor lists keep first-mention order
from the edge sequence used to build the graph; that order is the
deterministic tie-breaker consumed by fan construction and path extension,
so two graphs that are equal as vertex/edge sets can still drive the
coloring algorithm differently if their adjacency orders differ.
"""

from __future__ import annotations

import random
from typing import Iterable

from .errors import (
    BadParamsError,
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Construction validates everything: neighbor ids in range, no self-loops,
    no multi-edges. Adjacency is stored symmetrically. Instances must not be
    mutated after construction; `neighbors` returns the live internal list
    for speed and callers must treat it as read-only.
    """

    __slots__ = ("n", "m", "adj", "_adj_sets", "_delta")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise BadParamsError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        adj_sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not 0 <= u < n:
                raise VertexRangeError(u, n)
            if not 0 <= v < n:
                raise VertexRangeError(v, n)
            if u == v:
                raise SelfLoopError(u)
            if v in adj_sets[u]:
                raise DuplicateEdgeError(u, v)
            adj[u].append(v)
            adj_sets[u].add(v)
            adj[v].append(u)
            adj_sets[v].add(u)
            m += 1
        self.adj = adj
        self.m = m
        self._adj_sets = adj_sets
        self._delta = max((len(row) for row in adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of `v` in insertion order (read-only view)."""
        if not 0 <= v < self.n:
            raise VertexRangeError(v, self.n)
        return self.adj[v]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexRangeError(v, self.n)
        return len(self.adj[v])

    def max_degree(self) -> int:
        """Maximum vertex degree; 0 for edgeless or empty graphs."""
        return self._delta

    def has_edge(self, u: int, v: int) -> bool:
        if not 0 <= u < self.n:
            raise VertexRangeError(u, self.n)
        if not 0 <= v < self.n:
            raise VertexRangeError(v, self.n)
        return v in self._adj_sets[u]

    def edge_set(self) -> list[Edge]:
        """Every undirected edge once, canonical (u < v) orientation.

        Order is deterministic: ascending u, then insertion order of v
        within u's neighbor list.
        """
        return [(u, v) for u in range(self.n) for v in self.adj[u] if v > u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj_sets == other._adj_sets

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    """K_n."""
    if n < 0:
        raise BadParamsError(f"complete graph needs n >= 0, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    """C_n; needs n >= 3 (shorter cycles are loops or multi-edges)."""
    if n < 3:
        raise BadParamsError(f"cycle graph needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    if n < 0:
        raise BadParamsError(f"path graph needs n >= 0, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and `leaves` leaf vertices."""
    if leaves < 0:
        raise BadParamsError(f"star graph needs leaves >= 0, got {leaves}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    """The Petersen graph: 10 vertices, 15 edges, 3-regular."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
    for i in range(5):
        edges.append((i, i + 5))              # spokes
    for i in range(5):
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return Graph(10, edges)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), a pure function of (n, p, seed).

    Uses Python's Mersenne Twister (`random.Random(seed)`) and draws one
    uniform variate per vertex pair in ascending (u, v) order, so the result
    is reproducible for a fixed interpreter version and fixed arguments.
    """
    if n < 0:
        raise BadParamsError(f"gnp needs n >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise BadParamsError(f"gnp needs 0 <= p <= 1, got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


FAMILIES = ("complete", "cycle", "path", "star", "petersen", "gnp")


def gen_family(
    family: str,
    n: int | None = None,
    p: float | None = None,
    seed: int = 0,
) -> Graph:
    """Build a named graph family; see FAMILIES for the accepted names."""
    if family == "complete":
        return complete_graph(_require_n(family, n))
    if family == "cycle":
        return cycle_graph(_require_n(family, n))
    if family == "path":
        return path_graph(_require_n(family, n))
    if family == "star":
        return star_graph(_require_n(family, n))
    if family == "petersen":
        if n is not None or p is not None:
            raise BadParamsError("petersen takes no parameters")
        return petersen_graph()
    if family == "gnp":
        if p is None:
            raise BadParamsError("gnp needs parameters n and p")
        return gnp_graph(_require_n(family, n), p, seed)
    raise BadParamsError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _require_n(family: str, n: int | None) -> int:
    if n is None:
        raise BadParamsError(f"{family} needs parameter n")
    return n


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS-like graph format.

    Lines: `c ...` comments, exactly one `p edge <n> <m>` header, then
    `e <u> <v>` lines with 1-based endpoints. Blank lines are ignored.
    Raises ParseError with the offending line number.
    """
    n: int | None = None
    m: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p' header", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError("header must be 'p edge <n> <m>'", lineno)
            n, m = _int_field(fields[2], lineno), _int_field(fields[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("n and m must be nonnegative", lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p edge' header", lineno)
            if len(fields) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", lineno)
            u, v = _int_field(fields[1], lineno), _int_field(fields[2], lineno)
            if not 1 <= u <= n or not 1 <= v <= n:
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            key = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if key in seen:
                raise ParseError(f"duplicate edge ({u}, {v})", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, file has {len(edges)}")
    return Graph(n, edges)


def _int_field(s: str, lineno: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}", lineno) from None


def format_dimacs(g: Graph) -> str:
    """Serialize to the DIMACS-like format in canonical edge order."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edge_set())
    return "\n".join(lines) + "\n"
