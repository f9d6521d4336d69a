"""Simple graphs, their text formats, and the harmonic operator.

A graph lives on dense vertex labels ``0..n-1``.  States (vertex subsets)
and co-states (edge subsets) are :class:`~harmolight.gf2.BitVector`
instances; co-state bit ``e`` refers to ``graph.edge_list[e]``, i.e. edges
sorted lexicographically as ``(min, max)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .gf2 import BitMatrix, BitVector, DimensionError


class GraphFormatError(ValueError):
    """Raised for malformed graph text or invalid graph data."""


class InvalidHarmonicMatrix(ValueError):
    """Matrix is not symmetric or has an odd row sum."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={self.n}")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting duplicate edges (in either orientation)."""
        seen = set()
        for u, v in edges:
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphFormatError("a cycle needs at least 3 vertices")
        return cls(n, frozenset(_norm_edge(i, (i + 1) % n) for i in range(n)))

    @cached_property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return self.neighbor_masks[v].bit_count()

    def __str__(self) -> str:
        return to_edge_list_text(self)


# ---------- text formats

_G6_MIN, _G6_MAX = 63, 126


def _looks_like_graph6(line: str) -> bool:
    body = line[len(">>graph6<<"):] if line.startswith(">>graph6<<") else line
    return bool(body) and all(_G6_MIN <= ord(c) <= _G6_MAX for c in body)


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format, or a single graph6 line.

    Edge-list format: a header ``n=<int>`` followed by ``<u> <v>`` lines;
    ``#`` starts a comment and blank lines are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty graph description")
    if len(lines) == 1 and _looks_like_graph6(lines[0]):
        return parse_graph6(lines[0])

    header = lines[0].replace(" ", "")
    if not header.startswith("n="):
        raise GraphFormatError(f"malformed header {lines[0]!r}; expected 'n=<int>'")
    try:
        n = int(header[2:])
    except ValueError:
        raise GraphFormatError(f"malformed header {lines[0]!r}") from None
    if n < 0:
        raise GraphFormatError("vertex count must be non-negative")

    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optionally carrying the ``>>graph6<<`` header)."""
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in line]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError(f"invalid graph6 string {line!r}")

    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        raise GraphFormatError(f"truncated graph6 size field in {line!r}")

    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n]
    elif n < 258048:
        out = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        out = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        out.append(chunk)
    return "".join(chr(d + 63) for d in out)


# ---------- the harmonic operator

def harmonic_matrix(g: Graph) -> BitMatrix:
    """Laplacian mod 2: adjacency plus the parity-of-degree diagonal."""
    rows = []
    for v, nb in enumerate(g.neighbor_masks):
        rows.append(nb | ((nb.bit_count() & 1) << v))
    return BitMatrix(g.n, tuple(rows))


def is_harmonic(m: BitMatrix) -> bool:
    return m.is_symmetric() and all(r.bit_count() % 2 == 0 for r in m.rows)


def graph_from_harmonic(m: BitMatrix) -> Graph:
    """Recover the graph whose harmonic matrix is ``m``."""
    if not m.is_symmetric():
        raise InvalidHarmonicMatrix("matrix is not symmetric")
    for i, r in enumerate(m.rows):
        if r.bit_count() & 1:
            raise InvalidHarmonicMatrix(f"row {i} sums to 1 mod 2")
    edges = []
    for i, r in enumerate(m.rows):
        r >>= i + 1
        j = i + 1
        while r:
            if r & 1:
                edges.append((i, j))
            r >>= 1
            j += 1
    return Graph(m.dim, frozenset(edges))


def _check_state(g: Graph, s: BitVector) -> None:
    if s.length != g.n:
        raise DimensionError(f"state length {s.length} != vertex count {g.n}")


def boundary(g: Graph, s: BitVector) -> BitVector:
    """Sum mod 2 of the edge sets incident to the vertices of ``s``."""
    _check_state(g, s)
    out = 0
    for e, (u, v) in enumerate(g.edge_list):
        if ((s.bits >> u) ^ (s.bits >> v)) & 1:
            out |= 1 << e
    return BitVector(len(g.edge_list), out)


def coboundary(g: Graph, c: BitVector) -> BitVector:
    """Sum mod 2 of the endpoint pairs of the edges of ``c``."""
    if c.length != len(g.edge_list):
        raise DimensionError(f"co-state length {c.length} != edge count {len(g.edge_list)}")
    out = 0
    for e, (u, v) in enumerate(g.edge_list):
        if (c.bits >> e) & 1:
            out ^= (1 << u) | (1 << v)
    return BitVector(g.n, out)
