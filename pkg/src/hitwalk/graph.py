"""Immutable simple undirected graphs and their text format.

The on-disk format is a header line ``"n m"`` followed by ``m`` lines
``"u v"`` with ``u < v``, 0-indexed, sorted lexicographically and
newline-terminated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Base class for rejected graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError, IndexError):
    pass


class GraphParseError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``. Build
    instances with :func:`build_graph`; the constructor does not validate.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, lexicographically."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v!r} out of range for n={self.n}")


def build_graph(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Validate an edge list and return the corresponding :class:`Graph`.

    Raises :class:`VertexRangeError`, :class:`SelfLoopError` or
    :class:`DuplicateEdgeError` on bad input.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        for x in (u, v):
            if not isinstance(x, int) or not 0 <= x < n:
                raise VertexRangeError(f"edge ({u}, {v}): vertex {x!r} out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
        m += 1
    return Graph(n=n, adjacency=tuple(tuple(sorted(s)) for s in nbrs), m=m)


def component_of(g: Graph, v: int) -> set[int]:
    """Vertices reachable from ``v`` (breadth-first)."""
    g.check_vertex(v)
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_connected(g: Graph) -> bool:
    # the empty graph counts as connected
    if g.n == 0:
        return True
    return len(component_of(g, 0)) == g.n


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}") from None
    return a, b


def parse_graph(text: str) -> Graph:
    """Parse the text format produced by :func:`serialize_graph`.

    Blank lines are ignored. Edge orientation and order are not enforced on
    input, but invariant violations are delegated to :func:`build_graph`.
    """
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise GraphParseError("missing header line 'n m'")
    lineno, header = lines[0]
    n, m = _ints(header, lineno)
    if n < 0 or m < 0:
        raise GraphParseError(f"line {lineno}: negative count in header {header!r}")
    edges = [_ints(ln, i) for i, ln in lines[1:]]
    if len(edges) != m:
        raise GraphParseError(f"declared {m} edges, found {len(edges)}")
    return build_graph(edges, n)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_graph(g))
