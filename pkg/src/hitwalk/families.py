"""Parametric graph families with fixed vertex labelings.

Labelings (every closed-form formula relies on them):

* ``Path``: ids ``0..n-1`` along the path.
* ``Cycle``: ids in cyclic order.
* ``Star``: center ``0``, leaves ``1..leaves``.
* ``Grid``: coordinates ``(c_0, ..., c_{d-1})`` map to ``sum(c_i * m**i)``;
  the corner is ``0`` and vertex ``1`` is one of its neighbors.
* ``Hypercube``: id is the bitmask; neighbors differ in one bit.
* ``CompleteDaryTree``: level order, root ``0``, children of ``v`` are
  ``v*d + 1 .. v*d + d``.
* ``Tadpole``: cycle ids ``0..k-1`` in cyclic order with junction ``0``;
  tail ids ``k..k+l-1`` by increasing distance from the cycle. The far end
  is ``k+l-1`` and its neighbor is ``k+l-2`` (or the junction when ``l=1``).
* ``TreeFromParents``: vertex ``i`` hangs from ``parents[i]``; ``parents[0]``
  is ``-1`` (root).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph, build_graph


class FamilyParameterError(ValueError):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyParameterError(msg)


def _is_int(*xs) -> bool:
    return all(isinstance(x, int) and not isinstance(x, bool) for x in xs)


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self):
        _require(_is_int(self.n) and self.n >= 1, f"Path needs n >= 1, got {self.n!r}")


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        _require(_is_int(self.n) and self.n >= 3, f"Cycle needs n >= 3, got {self.n!r}")


@dataclass(frozen=True)
class Grid:
    d: int
    m: int

    def __post_init__(self):
        _require(_is_int(self.d, self.m) and self.d >= 1 and self.m >= 2,
                 f"Grid needs d >= 1 and m >= 2, got d={self.d!r}, m={self.m!r}")


@dataclass(frozen=True)
class Hypercube:
    d: int

    def __post_init__(self):
        _require(_is_int(self.d) and self.d >= 1, f"Hypercube needs d >= 1, got {self.d!r}")


@dataclass(frozen=True)
class Star:
    leaves: int

    def __post_init__(self):
        _require(_is_int(self.leaves) and self.leaves >= 1,
                 f"Star needs leaves >= 1, got {self.leaves!r}")


@dataclass(frozen=True)
class CompleteDaryTree:
    d: int
    h: int

    def __post_init__(self):
        _require(_is_int(self.d, self.h) and self.d >= 2 and self.h >= 0,
                 f"CompleteDaryTree needs d >= 2 and h >= 0, got d={self.d!r}, h={self.h!r}")


@dataclass(frozen=True)
class Tadpole:
    k: int
    l: int  # noqa: E741  tail length, junction excluded

    def __post_init__(self):
        _require(_is_int(self.k, self.l) and self.k >= 3 and self.l >= 1,
                 f"Tadpole needs k >= 3 and l >= 1, got k={self.k!r}, l={self.l!r}")

    @property
    def end(self) -> int:
        return self.k + self.l - 1

    @property
    def end_neighbor(self) -> int:
        return self.k + self.l - 2 if self.l >= 2 else 0


@dataclass(frozen=True)
class TreeFromParents:
    parents: tuple[int, ...]

    def __post_init__(self):
        parents = tuple(self.parents)
        object.__setattr__(self, "parents", parents)
        n = len(parents)
        _require(n >= 1 and parents[0] == -1, "parents[0] must be -1 (the root)")
        for i, p in enumerate(parents[1:], start=1):
            _require(_is_int(p) and 0 <= p < n and p != i,
                     f"parents[{i}] = {p!r} is not a valid vertex")
        # every vertex must reach the root without revisiting
        state = [0] * n  # 0 unknown, 1 on current chain, 2 reaches root
        state[0] = 2
        for start in range(1, n):
            chain = []
            v = start
            while state[v] == 0:
                state[v] = 1
                chain.append(v)
                v = parents[v]
            _require(state[v] == 2, f"parents contain a cycle through vertex {v}")
            for x in chain:
                state[x] = 2


FamilySpec = Union[Path, Cycle, Grid, Hypercube, Star, CompleteDaryTree, Tadpole, TreeFromParents]


def dary_size(d: int, h: int) -> int:
    return (d ** (h + 1) - 1) // (d - 1)


def dary_parent(v: int, d: int) -> int:
    return (v - 1) // d


def dary_depth(v: int, d: int) -> int:
    depth = 0
    while v > 0:
        v = dary_parent(v, d)
        depth += 1
    return depth


def generate(spec: FamilySpec) -> Graph:
    """Build the graph for ``spec`` under the module's labeling."""
    if isinstance(spec, Path):
        return build_graph([(i, i + 1) for i in range(spec.n - 1)], spec.n)
    if isinstance(spec, Cycle):
        return build_graph([(i, (i + 1) % spec.n) for i in range(spec.n)], spec.n)
    if isinstance(spec, Star):
        return build_graph([(0, i) for i in range(1, spec.leaves + 1)], spec.leaves + 1)
    if isinstance(spec, Grid):
        d, m = spec.d, spec.m
        n = m ** d
        edges = []
        for v in range(n):
            rest, stride = v, 1
            for _ in range(d):
                if rest % m < m - 1:
                    edges.append((v, v + stride))
                rest //= m
                stride *= m
        return build_graph(edges, n)
    if isinstance(spec, Hypercube):
        n = 1 << spec.d
        edges = [(v, v | (1 << b)) for v in range(n) for b in range(spec.d) if not v >> b & 1]
        return build_graph(edges, n)
    if isinstance(spec, CompleteDaryTree):
        n = dary_size(spec.d, spec.h)
        return build_graph([(dary_parent(v, spec.d), v) for v in range(1, n)], n)
    if isinstance(spec, Tadpole):
        k, l = spec.k, spec.l
        edges = [(i, (i + 1) % k) for i in range(k)]
        edges.append((0, k))
        edges.extend((k + i, k + i + 1) for i in range(l - 1))
        return build_graph(edges, k + l)
    if isinstance(spec, TreeFromParents):
        return build_graph([(p, i) for i, p in enumerate(spec.parents) if i], len(spec.parents))
    raise TypeError(f"unknown family spec {spec!r}")
