"""Hitting times from the absorbing linear system.

For a fixed target ``j`` the unknowns satisfy ``h_j = 0`` and, for every
other vertex ``i`` in ``j``'s component,

    h_i = 1 + (1/deg(i)) * sum(h_k for k in neighbors(i)).

Multiplying row ``i`` by ``deg(i)`` gives the reduced Laplacian system
``deg(i) h_i - sum_{k != j} h_k = deg(i)``, which is symmetric positive
definite on a connected component. The exact backend eliminates it with
diagonal pivots in :class:`fractions.Fraction` arithmetic; the float
backend hands the dense system to LAPACK.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .graph import Graph, component_of, is_connected


class Backend(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


class _Unreachable:
    """Marker for a source outside the target's component."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()

Value = Union[Fraction, float, _Unreachable]


class SingularSystemError(RuntimeError):
    """The reduced system could not be solved; a bug for valid graphs."""


@dataclass(frozen=True)
class HittingVector:
    target: int
    values: tuple
    backend: Backend

    def __getitem__(self, i: int) -> Value:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


def _as_backend(backend) -> Backend:
    return backend if isinstance(backend, Backend) else Backend(backend)


def _solve_exact(g: Graph, target: int, comp: set[int],
                 order: Sequence[int] | None) -> dict[int, Fraction]:
    # rows[i][c] holds the coefficient of h_c in row i (target column dropped)
    rows: dict[int, dict[int, Fraction]] = {}
    rhs: dict[int, Fraction] = {}
    for i in comp:
        if i == target:
            continue
        deg = len(g.adjacency[i])
        row = {i: Fraction(deg)}
        for k in g.adjacency[i]:
            if k != target:
                row[k] = Fraction(-1)
        rows[i] = row
        rhs[i] = Fraction(deg)

    if order is not None:
        order = [v for v in order if v in rows]
        if sorted(order) != sorted(rows):
            raise ValueError("elimination order must list every non-target vertex of the component once")

    eliminated: list[tuple[int, dict[int, Fraction], Fraction]] = []
    active = set(rows)
    step = 0
    while active:
        if order is not None:
            p = order[step]
        else:
            # minimum fill-in heuristic: sparsest remaining row, lowest id on ties
            p = min(active, key=lambda v: (len(rows[v]), v))
        step += 1
        prow = rows.pop(p)
        pb = rhs.pop(p)
        active.discard(p)
        pivot = prow.get(p)
        if not pivot:
            raise SingularSystemError(f"zero pivot at vertex {p}")
        for r in prow:
            if r == p:
                continue
            rrow = rows[r]
            a = rrow.pop(p, None)
            if a is None:
                continue
            factor = a / pivot
            for c, val in prow.items():
                if c == p:
                    continue
                new = rrow.get(c, 0) - factor * val
                if new:
                    rrow[c] = new
                else:
                    rrow.pop(c, None)
            rhs[r] -= factor * pb
        eliminated.append((p, prow, pb))

    x: dict[int, Fraction] = {}
    for p, prow, pb in reversed(eliminated):
        acc = pb
        for c, val in prow.items():
            if c != p:
                acc -= val * x[c]
        x[p] = acc / prow[p]
    return x


def _solve_float(g: Graph, target: int, comp: set[int]) -> dict[int, float]:
    idx = sorted(v for v in comp if v != target)
    if not idx:
        return {}
    pos = {v: i for i, v in enumerate(idx)}
    size = len(idx)
    a = np.zeros((size, size))
    b = np.empty(size)
    for v, i in pos.items():
        deg = len(g.adjacency[v])
        a[i, i] = deg
        b[i] = deg
        for k in g.adjacency[v]:
            if k != target:
                a[i, pos[k]] -= 1.0
    try:
        sol = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(str(exc)) from exc
    return {v: float(sol[i]) for v, i in pos.items()}


def hitting_times_to(g: Graph, target: int, backend=Backend.EXACT, *,
                     order: Sequence[int] | None = None) -> HittingVector:
    """Hitting times from every vertex to ``target``.

    ``order`` fixes the exact backend's pivot sequence (any permutation of
    the non-target vertices of the component); by default a minimum-degree
    ordering is used. Vertices outside the target's component get
    :data:`UNREACHABLE`.
    """
    backend = _as_backend(backend)
    g.check_vertex(target)
    comp = component_of(g, target)
    if backend is Backend.EXACT:
        sol = _solve_exact(g, target, comp, order)
        zero = Fraction(0)
    else:
        sol = _solve_float(g, target, comp)
        zero = 0.0
        bound = 1e-9 * max(g.n, 1)
        worst = residual(g, target, {**sol, target: zero})
        if worst > bound:
            raise SingularSystemError(f"float residual {worst:.3g} exceeds {bound:.3g}")
    values = []
    for i in range(g.n):
        if i == target:
            values.append(zero)
        elif i in comp:
            values.append(sol[i])
        else:
            values.append(UNREACHABLE)
    return HittingVector(target=target, values=tuple(values), backend=backend)


def residual(g: Graph, target: int, values) -> float:
    """Largest absolute violation of the one-step equations over ``values``.

    ``values`` maps (or indexes) vertex -> hitting time; unreachable vertices
    and the target row are skipped.
    """
    worst = 0.0
    get = values.get if isinstance(values, dict) else values.__getitem__
    for i in (values.keys() if isinstance(values, dict) else range(g.n)):
        if i == target:
            continue
        hi = get(i)
        if hi is UNREACHABLE:
            continue
        nbrs = g.adjacency[i]
        err = abs(hi - 1 - sum(get(k) for k in nbrs) / len(nbrs))
        worst = max(worst, float(err))
    return worst


def hitting_time(g: Graph, source: int, target: int, backend=Backend.EXACT) -> Value:
    g.check_vertex(source)
    return hitting_times_to(g, target, backend)[source]


def all_pairs(g: Graph, backend=Backend.EXACT, targets: Iterable[int] | None = None) -> list[HittingVector]:
    """One :class:`HittingVector` per target; ``result[j][i]`` is ``h(i -> j)``."""
    return [hitting_times_to(g, j, backend) for j in (range(g.n) if targets is None else targets)]


def expected_return_time(g: Graph, v: int) -> Fraction:
    """Mean first-return time to ``v``: ``2m / deg(v)``."""
    deg = g.degree(v)
    if deg == 0:
        raise ValueError(f"vertex {v} is isolated")
    if not is_connected(g):
        raise ValueError("graph is not connected")
    return Fraction(2 * g.m, deg)


def return_time_from_neighbors(g: Graph, v: int) -> Fraction:
    """``1 + mean(h(k -> v))`` over neighbors ``k``, solved exactly."""
    deg = g.degree(v)
    if deg == 0:
        raise ValueError(f"vertex {v} is isolated")
    hv = hitting_times_to(g, v, Backend.EXACT)
    return 1 + sum(hv[k] for k in g.adjacency[v]) / Fraction(deg)
