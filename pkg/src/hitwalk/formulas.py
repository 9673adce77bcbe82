"""Closed-form hitting times for symmetric families, trees, tadpoles and
complete d-ary trees.

All results are exact (``int`` or :class:`fractions.Fraction`). Vertex
roles follow the labelings documented in :mod:`hitwalk.families`.
"""

from __future__ import annotations

from fractions import Fraction

from .families import Tadpole, dary_depth, dary_parent, dary_size
from .graph import Graph, is_connected


class FormulaDomainError(ValueError):
    pass


class NotATreeError(FormulaDomainError):
    pass


class NotAdjacentError(FormulaDomainError):
    pass


def _check_int(name: str, value, low: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < low:
        raise FormulaDomainError(f"{name} must be an integer >= {low}, got {value!r}")


def symmetric_neighbor_ht(e: int, k: int) -> Fraction:
    """Time from a neighbor of ``v`` to ``v`` when all of ``v``'s ``k``
    neighbors are equivalent under automorphisms: ``2e/k - 1``.

    The symmetry hypothesis is the caller's responsibility.
    """
    _check_int("e", e, 1)
    _check_int("k", k, 1)
    return Fraction(2 * e, k) - 1


def grid_corner_ht(d: int, m: int) -> int:
    """Neighbor of a corner to the corner in the ``d``-dimensional grid of
    side ``m``."""
    _check_int("d", d, 1)
    _check_int("m", m, 2)
    return 2 * (m - 1) * m ** (d - 1) - 1


def hypercube_neighbor_ht(d: int) -> int:
    _check_int("d", d, 1)
    return 2 ** d - 1


def tree_neighbor_ht(tree: Graph, v: int, u: int) -> int:
    """Hitting time from ``v`` to its neighbor ``u`` in a tree.

    Equals ``2n - 1`` where ``n`` counts the vertices left on ``v``'s side
    once edge ``(u, v)`` is cut.
    """
    if tree.n == 0 or tree.m != tree.n - 1 or not is_connected(tree):
        raise NotATreeError("input graph is not a tree")
    if not tree.has_edge(u, v):
        raise NotAdjacentError(f"vertices {v} and {u} are not adjacent")
    seen = {v, u}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in tree.adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return 2 * (len(seen) - 1) - 1


def tadpole_end_ht(k: int, l: int) -> int:  # noqa: E741
    """Tail end's neighbor to the tail end of ``Tadpole(k, l)``."""
    _check_int("k", k, 3)
    _check_int("l", l, 1)
    return 2 * k + 2 * l - 1


def tadpole_ht_to_end(k: int, l: int, w: int) -> int:  # noqa: E741
    """Hitting time from any vertex ``w`` of ``Tadpole(k, l)`` to the tail end.

    Tail vertices (and the junction) follow ``t*H - t*(t-1)`` with ``t`` the
    distance to the end and ``H = tadpole_end_ht(k, l)``. On the cycle the
    values fall off quadratically from the vertex (or pair of vertices)
    farthest from the junction: ``top - s**2`` for even ``k`` and
    ``top - s*(s+1)`` for odd ``k``, where ``s`` is the distance to that
    farthest position and ``top`` is pinned by the junction value.
    """
    big_h = tadpole_end_ht(k, l)
    spec = Tadpole(k, l)
    if not isinstance(w, int) or not 0 <= w < k + l:
        raise FormulaDomainError(f"vertex {w!r} out of range for Tadpole({k}, {l})")

    def along_tail(t: int) -> int:
        return t * big_h - t * (t - 1)

    if w >= k:
        return along_tail(spec.end - w)
    junction = along_tail(l)
    from_junction = min(w, k - w)
    half = k // 2
    if k % 2 == 0:
        top = junction + half * half
        s = half - from_junction
        return top - s * s
    top = junction + half * (half + 1)
    s = half - from_junction
    return top - s * (s + 1)


def dary_f(n: int, d: int) -> int:
    """``f_n(d) = sum_{i<n} (2n - 2i) d**i - n``, with ``f_0 = 0``."""
    _check_int("n", n, 0)
    _check_int("d", d, 2)
    if n == 0:
        return 0
    return sum((2 * n - 2 * i) * d ** i for i in range(n)) - n


def dary_g(k: int, m: int, d: int) -> int:
    """``g_{k,m}(d) = sum_{i<m} (2m - 2i) d**(k-i) - m``, with ``g_{k,0} = 0``.

    Only ``m <= k`` keeps the powers non-negative; larger ``m`` is rejected.
    """
    _check_int("k", k, 1)
    _check_int("m", m, 0)
    _check_int("d", d, 2)
    if m > k:
        raise FormulaDomainError(f"g needs m <= k, got k={k}, m={m}")
    if m == 0:
        return 0
    return sum((2 * m - 2 * i) * d ** (k - i) for i in range(m)) - m


def _check_dary(d: int, h: int, l: int) -> None:  # noqa: E741
    _check_int("d", d, 2)
    _check_int("h", h, 0)
    _check_int("l", l, 0)
    if l > h:
        raise FormulaDomainError(f"distance l={l} exceeds height h={h}")


def dary_to_root_ht(d: int, h: int, l: int) -> int:  # noqa: E741
    """Vertex at depth ``l`` to the root of the complete ``d``-ary tree of height ``h``."""
    _check_dary(d, h, l)
    return dary_f(h, d) - dary_f(h - l, d)


def dary_ancestor_to_leaf_ht(d: int, h: int, l: int) -> int:  # noqa: E741
    """Ancestor ``l`` levels above a leaf, to that leaf."""
    _check_dary(d, h, l)
    if l == 0:
        return 0
    return dary_g(h, h, d) - dary_g(h, h - l, d)


def _lca_depth(u: int, v: int, d: int) -> int:
    du, dv = dary_depth(u, d), dary_depth(v, d)
    while du > dv:
        u, du = dary_parent(u, d), du - 1
    while dv > du:
        v, dv = dary_parent(v, d), dv - 1
    while u != v:
        u, v = dary_parent(u, d), dary_parent(v, d)
        du -= 1
    return du


def dary_ht(d: int, h: int, u: int, v: int) -> int:
    """Hitting time from ``u`` to ``v`` in the level-ordered complete ``d``-ary tree.

    With depths ``u'``, ``v'`` and least-common-ancestor depth ``c'``:
    ``f_{h-c'} - f_{h-u'} + g_{h,v'} - g_{h,c'}``.
    """
    _check_int("d", d, 2)
    _check_int("h", h, 0)
    n = dary_size(d, h)
    for name, x in (("u", u), ("v", v)):
        if not isinstance(x, int) or not 0 <= x < n:
            raise FormulaDomainError(f"{name}={x!r} out of range for a tree with {n} vertices")
    if u == v:
        return 0
    du, dv = dary_depth(u, d), dary_depth(v, d)
    dc = _lca_depth(u, v, d)
    return dary_f(h - dc, d) - dary_f(h - du, d) + dary_g(h, dv, d) - dary_g(h, dc, d)
