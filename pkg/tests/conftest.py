import random
from fractions import Fraction

import pytest
import sympy

from hitwalk import build_graph, generate
from hitwalk.families import TreeFromParents

_ACCEPTANCE_LINES = []


def random_tree(seed, n):
    """Uniform-attachment tree on n vertices with shuffled labels."""
    rng = random.Random(seed)
    parents = [-1] + [rng.randrange(i) for i in range(1, n)]
    base = generate(TreeFromParents(parents))
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph([(perm[u], perm[v]) for u, v in base.edges()], n)


def random_connected_graph(seed, n, p=0.15):
    rng = random.Random(seed)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return build_graph(sorted(edges), n)


def sympy_hitting_times(g, target):
    """Independent oracle: solve (I - P) h = 1 on the non-target vertices
    with sympy's rational LU. Assumes g is connected."""
    idx = [v for v in range(g.n) if v != target]
    pos = {v: i for i, v in enumerate(idx)}
    a = sympy.zeros(len(idx), len(idx))
    b = sympy.ones(len(idx), 1)
    for v, i in pos.items():
        a[i, i] = 1
        deg = len(g.adjacency[v])
        for k in g.adjacency[v]:
            if k != target:
                a[i, pos[k]] -= sympy.Rational(1, deg)
    sol = a.LUsolve(b) if idx else []
    out = [Fraction(0)] * g.n
    for v, i in pos.items():
        r = sympy.Rational(sol[i])
        out[v] = Fraction(int(r.p), int(r.q))
    return out


@pytest.fixture
def acceptance_record():
    def record(criterion, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}".rstrip())
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
