"""Seeded random-walk simulation of hitting and return times.

Walk ``i`` draws from its own SplitMix64 stream seeded with
``walk_seed(cfg.seed, i)`` (see :mod:`hitwalk.rng`), and every step consumes
exactly one ``below(deg)`` draw, so a walk's length depends only on the
graph, its endpoints, the master seed and its index. Aggregation uses
integer sums of lengths and squared lengths, which makes the estimate
independent of the order in which walks are run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, component_of
from .rng import GOLDEN_GAMMA, MASK64, walk_seed

DEFAULT_MAX_STEPS = 10_000_000


class SimulationError(RuntimeError):
    pass


class UnreachableTargetError(SimulationError):
    pass


class AllWalksTruncatedError(SimulationError):
    pass


@dataclass(frozen=True)
class WalkConfig:
    seed: int = 0
    trials: int = 10_000
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.max_steps < 1:
            raise ValueError(f"max_steps must be >= 1, got {self.max_steps}")


@dataclass(frozen=True)
class WalkEstimate:
    mean: float
    std_error: float
    trials_completed: int
    truncated: int

    @property
    def valid(self) -> bool:
        return self.truncated == 0


def _walk(adj, start: int, target: int, state: int, max_steps: int, first_step: bool) -> int | None:
    """Steps until ``target`` is reached, or ``None`` after ``max_steps``.

    With ``first_step`` the walk is forced to move once before checking for
    the target (first-return times).
    """
    v = start
    steps = 0
    while first_step or v != target:
        first_step = False
        if steps >= max_steps:
            return None
        nbrs = adj[v]
        n = len(nbrs)
        threshold = (MASK64 + 1 - n) % n
        # inlined SplitMix64.below
        while True:
            state = (state + GOLDEN_GAMMA) & MASK64
            z = ((state ^ (state >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
            z ^= z >> 31
            if z >= threshold:
                break
        v = nbrs[z % n]
        steps += 1
    return steps


def walk_lengths(g: Graph, source: int, target: int, cfg: WalkConfig,
                 indices: Iterable[int] | None = None, *, return_walk: bool = False) -> list[int | None]:
    """Lengths of the walks with the given indices (``None`` if truncated)."""
    adj = g.adjacency
    if indices is None:
        indices = range(cfg.trials)
    return [_walk(adj, source, target, walk_seed(cfg.seed, i), cfg.max_steps, return_walk)
            for i in indices]


def _estimate(lengths: list[int | None]) -> WalkEstimate:
    done = [x for x in lengths if x is not None]
    truncated = len(lengths) - len(done)
    if not done:
        raise AllWalksTruncatedError(f"all {len(lengths)} walks hit the step cap")
    n = len(done)
    total = sum(done)
    total_sq = sum(x * x for x in done)
    if n > 1:
        # exact integer numerator keeps the result order-independent
        var = (n * total_sq - total * total) / (n * (n - 1))
        std_error = math.sqrt(var / n)
    else:
        std_error = 0.0
    return WalkEstimate(mean=total / n, std_error=std_error, trials_completed=n, truncated=truncated)


def simulate_hitting_time(g: Graph, source: int, target: int, cfg: WalkConfig) -> WalkEstimate:
    g.check_vertex(source)
    g.check_vertex(target)
    if source not in component_of(g, target):
        raise UnreachableTargetError(f"vertex {target} is not reachable from {source}")
    if source == target:
        return WalkEstimate(mean=0.0, std_error=0.0, trials_completed=cfg.trials, truncated=0)
    return _estimate(walk_lengths(g, source, target, cfg))


def simulate_return_time(g: Graph, v: int, cfg: WalkConfig) -> WalkEstimate:
    if g.degree(v) == 0:
        raise UnreachableTargetError(f"vertex {v} is isolated; the walk cannot leave it")
    return _estimate(walk_lengths(g, v, v, cfg, return_walk=True))
