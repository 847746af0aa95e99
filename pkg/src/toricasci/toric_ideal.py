"""Toric ideals through their fibers.

A binomial ``x^u - x^v`` lies in I(V) iff ``A u = A v`` for the configuration
matrix ``A``.  The set of all ``z >= 0`` with ``A z = b`` is the fiber of
``b``.  A set of binomials generates I(V) iff, in every fiber, the graph
whose edges are the moves ``+-(u - v)`` is connected; :func:`markov_basis`
builds such a set degree by degree, adding a binomial only when a fiber is
still disconnected by the lower-degree ones.  The result is minimal, so its
size below the bound is a lower bound on the number of generators.
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .config import Binomial, ToricConfiguration
from .lattice import Vector

logger = logging.getLogger(__name__)

TOP_FRACTION = 0.2


def binomial_in_ideal(b: Binomial, T: ToricConfiguration) -> bool:
    if b.num_vars != T.num_vars or b.n != T.n:
        raise ValueError(f"binomial over {b.n}+{b.r} variables, configuration has {T.n}+{T.r}")
    return T.degree_map(b.plus) == T.degree_map(b.minus)


@dataclass(frozen=True)
class Fiber:
    degree: Vector
    points: tuple[Vector, ...]

    def __len__(self):
        return len(self.points)


def enumerate_fiber(T: ToricConfiguration, b: Sequence[int]) -> Fiber:
    """All nonnegative exponent vectors z with ``A z = b``, sorted."""
    b = tuple(int(x) for x in b)
    if len(b) != T.n:
        raise ValueError(f"degree of length {len(b)}, expected {T.n}")
    if any(x < 0 for x in b):
        raise ValueError("fiber degree must lie in N^n")
    gens = T.generators
    N = len(gens)
    supports = [[j for j in range(T.n) if g[j]] for g in gens]
    points = []
    z = [0] * N

    def rec(i, res):
        if i == N:
            if not any(res):
                points.append(tuple(z))
            return
        g = gens[i]
        kmax = min(res[j] // g[j] for j in supports[i])
        for k in range(kmax + 1):
            z[i] = k
            rec(i + 1, tuple(r - k * x for r, x in zip(res, g)) if k else res)
        z[i] = 0

    rec(0, b)
    return Fiber(b, tuple(sorted(points)))


def _exponents_up_to(weights: Sequence[int], bound: int) -> np.ndarray:
    """All z >= 0 with ``sum(weights * z) <= bound``, one per row."""
    Z = np.zeros((1, 0), dtype=np.int64)
    deg = np.zeros(1, dtype=np.int64)
    for wt in weights:
        reps = (bound - deg) // wt + 1
        idx = np.repeat(np.arange(len(deg)), reps)
        # position of each new row within its block gives the new exponent
        starts = np.cumsum(reps) - reps
        k = np.arange(len(idx)) - np.repeat(starts, reps)
        Z = np.hstack([Z[idx], k[:, None]])
        deg = deg[idx] + k * wt
    return Z


def _grouped_exponents(T: ToricConfiguration, grading_bound: int):
    gens = T.generators
    if grading_bound * max(max(g) for g in gens) >= 2**62:
        raise OverflowError("grading bound too large for the vectorized enumeration")
    Z = _exponents_up_to([sum(g) for g in gens], grading_bound)
    B = Z @ np.array(gens, dtype=np.int64)
    keys, inverse, counts = np.unique(B, axis=0, return_inverse=True, return_counts=True)
    order = np.argsort(inverse.reshape(-1), kind="stable")
    starts = np.concatenate([[0], np.cumsum(counts)[:-1]])
    return Z[order], keys, starts, counts


def _fibers_from_groups(Zs, keys, starts, counts, selected) -> list[Fiber]:
    out = []
    for g in selected:
        rows = Zs[starts[g]:starts[g] + counts[g]].tolist()
        out.append(Fiber(tuple(keys[g].tolist()), tuple(sorted(map(tuple, rows)))))
    out.sort(key=lambda f: (sum(f.degree), f.degree))
    return out


def iter_fibers(T: ToricConfiguration, grading_bound: int, min_points: int = 1) -> list[Fiber]:
    """Every fiber whose degree has coordinate sum <= ``grading_bound``.

    Ordered by total degree, then lexicographically by degree; points inside
    a fiber are sorted lexicographically.  Fibers with fewer than
    ``min_points`` points are skipped.
    """
    Zs, keys, starts, counts = _grouped_exponents(T, grading_bound)
    return _fibers_from_groups(Zs, keys, starts, counts, np.nonzero(counts >= min_points)[0])


def _possibly_disconnected_fibers(T: ToricConfiguration, grading_bound: int) -> list[Fiber]:
    # a variable used by every point of a fiber already connects it
    Zs, keys, starts, counts = _grouped_exponents(T, grading_bound)
    N = Zs.shape[1]
    masks = (Zs > 0).astype(np.int64) @ (np.int64(1) << np.arange(N, dtype=np.int64))
    common = np.bitwise_and.reduceat(masks, starts)
    return _fibers_from_groups(Zs, keys, starts, counts, np.nonzero((counts >= 2) & (common == 0))[0])


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller index as root: roots are lex-smallest points
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class _Move:
    __slots__ = ("plus", "minus", "sides", "degree")

    def __init__(self, plus: Vector, minus: Vector, degree: Vector):
        self.plus, self.minus, self.degree = plus, minus, degree
        ps = tuple((j, e) for j, e in enumerate(plus) if e)
        ms = tuple((j, e) for j, e in enumerate(minus) if e)
        self.sides = ((ps, ms), (ms, ps))

    def applies_to(self, b: Vector) -> bool:
        return all(x <= y for x, y in zip(self.degree, b))


def _components(points: Sequence[Vector], moves: Sequence[_Move]) -> list[list[int]]:
    index = {z: i for i, z in enumerate(points)}
    dsu = _DSU(len(points))
    for i, z in enumerate(points):
        for mv in moves:
            for take, give in mv.sides:
                if all(z[j] >= e for j, e in take):
                    y = list(z)
                    for j, e in take:
                        y[j] -= e
                    for j, e in give:
                        y[j] += e
                    k = index.get(tuple(y))
                    if k is not None:
                        dsu.union(i, k)
    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(len(points)):
        groups[dsu.find(i)].append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def _support_components(points: Sequence[Vector]) -> list[list[int]]:
    # valid only when every lower-degree fiber is already connected: then two
    # points are joined by lower moves iff their supports meet
    dsu = _DSU(len(points))
    first: dict[int, int] = {}
    for i, z in enumerate(points):
        for j, e in enumerate(z):
            if e:
                if j in first:
                    dsu.union(first[j], i)
                else:
                    first[j] = i
    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(len(points)):
        groups[dsu.find(i)].append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def _moves_for(T: ToricConfiguration, binomials: Iterable[Binomial]) -> list[_Move]:
    return [_Move(b.plus, b.minus, T.degree_map(b.plus)) for b in binomials]


@dataclass(frozen=True)
class MarkovBasisResult:
    binomials: tuple[Binomial, ...]
    degree_bound_used: int
    complete_up_to_bound: bool
    degrees: tuple[int, ...] = ()

    @property
    def count(self) -> int:
        return len(self.binomials)

    def to_json(self) -> dict:
        return {
            "binomials": [b.to_json() for b in self.binomials],
            "equations": [str(b) for b in self.binomials],
            "degrees": list(self.degrees),
            "count": self.count,
            "degree_bound_used": self.degree_bound_used,
            "complete_up_to_bound": self.complete_up_to_bound,
        }


def _stable_levels(bound: int) -> int:
    return max(1, math.ceil(TOP_FRACTION * bound))


def markov_basis(T: ToricConfiguration, grading_bound: int) -> MarkovBasisResult:
    """Minimal binomial generators of I(V) of degree at most ``grading_bound``.

    Fibers are visited by increasing total degree, lexicographically within a
    degree.  Each fiber that is disconnected by the binomials of lower degree
    contributes one binomial per extra component, joining the lex-smallest
    point of that component to the lex-smallest point of the fiber.
    """
    if grading_bound <= 0:
        raise ValueError("grading bound must be positive")
    found: list[Binomial] = []
    degrees: list[int] = []
    for fiber in _possibly_disconnected_fibers(T, grading_bound):
        pts = fiber.points
        comps = _support_components(pts)
        if len(comps) == 1:
            continue
        anchor = pts[comps[0][0]]
        for comp in comps[1:]:
            found.append(Binomial(T.n, pts[comp[0]], anchor).canonical())
            degrees.append(sum(fiber.degree))
    quiet_from = grading_bound - _stable_levels(grading_bound) + 1
    complete = all(d < quiet_from for d in degrees)
    if not complete:
        logger.info(
            "Markov basis still growing near grading bound %d (generator at degree %d)",
            grading_bound,
            max(degrees),
        )
    return MarkovBasisResult(tuple(found), grading_bound, complete, tuple(degrees))


def minimal_generator_count(T: ToricConfiguration, grading_bound: int) -> tuple[int, bool]:
    """Number of minimal binomial generators up to the bound, and the completeness flag.

    Generators found below the bound are forced: each comes from a fiber that
    the strictly lower-degree binomials leave disconnected.
    """
    res = markov_basis(T, grading_bound)
    return res.count, res.complete_up_to_bound


def moves_connect_fibers(T: ToricConfiguration, binomials: Sequence[Binomial], grading_bound: int) -> bool:
    """Check that ``binomials`` connect every fiber up to the bound."""
    moves = _moves_for(T, binomials)
    return all(
        len(_components(f.points, [m for m in moves if m.applies_to(f.degree)])) == 1
        for f in iter_fibers(T, grading_bound, min_points=2)
    )


def same_up_to_orientation(a: Iterable[Binomial], b: Iterable[Binomial]) -> bool:
    return {x.canonical() for x in a} == {y.canonical() for y in b}
