"""Evaluation-based checks of set-theoretic claims.

The main oracle is exhaustive: the common zeros of a binomial system over
the prime field F_l are listed point by point and compared between systems.
This is verification at desk scale, not proof; characteristic-zero evidence
comes from sampling the parametrization over the integers and re-checking
liftable finite-field zeros exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import isprime

from .config import Binomial, ToricConfiguration

DEFAULT_POINT_CAP = 10**8
MAX_WITNESSES = 5


class ResourceCapError(RuntimeError):
    pass


def _monomial(e: Sequence[int], point: Sequence[int], modulus: int) -> int:
    if modulus:
        v = 1
        for x, k in zip(point, e):
            if k:
                v = v * pow(x, k, modulus) % modulus
        return v
    v = 1
    for x, k in zip(point, e):
        if k:
            v *= x**k
    return v


def evaluate_binomial(b: Binomial, point: Sequence[int], modulus: int = 0) -> int:
    """Value of ``b`` at ``point``; residue mod ``modulus``, or exact when 0."""
    if len(point) != b.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, binomial has {b.num_vars} variables")
    point = [int(x) for x in point]
    v = _monomial(b.plus, point, modulus) - _monomial(b.minus, point, modulus)
    return v % modulus if modulus else v


def parametrization_points(
    T: ToricConfiguration, u_samples: Iterable[Sequence[int]], modulus: int = 0
) -> list[tuple[int, ...]]:
    """Images ``(u_j^c ..., u^{a_i} ...)`` of the sample parameters."""
    out = []
    gens = T.generators
    for u in u_samples:
        if len(u) != T.n:
            raise ValueError(f"parameter tuple of length {len(u)}, expected {T.n}")
        out.append(tuple(_monomial(g, u, modulus) for g in gens))
    return out


def binomial_power(F: Binomial, h: int) -> Binomial:
    """``M^h - N^h`` for ``F = M - N``."""
    if h < 1:
        raise ValueError("power must be a positive integer")
    return Binomial(F.n, tuple(h * e for e in F.plus), tuple(h * e for e in F.minus))


def power_recursion_holds(F: Binomial, h: int, point: Sequence[int]) -> bool:
    """Check ``F^(h+1) = M F^(h) + F N^h`` at ``point`` over the integers."""
    M = _monomial(F.plus, point, 0)
    N = _monomial(F.minus, point, 0)
    lhs = evaluate_binomial(binomial_power(F, h + 1), point)
    rhs = M * evaluate_binomial(binomial_power(F, h), point) + evaluate_binomial(F, point) * N**h
    return lhs == rhs


def _num_vars(system: Sequence[Binomial], num_vars: Optional[int]) -> int:
    sizes = {b.num_vars for b in system}
    if num_vars is not None:
        sizes.add(num_vars)
    if len(sizes) != 1:
        raise ValueError("cannot determine a common number of variables")
    return sizes.pop()


def vanishing_set(
    system: Sequence[Binomial],
    l: int,
    num_vars: Optional[int] = None,
    cap: int = DEFAULT_POINT_CAP,
) -> frozenset[tuple[int, ...]]:
    """All points of F_l^N where every binomial of ``system`` vanishes.

    The space is split into shards by the leading coordinate, each shard
    evaluated as one numpy batch through per-exponent power tables.
    """
    if not isprime(l):
        raise ValueError(f"{l} is not prime")
    N = _num_vars(system, num_vars)
    if l**N > cap:
        raise ResourceCapError(f"{l}^{N} points exceed the cap of {cap}")
    if N == 0:
        return frozenset({()})
    vals = np.arange(l, dtype=np.int64)
    tables: dict[int, np.ndarray] = {}

    def table(k):
        if k not in tables:
            tables[k] = np.array([pow(int(v), k, l) for v in vals], dtype=np.int64)
        return tables[k]

    rest = N - 1
    size = l**rest
    flat = np.arange(size, dtype=np.int64)
    tail = np.empty((size, rest), dtype=np.int64)
    for j in range(rest - 1, -1, -1):
        flat, tail[:, j] = np.divmod(flat, l)

    out: set[tuple[int, ...]] = set()
    for lead in range(l):
        cols = [np.full(size, lead, dtype=np.int64)] + [tail[:, j] for j in range(rest)]
        mask = np.ones(size, dtype=bool)
        for b in system:
            sides = []
            for e in (b.plus, b.minus):
                v = np.ones(size, dtype=np.int64)
                for j, k in enumerate(e):
                    if k:
                        v = v * table(k)[cols[j]] % l
                sides.append(v)
            mask &= sides[0] == sides[1]
        for i in np.nonzero(mask)[0]:
            out.add((lead,) + tuple(int(x) for x in tail[i]))
    return frozenset(out)


@dataclass(frozen=True)
class VerificationReport:
    field_prime: int
    system_a_size: int
    system_b_size: int
    equal: bool
    witnesses: tuple[tuple[str, tuple[int, ...]], ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "field_prime": self.field_prime,
            "system_a_size": self.system_a_size,
            "system_b_size": self.system_b_size,
            "equal": self.equal,
            "witnesses": [{"only_in": side, "point": list(pt)} for side, pt in self.witnesses],
        }


def compare_systems(
    A: Sequence[Binomial],
    B: Sequence[Binomial],
    primes: Sequence[int],
    num_vars: Optional[int] = None,
    cap: int = DEFAULT_POINT_CAP,
) -> list[VerificationReport]:
    N = _num_vars(list(A) + list(B), num_vars)
    reports = []
    for l in primes:
        za = vanishing_set(A, l, N, cap)
        zb = vanishing_set(B, l, N, cap)
        diff = sorted([("A", p) for p in za - zb] + [("B", p) for p in zb - za], key=lambda t: t[1])
        reports.append(VerificationReport(l, len(za), len(zb), not diff, tuple(diff[:MAX_WITNESSES])))
    return reports


def rational_inclusion_check(T: ToricConfiguration, system: Sequence[Binomial], radius: int = 3) -> bool:
    """Every binomial of ``system`` vanishes on the integer points ``phi(u)``, ``u`` in ``[-r, r]^n``."""
    samples = itertools.product(range(-radius, radius + 1), repeat=T.n)
    pts = parametrization_points(T, samples)
    return all(evaluate_binomial(b, p) == 0 for p in pts for b in system)


def lifted_zero_check(
    A: Sequence[Binomial], B: Sequence[Binomial], l: int = 5, num_vars: Optional[int] = None
) -> tuple[int, int]:
    """Lift F_l zeros of ``A`` to symmetric integer residues and test ``B`` there.

    Returns ``(liftable, agreeing)``: how many lifted points are integer zeros
    of ``A``, and at how many of those every binomial of ``B`` also vanishes.
    """
    N = _num_vars(list(A) + list(B), num_vars)
    liftable = agreeing = 0
    for pt in vanishing_set(A, l, N):
        z = [x - l if x > l // 2 else x for x in pt]
        if all(evaluate_binomial(b, z) == 0 for b in A):
            liftable += 1
            if all(evaluate_binomial(b, z) == 0 for b in B):
                agreeing += 1
    return liftable, agreeing
