"""Constructions for the (n, f, g) family and its complete-intersection pieces.

``lemma1_*`` build the configurations ``{c e_1..c e_n, d(e_i + e_n) : i in I}``
whose toric ideals are complete intersections.  ``build_family`` adds the
extra generator ``w_n`` that breaks this, and ``theorem4_system`` returns the
n + 1 binomials cutting out the variety.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from sympy import isprime

from .config import Binomial, ToricConfiguration


@dataclass(frozen=True)
class FamilyParameters:
    n: int
    f: int
    g: int

    def __post_init__(self):
        n, f, g = self.n, self.f, self.g
        if n < 3:
            raise ValueError(f"n must be >= 3 (got n={n})")
        if f < 1 or g < 1:
            raise ValueError("f and g must be positive integers")
        if gcd(f, g) != 1:
            raise ValueError(f"f and g must be coprime (gcd({f}, {g}) = {gcd(f, g)})")
        if not g < f:
            raise ValueError(f"need g < f (got f={f}, g={g})")
        if not (n - 1) * f <= n * g:
            raise ValueError(f"need (n-1)f <= ng (got {(n - 1) * f} > {n * g})")

    @property
    def c(self) -> int:
        return self.f * self.g

    @property
    def d(self) -> int:
        return self.f - self.g

    def conditions(self) -> dict[str, bool]:
        n, f, g = self.n, self.f, self.g
        return {
            "a: g < f": g < f,
            "a: (n-1)f <= ng": (n - 1) * f <= n * g,
            "b: f < 2g": f < 2 * g,
            "c: (n-2)f < (n-1)g": (n - 2) * f < (n - 1) * g,
            "gcd(f, g) = 1": gcd(f, g) == 1,
        }

    def to_json(self) -> dict:
        return {"n": self.n, "f": self.f, "g": self.g}


def is_admissible(n: int, f: int, g: int) -> bool:
    try:
        FamilyParameters(n, f, g)
    except ValueError:
        return False
    return True


def _check_indices(n: int, indices: Sequence[int]) -> tuple[int, ...]:
    idx = tuple(int(i) for i in indices)
    if not idx:
        raise ValueError("need at least one index")
    if len(set(idx)) != len(idx):
        raise ValueError("indices must be distinct")
    if len(idx) >= n:
        raise ValueError(f"at most n-1 = {n - 1} indices allowed")
    bad = [i for i in idx if not 1 <= i <= n - 1]
    if bad:
        # i = n would give w = 2d e_n, for which the intersection formula fails
        raise ValueError(f"indices must lie in 1..{n - 1}, got {bad}")
    return idx


def lemma1_configuration(n: int, c: int, d: int, indices: Sequence[int]) -> ToricConfiguration:
    """``{c e_1..c e_n} + {d(e_i + e_n) : i in indices}``, indices 1-based.

    The h-th extra generator is the variable ``y_h``.
    """
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive")
    idx = _check_indices(n, indices)
    rows = []
    for i in idx:
        row = [0] * n
        row[i - 1] = d
        row[n - 1] = d
        rows.append(tuple(row))
    return ToricConfiguration(n, c, tuple(rows))


def lemma1_ci_binomials(n: int, c: int, d: int, indices: Sequence[int]) -> list[Binomial]:
    """``y_h^(m/d) - x_{i_h}^(m/c) x_n^(m/c)`` with ``m = lcm(c, d)``."""
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive")
    idx = _check_indices(n, indices)
    k = len(idx)
    m = lcm(c, d)
    out = []
    for h, i in enumerate(idx):
        plus = [0] * (n + k)
        minus = [0] * (n + k)
        plus[n + h] = m // d
        minus[i - 1] = m // c
        minus[n - 1] = m // c
        out.append(Binomial(n, plus, minus).canonical())
    return out


def build_family(params: FamilyParameters) -> ToricConfiguration:
    n, f, g = params.n, params.f, params.g
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i] = f - g
        row[n - 1] = f - g
        rows.append(tuple(row))
    rows.append(tuple([g * g] * (n - 1) + [g * ((n - 1) * g - (n - 2) * f)]))
    return ToricConfiguration(n, f * g, tuple(rows))


@dataclass(frozen=True)
class PPowerRep:
    p: int
    alpha: int
    s: int
    t: int

    @property
    def power(self) -> int:
        return self.p**self.alpha


def p_power_rep(f: int, g: int, p: int) -> PPowerRep:
    """Smallest ``p**alpha`` of the form ``s f + t g`` with ``s, t >= 0``.

    For that alpha, ``t`` is the least nonnegative solution of
    ``t g = p**alpha (mod f)``, which also makes ``s`` as large as possible.
    """
    if gcd(f, g) != 1:
        raise ValueError("f and g must be coprime")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    ginv = pow(g, -1, f) if f > 1 else 0
    alpha = 0
    while True:
        P = p**alpha
        t = (P * ginv) % f if f > 1 else 0
        s, rem = divmod(P - t * g, f)
        if s >= 0 and rem == 0:
            return PPowerRep(p, alpha, s, t)
        alpha += 1


def extra_exponents(params: FamilyParameters, rep: PPowerRep) -> tuple[int, int, int]:
    """Exponents (A, B, C) of x_i (i<n), x_n and y_i (i<n) in the extra binomial."""
    n, f, g, s, t = params.n, params.f, params.g, rep.s, rep.t
    A = (s + 2 * t) * g - f * t
    B = ((n - 1) * s + n * t) * g - ((n - 2) * s + (n - 1) * t) * f
    C = t * g * (f - g)
    return A, B, C


def extra_binomial(params: FamilyParameters, p: int) -> Binomial:
    """``y_n^(p^alpha) - x_1^A..x_{n-1}^A x_n^B y_1^C..y_{n-1}^C``."""
    n = params.n
    rep = p_power_rep(params.f, params.g, p)
    A, B, C = extra_exponents(params, rep)
    if min(A, B, C) < 0:
        raise ArithmeticError(f"negative exponent in extra binomial: {(A, B, C)}")
    plus = [0] * (2 * n)
    plus[2 * n - 1] = rep.power
    minus = [A] * (n - 1) + [B] + [C] * (n - 1) + [0]
    return Binomial(n, plus, minus).canonical()


def theorem4_system(params: FamilyParameters, p: int, q: int) -> list[Binomial]:
    if p == q:
        raise ValueError("p and q must differ")
    n = params.n
    base = lemma1_ci_binomials(n, params.c, params.d, range(1, n))
    # pad to the family's 2n variables: y_n is the last one
    base = [Binomial(n, b.plus + (0,), b.minus + (0,)) for b in base]
    return base + [extra_binomial(params, p), extra_binomial(params, q)]


def proposition2_witness(params: FamilyParameters) -> Binomial:
    """``y_1^g .. y_{n-1}^g y_n - x_1 .. x_n``."""
    n, g = params.n, params.g
    plus = [0] * n + [g] * (n - 1) + [1]
    minus = [1] * n + [0] * n
    return Binomial(n, plus, minus).canonical()


@dataclass(frozen=True)
class Proposition2Report:
    params: FamilyParameters
    grading_bound: int
    min_y_power: int
    monic_exponents: tuple[int, ...]
    witness_in_ideal: bool
    generator_count: int
    complete_up_to_bound: bool
    bound_sufficient: bool

    @property
    def ok(self) -> bool:
        return (
            self.bound_sufficient
            and self.min_y_power > 1
            and bool(self.monic_exponents)
            and all(e > 1 for e in self.monic_exponents)
            and self.witness_in_ideal
            and self.generator_count > self.params.n
        )

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "grading_bound": self.grading_bound,
            "min_y_power": self.min_y_power,
            "monic_exponents": list(self.monic_exponents),
            "witness": str(proposition2_witness(self.params)),
            "witness_in_ideal": self.witness_in_ideal,
            "generator_count": self.generator_count,
            "complete_up_to_bound": self.complete_up_to_bound,
            "bound_sufficient": self.bound_sufficient,
            "ok": self.ok,
        }


def min_extra_power(params: FamilyParameters) -> int:
    """Least e with ``e * w_n`` in the semigroup of the remaining generators."""
    from .lattice import semigroup_membership

    gens = build_family(params).generators
    others, wn = gens[:-1], gens[-1]
    e = 1
    while semigroup_membership(tuple(e * x for x in wn), others) is None:
        e += 1
    return e


def default_proposition2_bound(params: FamilyParameters) -> int:
    wn = build_family(params).rows[-1]
    return max(min_extra_power(params) * sum(wn), params.n * params.c)


def proposition2_check(params: FamilyParameters, degree_bound: int | None = None) -> Proposition2Report:
    """Evidence that the family's toric ideal needs more than n generators.

    The minimal power of ``y_n`` expressible without ``y_n`` is found by
    exhaustive semigroup membership; independently, the degree-bounded Markov
    basis is scanned for binomials ``y_n^e - (monomial free of y_n)``.
    A bound below the degree of that binomial is reported as insufficient.
    """
    from .toric_ideal import binomial_in_ideal, markov_basis

    T = build_family(params)
    e_min = min_extra_power(params)
    needed = e_min * sum(T.rows[-1])
    bound = default_proposition2_bound(params) if degree_bound is None else degree_bound
    result = markov_basis(T, bound)
    last = T.num_vars - 1
    monic = []
    for b in result.binomials:
        for hi, lo in ((b.plus, b.minus), (b.minus, b.plus)):
            if hi[last] and not any(hi[:last]) and not lo[last]:
                monic.append(hi[last])
    return Proposition2Report(
        params=params,
        grading_bound=bound,
        min_y_power=e_min,
        monic_exponents=tuple(monic),
        witness_in_ideal=binomial_in_ideal(proposition2_witness(params), T),
        generator_count=result.count,
        complete_up_to_bound=result.complete_up_to_bound,
        bound_sufficient=bound >= needed,
    )
