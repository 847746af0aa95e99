"""Toric configurations and binomials, with their JSON shapes.

A configuration describes the simplicial toric variety

    x_j = u_j^c            (j = 1..n)
    y_i = u^{a_i}          (i = 1..r)

through the generator list ``T = (c e_1, ..., c e_n, a_1, ..., a_r)``.
Variables are ordered ``x1..xn, y1..yr`` everywhere; exponent vectors of
binomials are aligned with that order, so they are coefficient vectors over
``T`` as well.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .lattice import Vector, combine


@dataclass(frozen=True)
class ToricConfiguration:
    n: int
    c: int
    rows: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.c < 1:
            raise ValueError("c must be a positive integer")
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError(f"row {list(r)} does not have length n={self.n}")
            if any(x < 0 for x in r) or not any(r):
                raise ValueError(f"row {list(r)} must be a nonzero vector in N^n")
        gens = self.generators
        if len(set(gens)) != len(gens):
            raise ValueError("configuration contains duplicate generators")

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.r

    @property
    def num_vars(self) -> int:
        return self.n + self.r

    @property
    def generators(self) -> tuple[Vector, ...]:
        vs = tuple(tuple(self.c if j == i else 0 for j in range(self.n)) for i in range(self.n))
        return vs + self.rows

    def variable_names(self) -> list[str]:
        return variable_names(self.n, self.r)

    def degree_map(self, z: Sequence[int]) -> Vector:
        """Image of an exponent vector under the configuration matrix."""
        if len(z) != self.num_vars:
            raise ValueError(f"exponent vector of length {len(z)}, expected {self.num_vars}")
        return combine(z, self.generators, self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "c": self.c, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ToricConfiguration":
        try:
            return cls(int(data["n"]), int(data["c"]), tuple(tuple(r) for r in data["rows"]))
        except KeyError as e:
            raise ValueError(f"configuration is missing key {e}") from None


def variable_names(n: int, r: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(r)]


def _lex_key(e: Sequence[int]) -> tuple:
    # x1 < ... < xn < y1 < ... < yr; the largest variable is compared first
    return tuple(reversed(e))


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus`` over the variables ``x1..xn, y1..yr``."""

    n: int
    plus: Vector
    minus: Vector

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(int(x) for x in self.plus))
        object.__setattr__(self, "minus", tuple(int(x) for x in self.minus))
        if len(self.plus) != len(self.minus):
            raise ValueError("monomials of a binomial must have the same arity")
        if not 0 <= self.n <= len(self.plus):
            raise ValueError("bad number of x variables")
        if any(x < 0 for x in self.plus + self.minus):
            raise ValueError("exponents must be nonnegative")
        if self.plus == self.minus:
            raise ValueError("a binomial needs two distinct monomials")

    @property
    def r(self) -> int:
        return len(self.plus) - self.n

    @property
    def num_vars(self) -> int:
        return len(self.plus)

    @property
    def move(self) -> Vector:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def canonical(self) -> "Binomial":
        if _lex_key(self.plus) >= _lex_key(self.minus):
            return self
        return Binomial(self.n, self.minus, self.plus)

    def is_canonical(self) -> bool:
        return self.canonical() is self

    def __str__(self) -> str:
        names = variable_names(self.n, self.r)
        return f"{format_monomial(self.plus, names)} - {format_monomial(self.minus, names)}"

    def to_json(self) -> dict:
        names = variable_names(self.n, self.r)
        return {
            "plus": {v: e for v, e in zip(names, self.plus) if e},
            "minus": {v: e for v, e in zip(names, self.minus) if e},
        }

    @classmethod
    def from_json(cls, data: Mapping, n: int, r: int) -> "Binomial":
        names = variable_names(n, r)
        index = {v: i for i, v in enumerate(names)}

        def side(m):
            e = [0] * (n + r)
            for v, k in m.items():
                if v not in index:
                    raise ValueError(f"unknown variable {v!r} for n={n}, r={r}")
                e[index[v]] = int(k)
            return e

        return cls(n, side(data["plus"]), side(data["minus"]))


def format_monomial(e: Sequence[int], names: Sequence[str]) -> str:
    parts = [v if k == 1 else f"{v}^{k}" for v, k in zip(names, e) if k]
    return "*".join(parts) if parts else "1"


_TERM = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


def parse_binomial(text: str, n: int, r: int) -> Binomial:
    """Parse the ASCII form ``y3^2 - x1*x2*y1^2*y2^2``."""
    try:
        lhs, rhs = text.split(" - ")
    except ValueError:
        raise ValueError(f"cannot parse binomial {text!r}") from None

    def side(s):
        e = [0] * (n + r)
        s = s.strip()
        if s == "1":
            return e
        for tok in s.split("*"):
            m = _TERM.match(tok.strip())
            if not m:
                raise ValueError(f"bad term {tok!r}")
            kind, idx, k = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            pos = idx - 1 if kind == "x" else n + idx - 1
            if not (1 <= idx <= (n if kind == "x" else r)):
                raise ValueError(f"variable {tok!r} out of range")
            e[pos] += k
        return e

    return Binomial(n, side(lhs), side(rhs))


def binomial_from_relation(n: int, lhs: Sequence[int], rhs: Sequence[int]) -> Binomial:
    """Binomial of a semigroup relation sum lhs_j T_j = sum rhs_j T_j, canonically oriented."""
    return Binomial(n, lhs, rhs).canonical()
