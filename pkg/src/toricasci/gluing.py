"""Gluing and p-gluing of affine semigroups, with checkable certificates.

A bipartition ``T = T1 | T2`` is a gluing when ``ZT1 & ZT2 = Zw`` for some
nonzero ``w`` lying in ``NT1 & NT2``.  It is a p-gluing when only some
``p**alpha * w`` is required to lie in both semigroups.  A semigroup is
completely (p-)glued when it splits recursively down to free pieces; the
recursion is recorded as a :class:`GluingTree` whose internal nodes each
yield one binomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from sympy import isprime

from .config import Binomial, ToricConfiguration
from .lattice import (
    Vector,
    combine,
    hermite_basis,
    is_cyclic_generated_by,
    lattice_intersection,
    rational_rank,
    semigroup_membership,
)

DEFAULT_ALPHA_MAX = 12
DEFAULT_MAX_GENERATORS = 12


class SearchCapError(RuntimeError):
    pass


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class GluingCertificate:
    """Witness that generators ``part1`` and ``part2`` are (p-)glued.

    Indices refer to a generator list held by the caller.  ``rep1`` and
    ``rep2`` are nonnegative coefficient vectors aligned with ``part1`` and
    ``part2``; both expand to ``p**alpha * w``.  ``p`` is None for a plain
    gluing, in which case ``alpha`` is 0.
    """

    part1: tuple[int, ...]
    part2: tuple[int, ...]
    w: Vector
    alpha: int
    rep1: Vector
    rep2: Vector
    p: Optional[int] = None

    @property
    def multiplier(self) -> int:
        return 1 if self.p is None else self.p**self.alpha

    def problems(self, generators: Sequence[Sequence[int]]) -> list[str]:
        out = []
        N = len(generators)
        s1, s2 = set(self.part1), set(self.part2)
        if not s1 or not s2:
            out.append("empty part")
        if s1 & s2:
            out.append("parts overlap")
        if any(not 0 <= i < N for i in s1 | s2):
            out.append("index out of range")
            return out
        if self.alpha < 0 or (self.p is None and self.alpha != 0):
            out.append("bad alpha")
        if self.p is not None and not isprime(self.p):
            out.append("p is not prime")
        if not any(self.w) or any(x < 0 for x in self.w):
            out.append("w must be a nonzero vector in N^n")
        dim = len(generators[0])
        g1 = [generators[i] for i in self.part1]
        g2 = [generators[i] for i in self.part2]
        meet = lattice_intersection(hermite_basis(g1, dim), hermite_basis(g2, dim))
        if meet != hermite_basis([self.w], dim):
            out.append("intersection lattice is not Zw")
        target = tuple(self.multiplier * x for x in self.w)
        for name, rep, gens in (("rep1", self.rep1, g1), ("rep2", self.rep2, g2)):
            if len(rep) != len(gens) or any(c < 0 for c in rep):
                out.append(f"{name} is not a nonnegative vector of the right length")
            elif combine(rep, gens, dim) != target:
                out.append(f"{name} does not expand to {self.multiplier}*w")
        return out

    def validate(self, generators: Sequence[Sequence[int]]) -> None:
        errs = self.problems(generators)
        if errs:
            raise CertificateError("; ".join(errs))

    def is_valid(self, generators: Sequence[Sequence[int]]) -> bool:
        return not self.problems(generators)

    def to_json(self) -> dict:
        return {
            "part1": list(self.part1),
            "part2": list(self.part2),
            "w": list(self.w),
            "p": self.p,
            "alpha": self.alpha,
            "rep1": list(self.rep1),
            "rep2": list(self.rep2),
        }

    @classmethod
    def from_json(cls, d: dict) -> "GluingCertificate":
        return cls(
            tuple(d["part1"]),
            tuple(d["part2"]),
            tuple(d["w"]),
            int(d["alpha"]),
            tuple(d["rep1"]),
            tuple(d["rep2"]),
            None if d.get("p") is None else int(d["p"]),
        )


@dataclass(frozen=True)
class Leaf:
    indices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"leaf": list(self.indices)}


@dataclass(frozen=True)
class Node:
    certificate: GluingCertificate
    left: "GluingTree"
    right: "GluingTree"

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.certificate.part1 + self.certificate.part2))

    def to_json(self) -> dict:
        return {
            "certificate": self.certificate.to_json(),
            "children": [self.left.to_json(), self.right.to_json()],
        }


GluingTree = Union[Leaf, Node]


def tree_from_json(d: dict) -> GluingTree:
    if "leaf" in d:
        return Leaf(tuple(d["leaf"]))
    left, right = d["children"]
    return Node(GluingCertificate.from_json(d["certificate"]), tree_from_json(left), tree_from_json(right))


def iter_nodes(tree: GluingTree):
    """Internal nodes in post-order (children before parent)."""
    if isinstance(tree, Node):
        yield from iter_nodes(tree.left)
        yield from iter_nodes(tree.right)
        yield tree


def is_free(vectors: Sequence[Sequence[int]]) -> bool:
    """True when the vectors generate a free abelian semigroup.

    Linearly independent generators give every element a unique
    representation, i.e. the semigroup is isomorphic to N^k.
    """
    return rational_rank(vectors) == len(vectors)


def _certify(gens, part1, part2, p, alpha_max) -> Optional[GluingCertificate]:
    dim = len(gens[0])
    g1 = [gens[i] for i in part1]
    g2 = [gens[i] for i in part2]
    w = is_cyclic_generated_by(lattice_intersection(hermite_basis(g1, dim), hermite_basis(g2, dim)))
    if w is None or any(x < 0 for x in w):
        return None
    top = 0 if p is None else alpha_max
    for alpha in range(top + 1):
        mult = 1 if p is None else p**alpha
        target = tuple(mult * x for x in w)
        # membership is monotone in alpha, so the first hit is minimal
        rep2 = semigroup_membership(target, g2)
        if rep2 is None:
            continue
        rep1 = semigroup_membership(target, g1)
        if rep1 is None:
            continue
        return GluingCertificate(tuple(part1), tuple(part2), w, alpha, rep1, rep2, p)
    return None


def _check_parts(T1, T2):
    if not T1 or not T2:
        raise ValueError("both parts must be nonempty")
    T1 = [tuple(int(x) for x in v) for v in T1]
    T2 = [tuple(int(x) for x in v) for v in T2]
    if len({len(v) for v in T1 + T2}) != 1:
        raise ValueError("generators have differing dimensions")
    if set(T1) & set(T2):
        raise ValueError("parts overlap")
    gens = T1 + T2
    return gens, tuple(range(len(T1))), tuple(range(len(T1), len(gens)))


def check_gluing(T1: Sequence[Sequence[int]], T2: Sequence[Sequence[int]]) -> Optional[GluingCertificate]:
    """Certificate that T1 and T2 glue, indices relative to ``T1 + T2``."""
    gens, i1, i2 = _check_parts(T1, T2)
    return _certify(gens, i1, i2, None, 0)


def check_p_gluing(
    T1: Sequence[Sequence[int]],
    T2: Sequence[Sequence[int]],
    p: int,
    alpha_max: int = DEFAULT_ALPHA_MAX,
) -> Optional[GluingCertificate]:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if alpha_max < 0:
        raise ValueError("alpha_max must be nonnegative")
    gens, i1, i2 = _check_parts(T1, T2)
    return _certify(gens, i1, i2, p, alpha_max)


def _split_order(idx: tuple[int, ...]):
    # single generators first, starting from the last one
    N = len(idx)
    rev = idx[::-1]
    for size in range(1, N // 2 + 1):
        for part2 in itertools.combinations(rev, size):
            if 2 * size == N and idx[-1] not in part2:
                continue
            s2 = set(part2)
            yield tuple(i for i in idx if i not in s2), tuple(sorted(part2))


def _generators_of(T) -> tuple[Vector, ...]:
    if isinstance(T, ToricConfiguration):
        return T.generators
    return tuple(tuple(int(x) for x in v) for v in T)


def completely_p_glued(
    T: Union[ToricConfiguration, Sequence[Sequence[int]]],
    p: Optional[int],
    alpha_max: int = DEFAULT_ALPHA_MAX,
    max_generators: int = DEFAULT_MAX_GENERATORS,
) -> Optional[GluingTree]:
    """Search all recursive bipartitions for a (p-)gluing tree.

    ``p=None`` asks for a plain gluing tree (every node has alpha 0).  The
    search is exhaustive, so None means no tree exists within ``alpha_max``.
    """
    gens = _generators_of(T)
    if p is not None and not isprime(p):
        raise ValueError(f"{p} is not prime")
    if len(gens) > max_generators:
        raise SearchCapError(f"{len(gens)} generators exceed the search cap of {max_generators}")
    if len(set(gens)) != len(gens):
        raise ValueError("duplicate generators")
    memo: dict[tuple[int, ...], Optional[GluingTree]] = {}

    def solve(idx):
        if idx in memo:
            return memo[idx]
        result = None
        if is_free([gens[i] for i in idx]):
            result = Leaf(idx)
        else:
            for part1, part2 in _split_order(idx):
                cert = _certify(gens, part1, part2, p, alpha_max)
                if cert is None:
                    continue
                left = solve(part1)
                if left is None:
                    continue
                right = solve(part2)
                if right is None:
                    continue
                result = Node(cert, left, right)
                break
        memo[idx] = result
        return result

    return solve(tuple(range(len(gens))))


def tree_problems(tree: GluingTree, T, p: Optional[int] = None) -> list[str]:
    """Everything wrong with ``tree`` as a gluing tree over all of ``T``."""
    gens = _generators_of(T)
    out = []

    def walk(t, expected):
        if isinstance(t, Leaf):
            if tuple(sorted(t.indices)) != expected:
                out.append(f"leaf {t.indices} does not cover {expected}")
            elif not is_free([gens[i] for i in t.indices]):
                out.append(f"leaf {t.indices} is not free")
            return
        cert = t.certificate
        if p is not None and cert.p not in (None, p):
            out.append(f"node uses prime {cert.p}, expected {p}")
        if tuple(sorted(cert.part1 + cert.part2)) != expected:
            out.append(f"node parts do not cover {expected}")
            return
        out.extend(cert.problems(gens))
        walk(t.left, tuple(sorted(cert.part1)))
        walk(t.right, tuple(sorted(cert.part2)))

    walk(tree, tuple(range(len(gens))))
    return out


def binomials_from_tree(tree: GluingTree, T: ToricConfiguration) -> list[Binomial]:
    """One binomial per internal node, children first.

    The node's two representations of ``p**alpha * w`` become the two
    monomials; the result is canonically oriented.
    """
    errs = tree_problems(tree, T)
    if errs:
        raise CertificateError("; ".join(errs))
    N = T.num_vars
    out = []
    for node in iter_nodes(tree):
        cert = node.certificate
        plus = [0] * N
        minus = [0] * N
        for i, k in zip(cert.part1, cert.rep1):
            plus[i] = k
        for i, k in zip(cert.part2, cert.rep2):
            minus[i] = k
        out.append(Binomial(T.n, plus, minus).canonical())
    return out
