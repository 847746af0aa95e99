"""Exact integer lattices and bounded semigroup membership.

Vectors are plain tuples of Python ints, so arithmetic never overflows.
Lattices are kept in row-style Hermite normal form: pivots are positive
and every entry above a pivot lies in ``[0, pivot)``.  Two lattices are
equal exactly when their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

Vector = tuple[int, ...]


class DimensionError(ValueError):
    pass


def _as_vector(v: Sequence[int]) -> Vector:
    return tuple(int(x) for x in v)


def _common_dim(vectors: Sequence[Sequence[int]]) -> int:
    dims = {len(v) for v in vectors}
    if len(dims) != 1:
        raise DimensionError(f"vectors of differing lengths {sorted(dims)}")
    return dims.pop()


def hermite_with_transform(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style HNF of ``rows`` together with a unimodular transform.

    Returns ``(H, U)`` with ``U @ rows == H`` where the first ``rank`` rows of
    ``H`` are the Hermite basis and the remaining rows are zero.  The rows of
    ``U`` past ``rank`` therefore form a basis of the integer left kernel.
    """
    m = len(rows)
    if m == 0:
        return [], []
    ncols = len(rows[0])
    A = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def axpy(dst, src, q):
        # row[dst] -= q * row[src]
        if q:
            A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    k = 0
    for col in range(ncols):
        if k == m:
            break
        while True:
            nz = [i for i in range(k, m) if A[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][col]))
            swap(k, piv)
            done = True
            for i in range(k + 1, m):
                if A[i][col]:
                    axpy(i, k, A[i][col] // A[k][col])
                    if A[i][col]:
                        done = False
            if done:
                break
        if all(A[i][col] == 0 for i in range(k, m)):
            continue
        if A[k][col] < 0:
            A[k] = [-a for a in A[k]]
            U[k] = [-a for a in U[k]]
        p = A[k][col]
        for i in range(k):
            axpy(i, k, A[i][col] // p)
        k += 1
    return A, U


@dataclass(frozen=True)
class IntegerLattice:
    basis: tuple[Vector, ...]
    ambient_dim: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def __contains__(self, v) -> bool:
        return lattice_membership(v, self) is not None

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "basis": [list(b) for b in self.basis]}


def zero_lattice(dim: int) -> IntegerLattice:
    return IntegerLattice((), dim)


def hermite_basis(generators: Sequence[Sequence[int]], ambient_dim: Optional[int] = None) -> IntegerLattice:
    """Canonical basis of the integer span of ``generators``."""
    if not generators:
        if ambient_dim is None:
            raise ValueError("empty generator list needs an explicit ambient_dim")
        return zero_lattice(ambient_dim)
    dim = _common_dim(generators)
    if ambient_dim is not None and dim != ambient_dim:
        raise DimensionError(f"generators have length {dim}, expected {ambient_dim}")
    H, _ = hermite_with_transform([_as_vector(g) for g in generators])
    basis = tuple(tuple(r) for r in H if any(r))
    return IntegerLattice(basis, dim)


def lattice_membership(v: Sequence[int], L: IntegerLattice) -> Optional[Vector]:
    """Coefficients of ``v`` in the Hermite basis of ``L``, or None."""
    v = _as_vector(v)
    if len(v) != L.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in lattice of dimension {L.ambient_dim}")
    res = list(v)
    coeffs = []
    for row, p in zip(L.basis, L.pivots):
        if any(res[:p]):
            return None
        q, r = divmod(res[p], row[p])
        if r:
            return None
        coeffs.append(q)
        if q:
            res = [a - q * b for a, b in zip(res, row)]
    if any(res):
        return None
    return tuple(coeffs)


def integer_representation(v: Sequence[int], generators: Sequence[Sequence[int]]) -> Optional[Vector]:
    """Some integer combination of ``generators`` equal to ``v``, or None.

    Not unique when the generators are dependent; the one returned comes
    from the Hermite transform and is deterministic.
    """
    v = _as_vector(v)
    gens = [_as_vector(g) for g in generators]
    if not gens:
        return () if not any(v) else None
    if _common_dim(gens + [v]) != len(v):
        raise DimensionError("dimension mismatch")
    H, U = hermite_with_transform(gens)
    rank = sum(1 for r in H if any(r))
    L = IntegerLattice(tuple(tuple(r) for r in H[:rank]), len(v))
    c = lattice_membership(v, L)
    if c is None:
        return None
    return tuple(sum(c[i] * U[i][j] for i in range(rank)) for j in range(len(gens)))


def lattice_intersection(L1: IntegerLattice, L2: IntegerLattice) -> IntegerLattice:
    # left kernel of [B1; B2]: a.B1 + b.B2 = 0  <=>  a.B1 = -b.B2 lies in both
    if L1.ambient_dim != L2.ambient_dim:
        raise DimensionError(f"ambient dimensions {L1.ambient_dim} and {L2.ambient_dim} differ")
    dim = L1.ambient_dim
    if not L1.basis or not L2.basis:
        return zero_lattice(dim)
    stacked = [list(b) for b in L1.basis] + [list(b) for b in L2.basis]
    H, U = hermite_with_transform(stacked)
    rank = sum(1 for r in H if any(r))
    r1 = L1.rank
    image = []
    for krow in U[rank:]:
        a = krow[:r1]
        image.append(tuple(sum(a[i] * L1.basis[i][j] for i in range(r1)) for j in range(dim)))
    if not image:
        return zero_lattice(dim)
    return hermite_basis(image, dim)


def is_cyclic_generated_by(L: IntegerLattice) -> Optional[Vector]:
    """The generator of a rank-1 lattice, first nonzero coordinate positive."""
    if L.rank != 1:
        return None
    # HNF pivots are positive, so the basis row already follows the sign rule
    return L.basis[0]


def lattice_contains_lattice(big: IntegerLattice, small: IntegerLattice) -> bool:
    return all(lattice_membership(b, big) is not None for b in small.basis)


def semigroup_membership(target: Sequence[int], generators: Sequence[Sequence[int]]) -> Optional[Vector]:
    """Nonnegative integer coefficients expressing ``target`` over ``generators``.

    Exhaustive depth-first search.  A generator's coefficient can never exceed
    ``target[j] // g[j]`` for any coordinate ``j`` in its support, which makes
    the search finite.  Generators are tried in order with the largest
    coefficient first, so the answer is deterministic.  Residuals that have
    already failed are memoized for the duration of the call.
    """
    target = _as_vector(target)
    gens = [_as_vector(g) for g in generators]
    if gens:
        if _common_dim(gens + [target]) != len(target):
            raise DimensionError("dimension mismatch")
    if any(x < 0 for x in target) or any(x < 0 for g in gens for x in g):
        raise ValueError("semigroup membership needs nonnegative vectors")
    if any(not any(g) for g in gens):
        raise ValueError("zero generator")
    N = len(gens)
    if not any(target):
        return (0,) * N
    if N == 0:
        return None

    dim = len(target)
    supports = [tuple(j for j in range(dim) if g[j]) for g in gens]
    # reach[i]: coordinates that generators i.. can still reduce
    reach = [frozenset()] * (N + 1)
    for i in range(N - 1, -1, -1):
        reach[i] = reach[i + 1] | frozenset(supports[i])
    coeffs = [0] * N
    failed: set = set()

    def search(i: int, res: Vector) -> bool:
        if not any(res):
            for j in range(i, N):
                coeffs[j] = 0
            return True
        if i == N:
            return False
        key = (i, res)
        if key in failed:
            return False
        if any(x and j not in reach[i] for j, x in enumerate(res)):
            failed.add(key)
            return False
        g = gens[i]
        kmax = min(res[j] // g[j] for j in supports[i])
        if i == N - 1:
            if all(r == kmax * x for r, x in zip(res, g)):
                coeffs[i] = kmax
                return True
            failed.add(key)
            return False
        for k in range(kmax, -1, -1):
            nxt = tuple(r - k * x for r, x in zip(res, g)) if k else res
            if search(i + 1, nxt):
                coeffs[i] = k
                return True
        failed.add(key)
        return False

    if search(0, target):
        return tuple(coeffs)
    return None


def combine(coeffs: Sequence[int], generators: Sequence[Sequence[int]], dim: Optional[int] = None) -> Vector:
    """Expand an integer combination of generators into a vector."""
    if dim is None:
        dim = len(generators[0]) if generators else 0
    out = [0] * dim
    for c, g in zip(coeffs, generators):
        if c:
            for j, x in enumerate(g):
                out[j] += c * x
    return tuple(out)


def rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    H, _ = hermite_with_transform([list(v) for v in vectors])
    return sum(1 for r in H if any(r))
