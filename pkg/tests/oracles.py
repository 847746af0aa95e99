"""Brute-force reference computations, independent of the package code."""

import itertools
from math import gcd
from functools import reduce


def nonneg_solutions(target, generators):
    """Every nonnegative coefficient vector with sum c_i g_i == target (plain enumeration)."""
    ranges = []
    for g in generators:
        bounds = [t // x for t, x in zip(target, g) if x]
        ranges.append(range(min(bounds) + 1))
    out = []
    for coeffs in itertools.product(*ranges):
        v = [0] * len(target)
        for c, g in zip(coeffs, generators):
            for j, x in enumerate(g):
                v[j] += c * x
        if tuple(v) == tuple(target):
            out.append(coeffs)
    return out


def in_semigroup(target, generators):
    return bool(nonneg_solutions(target, generators))


def minors_gcd(rows, k):
    """gcd of all k x k minors (Fraction-free determinant by cofactor expansion)."""

    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))

    vals = []
    ncols = len(rows[0])
    for rs in itertools.combinations(range(len(rows)), k):
        for cs in itertools.combinations(range(ncols), k):
            vals.append(abs(det([[rows[r][c] for c in cs] for r in rs])))
    return reduce(gcd, vals, 0)


def vanishing_points(system, l, num_vars):
    """Common zeros over F_l by evaluating every point with Python ints."""
    out = set()
    for pt in itertools.product(range(l), repeat=num_vars):
        ok = True
        for b in system:
            m = n = 1
            for x, e in zip(pt, b.plus):
                m = m * pow(x, e, l) % l
            for x, e in zip(pt, b.minus):
                n = n * pow(x, e, l) % l
            if m != n:
                ok = False
                break
        if ok:
            out.add(pt)
    return out


def p_power_brute(f, g, p):
    """(alpha, s, t) with p**alpha = s f + t g, alpha minimal, then t minimal."""
    alpha = 0
    while True:
        P = p**alpha
        sols = [(s, t) for t in range(P // g + 1) for s in range(P // f + 1) if s * f + t * g == P]
        if sols:
            s, t = min(sols, key=lambda st: st[1])
            return alpha, s, t
        alpha += 1
