"""Command-line front end.

Exit codes: 0 success, 1 verification failed / nothing found,
2 invalid input, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .config import Binomial, ToricConfiguration, variable_names
from .family import (
    FamilyParameters,
    build_family,
    default_proposition2_bound,
    p_power_rep,
    proposition2_witness,
    theorem4_system,
)
from .gluing import DEFAULT_ALPHA_MAX, SearchCapError, binomials_from_tree, completely_p_glued, Leaf
from .toric_ideal import markov_basis
from .verify import ResourceCapError, compare_systems

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
DEFAULT_BOUND = 36


class InputError(ValueError):
    pass


def load_config(path: str) -> tuple[ToricConfiguration, Optional[FamilyParameters]]:
    """Read a configuration file: ``{"n", "c", "rows"}`` or ``{"n", "f", "g"}``."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise InputError("configuration must be a JSON object")
    if {"f", "g"} <= data.keys():
        params = FamilyParameters(int(data["n"]), int(data["f"]), int(data["g"]))
        return build_family(params), params
    return ToricConfiguration.from_json(data), None


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


def _describe_config(T: ToricConfiguration) -> list[str]:
    names = variable_names(T.n, T.r)
    return [f"  {v} <- {list(g)}" for v, g in zip(names, T.generators)]


def cmd_family(args) -> int:
    params = FamilyParameters(args.n, args.f, args.g)
    if args.p == args.q:
        raise InputError("p and q must differ")
    T = build_family(params)
    system = theorem4_system(params, args.p, args.q)
    G = proposition2_witness(params)
    reps = [p_power_rep(params.f, params.g, p) for p in (args.p, args.q)]
    if args.json:
        _dump({
            "params": params.to_json(),
            "configuration": T.to_json(),
            "conditions": params.conditions(),
            "p_powers": [{"p": r.p, "alpha": r.alpha, "s": r.s, "t": r.t} for r in reps],
            "equations": [str(b) for b in system],
            "binomials": [b.to_json() for b in system],
            "witness": {"equation": str(G), "binomial": G.to_json()},
        })
        return EXIT_OK
    if args.emit_equations:
        for b in system:
            print(b)
        return EXIT_OK
    print(f"family n={params.n} f={params.f} g={params.g}: c = fg = {params.c}, d = f - g = {params.d}")
    print("generators:")
    print("\n".join(_describe_config(T)))
    print("conditions:")
    for name, ok in params.conditions().items():
        print(f"  {name}: {'ok' if ok else 'FAILS'}")
    for r in reps:
        print(f"{r.p}^{r.alpha} = {r.s}*{params.f} + {r.t}*{params.g}")
    print(f"{params.n + 1} defining equations (p={args.p}, q={args.q}):")
    for b in system:
        print(f"  {b}")
    print(f"non-complete-intersection witness: {G}")
    return EXIT_OK


def _tree_lines(tree, T, depth=0) -> list[str]:
    names = variable_names(T.n, T.r)
    pad = "  " * depth
    if isinstance(tree, Leaf):
        return [f"{pad}free: {{{', '.join(names[i] for i in tree.indices)}}}"]
    c = tree.certificate
    p1 = ", ".join(names[i] for i in c.part1)
    p2 = ", ".join(names[i] for i in c.part2)
    mult = "" if c.p is None else f", {c.p}^{c.alpha}*w"
    lines = [f"{pad}glue {{{p1}}} | {{{p2}}}: w = {list(c.w)}, alpha = {c.alpha}{mult}"]
    return lines + _tree_lines(tree.left, T, depth + 1) + _tree_lines(tree.right, T, depth + 1)


def cmd_glue(args) -> int:
    T, _ = load_config(args.config)
    p = args.p or None
    tree = completely_p_glued(T, p, alpha_max=args.alpha_max)
    kind = "gluing" if p is None else f"{p}-gluing"
    if tree is None:
        if args.json:
            _dump({"found": False, "p": p, "alpha_max": args.alpha_max, "configuration": T.to_json()})
        else:
            print(f"no {kind} tree found (alpha_max = {args.alpha_max})")
        return EXIT_FAILED
    binomials = binomials_from_tree(tree, T)
    if args.json:
        _dump({
            "found": True,
            "p": p,
            "alpha_max": args.alpha_max,
            "configuration": T.to_json(),
            "tree": tree.to_json(),
            "equations": [str(b) for b in binomials],
            "binomials": [b.to_json() for b in binomials],
        })
        return EXIT_OK
    print(f"{kind} tree:")
    print("\n".join(_tree_lines(tree, T, 1)))
    if binomials:
        print("binomials:")
        for b in binomials:
            print(f"  {b}")
    return EXIT_OK


def _check_bound(bound: int) -> int:
    if bound <= 0:
        raise InputError("--bound must be positive")
    return bound


def cmd_markov(args) -> int:
    T, _ = load_config(args.config)
    res = markov_basis(T, _check_bound(args.bound))
    if args.json:
        _dump({"configuration": T.to_json(), **res.to_json()})
        return EXIT_OK
    print(f"{res.count} minimal binomial generators up to degree {res.degree_bound_used}:")
    for b, d in zip(res.binomials, res.degrees):
        print(f"  {b}    (degree {d})")
    if not res.complete_up_to_bound:
        print("warning: generators still appear near the bound; raise --bound")
    return EXIT_OK


def _read_system(path: str, T: ToricConfiguration) -> list[Binomial]:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read system {path}: {e}") from None
    if isinstance(data, dict):
        data = data.get("binomials", [])
    return [Binomial.from_json(d, T.n, T.r) for d in data]


def cmd_verify(args) -> int:
    T, params = load_config(args.config)
    primes = [int(x) for x in args.primes.split(",") if x.strip()]
    if args.system:
        system = _read_system(args.system, T)
    elif params is not None:
        if args.p == args.q:
            raise InputError("p and q must differ")
        system = theorem4_system(params, args.p, args.q)
    else:
        raise InputError("verify needs family parameters {n, f, g} or --system")
    if args.bound is not None:
        bound = _check_bound(args.bound)
    else:
        bound = DEFAULT_BOUND if params is None else max(DEFAULT_BOUND, default_proposition2_bound(params))
    basis = markov_basis(T, bound)
    reports = compare_systems(system, list(basis.binomials), primes, num_vars=T.num_vars)
    ok = all(r.equal for r in reports)
    if args.json:
        _dump({
            "configuration": T.to_json(),
            "system": [str(b) for b in system],
            "markov_basis": [str(b) for b in basis.binomials],
            "markov_complete_up_to_bound": basis.complete_up_to_bound,
            "grading_bound": bound,
            "reports": [r.to_json() for r in reports],
            "all_equal": ok,
            "note": "verification at desk scale over finite fields, not a proof",
        })
    else:
        print("system A:")
        for b in system:
            print(f"  {b}")
        print(f"system B: {basis.count} Markov basis binomials up to degree {bound}")
        for r in reports:
            status = "equal" if r.equal else "DIFFER"
            print(f"  F_{r.field_prime}: |Z(A)| = {r.system_a_size}, |Z(B)| = {r.system_b_size}, {status}")
            for side, pt in r.witnesses:
                print(f"    only in {side}: {list(pt)}")
        print("(verification at desk scale over finite fields, not a proof)")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricasci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="equations for the (n, f, g) family")
    p.add_argument("n", type=int)
    p.add_argument("f", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--emit-equations", action="store_true", help="print only the equations")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("glue", help="search for a (p-)gluing tree")
    p.add_argument("config")
    p.add_argument("--p", type=int, default=0, help="prime; 0 for plain gluing")
    p.add_argument("--alpha-max", type=int, default=DEFAULT_ALPHA_MAX)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("markov", help="degree-bounded minimal Markov basis")
    p.add_argument("config")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_markov)

    p = sub.add_parser("verify", help="compare zero sets over small prime fields")
    p.add_argument("config")
    p.add_argument("--primes", default="5,7,11")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--system", help="JSON list of binomials to use instead of the family system")
    p.add_argument("--bound", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ResourceCapError, SearchCapError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
