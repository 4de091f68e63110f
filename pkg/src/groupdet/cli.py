"""Command-line front end: ``verify``, ``table`` and ``factor``.

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 for
invalid arguments or parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from math import factorial
from typing import Callable

from . import bases
from .colored import ColoredPermutation, ColoredPermutationGroup, amaj, cmaj, col, fmaj
from .errors import GroupDetError
from .formulas import (
    SIGNED_VARIANTS,
    rhs_amaj,
    rhs_defining,
    rhs_dihedral,
    rhs_fmaj,
    rhs_irrep,
    rhs_maj,
    rhs_maj_col,
    rhs_signed,
    rhs_signed_spec,
)
from .groups import DihedralElement, DihedralGroup, Permutation, SymmetricGroup, descents, inversions, maj
from .matrix import det_bareiss, det_modular, point_count, random_points
from .poly import DEFAULT_PRIME, MultiPoly, evaluate, render, var_key
from .representations import (
    SYMBOLIC_LIMIT,
    RegularMatrix,
    amaj_col_weight,
    defining_matrix,
    dihedral_weight,
    fmaj_weight,
    maj_col_weight,
    maj_weight,
    majB_weight,
    nneg_weight,
    signed_weight,
    sneg_weight,
)
from .signed import SignedPermutation, SignedPermutationGroup, maj_A, maj_B, neg_stats
from .tableaux import as_partition, delta_irrep

MAX_VERIFY_ORDER = 1000
MAX_TABLE_ORDER = 10_000
DEFAULT_POINTS = 7


class UsageError(Exception):
    """Bad parameters; reported with exit code 2."""


def default_prime() -> int:
    value = os.environ.get("GROUPDET_PRIME")
    if not value:
        return DEFAULT_PRIME
    try:
        prime = int(value)
    except ValueError:
        raise UsageError(f"GROUPDET_PRIME={value!r} is not an integer") from None
    if prime < 3:
        raise UsageError("GROUPDET_PRIME must be a prime >= 3")
    return prime


# ---------------------------------------------------------------------------
# verify


@dataclass(frozen=True)
class RegularIdentity:
    group: Callable
    weight: Callable
    rhs: Callable
    needs_m: bool = False


def _signed_variant(which: str) -> RegularIdentity:
    weights = {"nneg": nneg_weight, "majB": majB_weight, "sneg": sneg_weight}
    return RegularIdentity(
        lambda n, m: SignedPermutationGroup(n), weights[which], lambda n, m: rhs_signed_spec(n, which)
    )


REGULAR_IDENTITIES: dict[str, RegularIdentity] = {
    "maj": RegularIdentity(lambda n, m: SymmetricGroup(n), maj_weight, lambda n, m: rhs_maj(n)),
    "fmaj": RegularIdentity(ColoredPermutationGroup, fmaj_weight, rhs_fmaj, True),
    "maj-col": RegularIdentity(ColoredPermutationGroup, maj_col_weight, rhs_maj_col, True),
    "amaj": RegularIdentity(ColoredPermutationGroup, amaj_col_weight, rhs_amaj, True),
    "signed": RegularIdentity(lambda n, m: SignedPermutationGroup(n), signed_weight, lambda n, m: rhs_signed(n)),
    **{f"signed-{w}": _signed_variant(w) for w in SIGNED_VARIANTS},
    "dihedral": RegularIdentity(lambda n, m: DihedralGroup(n), dihedral_weight, lambda n, m: rhs_dihedral(n)),
}
IDENTITIES = tuple(REGULAR_IDENTITIES) + ("defining", "irrep")


def _group_order(identity: str, n: int, m: int | None) -> int:
    if identity == "dihedral":
        return 2 * n
    if identity.startswith("signed"):
        return factorial(n) * 2**n
    if REGULAR_IDENTITIES[identity].needs_m:
        return factorial(n) * m**n
    return factorial(n)


def _check_params(identity: str, n: int, m: int | None, shape) -> None:
    if identity not in IDENTITIES:
        raise UsageError(f"unknown identity {identity!r}")
    if n < 1:
        raise UsageError("--n must be positive")
    if identity == "dihedral" and n < 3:
        raise UsageError("dihedral groups need --n >= 3")
    if identity in REGULAR_IDENTITIES and REGULAR_IDENTITIES[identity].needs_m:
        if m is None:
            raise UsageError(f"{identity} needs --m")
        if m < 1:
            raise UsageError("--m must be positive")
    if identity == "defining" and n > 8:
        raise UsageError("defining matrices are built by enumeration; need --n <= 8")
    if identity == "irrep":
        if shape is None:
            raise UsageError("irrep needs --lambda")
        if sum(shape) != n:
            raise UsageError(f"--lambda {list(shape)} is not a partition of {n}")
        try:
            rhs_irrep(shape)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if identity in REGULAR_IDENTITIES and _group_order(identity, n, m) > MAX_VERIFY_ORDER:
        raise UsageError(f"group order exceeds {MAX_VERIFY_ORDER}")


def _first_coefficient_mismatch(lhs: MultiPoly, rhs: MultiPoly) -> dict:
    diff = lhs - rhs
    exps = min(diff.terms(), key=lambda t: (sum(t[0].values()), sorted(t[0].items())))[0]
    mono = MultiPoly.monomial(exps)
    return {
        "monomial": render(mono),
        "lhs": lhs.coefficient(exps),
        "rhs": rhs.coefficient(exps),
    }


def run_verification(
    identity: str,
    n: int,
    m: int | None = None,
    shape=None,
    mode: str = "auto",
    seed: int = 0,
    points: int = DEFAULT_POINTS,
    prime: int | None = None,
    symbolic_limit: int = SYMBOLIC_LIMIT,
    timing: bool = True,
) -> dict:
    """Build both sides of an identity, compare them and return the report."""
    start = time.perf_counter()
    if shape is not None:
        shape = tuple(shape)
    _check_params(identity, n, m, shape)
    prime = default_prime() if prime is None else prime

    params: dict = {"n": n}
    if m is not None and (identity in REGULAR_IDENTITIES and REGULAR_IDENTITIES[identity].needs_m):
        params["m"] = m
    if identity == "irrep":
        params["lambda"] = list(shape)

    if identity in REGULAR_IDENTITIES:
        spec = REGULAR_IDENTITIES[identity]
        rhs = spec.rhs(n, m)
        lazy = RegularMatrix(spec.group(n, m), spec.weight())
        size = lazy.size
        symbolic = lambda: lazy.det(symbolic_limit)  # noqa: E731
        at_point = lambda pt: lazy.det_at(pt, prime)  # noqa: E731
        lhs_vars = lazy.variables
    elif identity == "defining":
        rhs = rhs_defining(n)
        mat = defining_matrix(n)
        size = n
        symbolic = lambda: MultiPoly(det_bareiss(mat))  # noqa: E731
        at_point = lambda pt: det_modular(mat, n, pt, prime)  # noqa: E731
        lhs_vars = ("q",)
    else:
        rhs = rhs_irrep(shape)
        delta = delta_irrep(shape)
        size = 0
        symbolic = lambda: delta  # noqa: E731
        at_point = lambda pt: evaluate(delta, pt, prime)  # noqa: E731
        lhs_vars = delta.variables

    if mode == "auto":
        mode = "symbolic" if size <= symbolic_limit else "modular"
    if mode not in ("symbolic", "modular"):
        raise UsageError(f"unknown mode {mode!r}")
    if mode == "symbolic" and size > symbolic_limit:
        raise UsageError(f"{size}x{size} is above the symbolic limit {symbolic_limit}; use --mode modular")

    report: dict = {"identity": identity, "params": params, "mode": mode}
    if mode == "symbolic":
        lhs = symbolic()
        rhs_poly = rhs.expand()
        ok = lhs == rhs_poly
        report["pass"] = ok
        report["lhs"] = render(lhs)
        report["rhs"] = str(rhs)
        if not ok:
            report["mismatch"] = _first_coefficient_mismatch(lhs, rhs_poly)
    else:
        names = sorted(set(lhs_vars) | set(rhs.variables), key=var_key)
        count = max(points, point_count(rhs.degree()))
        mismatch = None
        for pt in random_points(names, count, prime, seed):
            left, right = at_point(pt), rhs.evaluate(pt, prime)
            if left != right:
                mismatch = {"point": pt, "lhs": left, "rhs": right}
                break
        report["pass"] = mismatch is None
        report["rhs"] = str(rhs)
        report["prime"] = prime
        report["seed"] = seed
        report["points"] = count
        if mismatch:
            report["mismatch"] = mismatch
    report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3) if timing else None
    return report


# ---------------------------------------------------------------------------
# table


def _sym_row(w: Permutation) -> dict:
    return {"maj": maj(w), "inv": inversions(w), "des": len(descents(w))}


def _colored_row(g: ColoredPermutation) -> dict:
    return {"fmaj": fmaj(g), "cmaj": cmaj(g), "col": col(g), "amaj": amaj(g)}


def _signed_row(g: SignedPermutation) -> dict:
    _, nneg, sneg = neg_stats(g)
    return {"majA": maj_A(g), "majB": maj_B(g), "nneg": nneg, "sneg": sneg}


def _dihedral_row(h: DihedralElement) -> dict:
    c1, c2 = bases.factor_dihedral(h)
    return {"rot": c1, "refl": c2}


def _signed_exponents(g: SignedPermutation) -> list[int]:
    d, c = bases.factor_signed(g)
    return list(d) + list(c)


TABLES = {
    "sym": (lambda n, m: SymmetricGroup(n), _sym_row, bases.factor_sym, str),
    "colored": (ColoredPermutationGroup, _colored_row, bases.factor_colored, str),
    "signed": (lambda n, m: SignedPermutationGroup(n), _signed_row, _signed_exponents, str),
    "dihedral": (lambda n, m: DihedralGroup(n), _dihedral_row, bases.factor_dihedral, lambda h: str(h.as_permutation())),
}


def build_table(group: str, n: int, m: int | None, stats: list[str] | None) -> list[dict]:
    if group not in TABLES:
        raise UsageError(f"unknown group {group!r}")
    if n < 1 or (group == "dihedral" and n < 3):
        raise UsageError("--n out of range for this group")
    if group == "colored" and (m is None or m < 1):
        raise UsageError("colored needs a positive --m")
    size = {"sym": factorial(n), "colored": factorial(n) * (m or 1) ** n,
            "signed": factorial(n) * 2**n, "dihedral": 2 * n}[group]
    if size > MAX_TABLE_ORDER:
        raise UsageError(f"group order {size} exceeds the table limit {MAX_TABLE_ORDER}")
    make_group, row_stats, factor, show = TABLES[group]
    G = make_group(n, m)
    rows = []
    for g in G:
        values = row_stats(g)
        wanted = stats or list(values)
        unknown = [s for s in wanted if s not in values]
        if unknown:
            raise UsageError(f"unknown statistic(s) {unknown} for {group}; choose from {list(values)}")
        row = {"element": show(g)}
        row.update({s: values[s] for s in wanted})
        row["exponents"] = list(factor(g))
        rows.append(row)
    return rows


def format_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    headers = list(rows[0])
    cells = [headers] + [[_cell(r[h]) for h in headers] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells)


def _cell(value) -> str:
    if isinstance(value, list):
        return "(" + ",".join(map(str, value)) + ")"
    return str(value)


# ---------------------------------------------------------------------------
# factor


def factor_element(group: str, text: str, m: int | None = None, basis: str | None = None) -> dict:
    """Exponent vector of an element together with the statistic identities it certifies."""
    if group == "sym":
        w = Permutation.parse(text)
        c = bases.factor_sym(w)
        return {
            "group": "sym", "element": str(w), "basis": "t_n..t_2", "exponents": list(c),
            "maj": maj(w), "exponent_sum": sum(c),
            "recomposes": bases.recompose_sym(c, w.n) == w, "holds": maj(w) == sum(c),
        }
    if group == "colored":
        if m is None or m < 1:
            raise UsageError("colored needs a positive --m")
        g = ColoredPermutation.parse(text, m)
        if basis in (None, "fmaj"):
            c = bases.factor_colored(g)
            return {
                "group": "colored", "m": m, "element": str(g), "basis": "fmaj", "exponents": list(c),
                "fmaj": fmaj(g), "exponent_sum": sum(c),
                "recomposes": bases.recompose_colored(c, g.n, m) == g, "holds": fmaj(g) == sum(c),
            }
        if basis == "amaj":
            c, d = bases.factor_amaj(g)
            return {
                "group": "colored", "m": m, "element": str(g), "basis": "amaj", "c": list(c), "d": list(d),
                "amaj": amaj(g), "col": col(g),
                "recomposes": bases.recompose_amaj(c, d, g.n, m) == g,
                "holds": amaj(g) == sum(c) and col(g) == sum(d),
            }
        raise UsageError(f"unknown colored basis {basis!r}; choose fmaj or amaj")
    if group == "signed":
        g = SignedPermutation.parse(text)
        d, c = bases.factor_signed(g)
        neg = sorted(neg_stats(g)[0])
        return {
            "group": "signed", "element": str(g), "basis": "s_1..s_n,u_n..u_2", "d": list(d), "c": list(c),
            "majA": maj_A(g), "exponent_sum": sum(c), "Neg": neg,
            "recomposes": bases.recompose_signed(d, c, g.n) == g,
            "holds": maj_A(g) == sum(c) and neg == [i for i, x in enumerate(d, 1) if x],
        }
    if group == "dihedral":
        w = Permutation.parse(text)
        if w.n < 3:
            raise UsageError("dihedral elements need n >= 3")
        match = [h for h in DihedralGroup(w.n) if h.as_permutation() == w]
        if not match:
            raise UsageError(f"{text!r} is not a symmetry of the {w.n}-gon")
        h = match[0]
        c1, c2 = bases.factor_dihedral(h)
        return {
            "group": "dihedral", "element": str(w), "basis": "g1,g2", "exponents": [c1, c2],
            "rot": c1, "refl": c2,
            "recomposes": bases.dihedral_basis(w.n).compose((c1, c2)) == h, "holds": True,
        }
    raise UsageError(f"unknown group {group!r}")


# ---------------------------------------------------------------------------
# argument parsing


def _shape(text: str):
    try:
        return as_partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _stats(text: str) -> list[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="groupdet", description="Group determinants of permutation statistics")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="compare a group determinant with its closed form")
    v.add_argument("identity", choices=IDENTITIES)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int)
    v.add_argument("--lambda", dest="shape", type=_shape, help="partition such as 2,2 (irrep only)")
    v.add_argument("--mode", choices=("auto", "symbolic", "modular"), default="auto")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--points", type=int, default=DEFAULT_POINTS)
    v.add_argument("--prime", type=int, help="modulus (default 2^31-1 or $GROUPDET_PRIME)")
    v.add_argument("--symbolic-limit", type=int, default=SYMBOLIC_LIMIT)
    v.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null for reproducible output")

    t = sub.add_parser("table", help="tabulate statistics and basis exponents")
    t.add_argument("group", choices=tuple(TABLES))
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--m", type=int)
    t.add_argument("--stats", type=_stats)
    t.add_argument("--json", action="store_true")

    f = sub.add_parser("factor", help="factor an element over its group's basis")
    f.add_argument("group", choices=("sym", "colored", "signed", "dihedral"))
    f.add_argument("element")
    f.add_argument("--m", type=int)
    f.add_argument("--basis", choices=("fmaj", "amaj"))
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report = run_verification(
                args.identity, args.n, args.m, args.shape, args.mode, args.seed, args.points,
                args.prime, args.symbolic_limit, timing=not args.no_timing,
            )
            print(json.dumps(report, indent=2))
            return 0 if report["pass"] else 1
        if args.command == "table":
            rows = build_table(args.group, args.n, args.m, args.stats)
            print(json.dumps(rows, indent=2) if args.json else format_table(rows))
            return 0
        print(json.dumps(factor_element(args.group, args.element, args.m, args.basis), indent=2))
        return 0
    except (UsageError, GroupDetError, ValueError) as exc:
        print(f"groupdet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
