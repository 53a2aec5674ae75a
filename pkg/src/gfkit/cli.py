"""``gfkit`` command line.

Text output renders product forms as ``(numerator) / [(1-q^b1)(1-q^b2)...]``.
Univariate forms use ``q``; two-variable forms write monomials as
``x^a*y^b`` (a zero exponent drops that variable, the constant is ``1``).
Numerator terms are sorted by total degree, then by y-degree; repeated
denominator factors are written out once per multiplicity.

JSON output for ``gf``/``gf2`` is ``{"numerator": [[dx, dy, coeff], ...],
"denominator": [[o, e, multiplicity], ...], "b": [...], "verified": bool}``
with every integer rendered as a decimal string.

Exit codes: 0 success, 1 usage/parse/precondition error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gfengine as gfe
from .construct import matrix_from_sequence
from .dsl import parse_system
from .errors import GfkitError
from .oracle import count_by_weight, verify
from .series import ProductForm, TruncatedSeries, expand, infer_product_form, render
from .systems import ConstraintSystem, EqualitySpec

DEFAULT_TRUNC = 25


class UsageError(GfkitError):
    pass


def univariate_form(sys: ConstraintSystem, guard: bool = True) -> tuple[ProductForm, list[int]]:
    """The single-variable closed form for a parsed system, with its b-sequence."""
    if sys.kind == "integer_matrix":
        form = gfe.gf_integer(sys.matrix, sys.equality)
        return form, list(gfe.b_sequence(sys.matrix))
    if sys.kind == "rational":
        form = gfe.gf_rational(sys.rational, guard=guard)
        return form, list(gfe.rational_b_sequence(sys.rational))
    if sys.kind == "lecture_hall_variant":
        form = gfe.gf_lecture_hall_variant(sys.k, sys.l, sys.j, sys.first_equality)
        return form, form.exponents()
    form = gfe.diagonal(gfe.gf_alpha_beta(sys.alpha, sys.beta, sys.k))
    return form, form.exponents()


def _lecture_hall_pattern(r) -> tuple[int, int] | None:
    """(l, j) if c = (l, j-1, l-1, j-1, l-1, ...) with equality on lambda_1."""
    if not r.first_equality or r.k < 2:
        return None
    l, j = r.c[0], r.c[1] + 1
    expected = tuple([l] + [(j - 1) if p % 2 == 0 else (l - 1) for p in range(2, r.k + 1)])
    return (l, j) if r.c == expected else None


def bivariate_form(sys: ConstraintSystem) -> tuple[ProductForm, list[int]]:
    if sys.kind == "integer_matrix":
        form = gfe.gf_two_variable(sys.matrix, sys.equality)
    elif sys.kind == "rational":
        r = sys.rational
        if r.is_plain():
            form = gfe.gf_two_variable_rational(r.a, r.first_equality)
        elif (params := _lecture_hall_pattern(r)) is not None:
            form = gfe.gf_lecture_hall_generalized(r.a, *params)
        else:
            raise UsageError(
                "no two-variable form for these first-row coefficients; "
                "use a plain ratio chain or the c = (l, j-1, l-1, ...) equality pattern"
            )
    elif sys.kind == "lecture_hall_variant":
        form = gfe.gf_lecture_hall_variant_2var(sys.k, sys.l, sys.j, sys.first_equality)
    else:
        form = gfe.gf_alpha_beta(sys.alpha, sys.beta, sys.k)
    return form, [o + e for o, e in form.factors]


def form_json(form: ProductForm, b, verified: bool) -> dict:
    return {
        "numerator": [[str(dx), str(dy), str(c)] for (dx, dy), c in form.numerator.items()],
        "denominator": [
            [str(o), str(e), str(m)] for (o, e), m in sorted(form.factor_counts().items())
        ],
        "b": [str(v) for v in b],
        "verified": verified,
    }


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load(path: str) -> ConstraintSystem:
    try:
        text = Path(path).read_bytes().decode("utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_system(text).system


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def cmd_gf(args, two_variable: bool = False) -> int:
    sys_ = _load(args.file)
    form, b = bivariate_form(sys_) if two_variable else univariate_form(sys_, not args.no_guard)
    report = verify(form, sys_, args.trunc, bivariate=two_variable)
    text = f"{render(form)}\nb = {tuple(b)}\nverified to N={args.trunc}: {report.describe()}"
    _emit(args, text, form_json(form, b, report.passed))
    return 0


def cmd_verify(args) -> int:
    sys_ = _load(args.file)
    if args.product is not None:
        # check a user-supplied product instead of the derived one
        b = _int_list(args.product, "--product")
        form = ProductForm.univariate(b)
    else:
        form, b = univariate_form(sys_, not args.no_guard)
    report = verify(form, sys_, args.trunc)
    payload = form_json(form, b, report.passed)
    if not report.passed:
        (dx, dy), want, got = report.first_mismatch
        payload["mismatch"] = {"degree": str(dx), "expected": str(want), "actual": str(got)}
    _emit(args, "pass" if report.passed else report.describe(), payload)
    return 0 if report.passed else 2


def cmd_theta(args) -> int:
    sys_ = _load(args.file)
    if sys_.kind != "integer_matrix":
        raise UsageError("theta needs a matrix-mode system")
    if (args.lam is None) == (args.parts is None):
        raise UsageError("give exactly one of --lambda or --parts")
    if args.lam is not None:
        out = gfe.theta_map(sys_.matrix, _int_list(args.lam, "--lambda"))
    else:
        out = gfe.theta_inverse(sys_.matrix, _int_list(args.parts, "--parts"))
    _emit(args, ",".join(map(str, out)), {"result": [str(v) for v in out]})
    return 0


def cmd_inverse(args) -> int:
    c = _int_list(args.seq, "--seq")
    con = matrix_from_sequence(c)
    spec = EqualitySpec(frozenset({1})) if con.equality_first else EqualitySpec()
    sys_ = ConstraintSystem.integer_matrix(con.A, spec)
    target = ProductForm.univariate(c)
    report = verify(target, sys_, args.trunc)
    rows = [" ".join(f"{v:>3}" for v in row) for row in con.A.entries]
    lines = ["A ="] + rows
    lines.append(f"first constraint holds with equality: {'yes' if con.equality_first else 'no'}")
    lines.append(
        f"verified to N={args.trunc}" if report.passed else f"NOT verified: {report.describe()}"
    )
    payload = {
        "A": [[str(v) for v in row] for row in con.A.entries],
        "equality_first": con.equality_first,
        "verified": report.passed,
    }
    _emit(args, "\n".join(lines), payload)
    return 0 if report.passed else 2


def cmd_infer(args) -> int:
    sys_ = _load(args.file)
    counts = count_by_weight(sys_, args.trunc)
    mults = infer_product_form(TruncatedSeries.from_list(counts), args.trunc)
    text = " ".join(f"{m}:{c}" for m, c in sorted(mults.items())) or "(empty)"
    _emit(args, text, {"factors": [[str(m), str(c)] for m, c in sorted(mults.items())]})
    return 0


def cmd_expand(args) -> int:
    sys_ = _load(args.file)
    form, _ = univariate_form(sys_, not args.no_guard)
    coeffs = expand(form, args.trunc).diagonal().as_list()
    _emit(args, " ".join(map(str, coeffs)), {"coefficients": [str(v) for v in coeffs]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--trunc", type=int, default=argparse.SUPPRESS, metavar="N")
    common.add_argument("--no-guard", action="store_true", default=argparse.SUPPRESS,
                        help="skip the empirical first-part check for rational systems")

    parser = argparse.ArgumentParser(
        prog="gfkit", parents=[common],
        description="Product generating functions for linear constraint systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, file=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if file:
            p.add_argument("file")
        return p

    add("gf", "print the closed form")
    add("gf2", "print the two-variable (odd/even) closed form")
    p = add("verify", "check the closed form against brute-force enumeration")
    p.add_argument("--product", metavar="B1,B2,...",
                   help="verify prod 1/(1-q^Bi) instead of the derived form")
    p = add("theta", "map a sequence through the weight-preserving bijection")
    p.add_argument("--lambda", dest="lam", metavar="A,B,...")
    p.add_argument("--parts", metavar="R1,R2,...")
    p = add("inverse", "build a constraint matrix for prod 1/(1-q^c_i)", file=False)
    p.add_argument("--seq", required=True, metavar="C1,C2,...")
    add("infer", "inverse Euler transform of the enumerated series")
    add("expand", "series coefficients of the closed form")
    return parser


COMMANDS = {
    "gf": cmd_gf,
    "gf2": lambda a: cmd_gf(a, two_variable=True),
    "verify": cmd_verify,
    "theta": cmd_theta,
    "inverse": cmd_inverse,
    "infer": cmd_infer,
    "expand": cmd_expand,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    for name, default in (("format", "text"), ("trunc", DEFAULT_TRUNC), ("no_guard", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.trunc < 0:
        print("gfkit: error: --trunc must be nonnegative", file=sys.stderr)
        return 1
    try:
        return COMMANDS[args.command](args)
    except GfkitError as exc:
        where = f"{args.file}:" if getattr(args, "file", None) else ""
        print(f"gfkit: {where}{exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
