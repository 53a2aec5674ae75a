"""Line-oriented text format (``.gfk``) for a single constraint system.

Matrix mode::

    k=4
    L1 >= 2 L2 - L3
    L2 >= 2 L3 - L4
    L3 >= 2 L4
    equal: 1          # optional: constraints held with equality
    offset: 0,0,0,0   # optional: additive offsets d_i

Rows that are not given default to L_i >= 0.  A row's right-hand side is
``[+|-] term (('+'|'-') term)*`` where a term is ``<int>? L<j>`` with j > i,
or the literal 0.

Other modes (one header each)::

    ratios: 4/3 3/2 2/1          # lambda_i >= (n_i/d_i) lambda_{i+1}
    first: 1 0 0 0               # optional c_1 .. c_k
    lhv: k l j                   # lecture-hall variant
    alphabeta: alpha beta k

``equal: 1`` is also accepted in ``ratios`` and ``lhv`` modes and makes the
first constraint an equation.  ``#`` starts a comment; LF and CRLF both work.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import GfkitError
from .exactmat import ConstraintMatrix
from .systems import ConstraintSystem, EqualitySpec, RationalSystem


class DslError(GfkitError):
    kind = "error"

    def __init__(self, line: int, column: int, message: str, expected: tuple[str, ...] = ()):
        self.line, self.column, self.message, self.expected = line, column, message, expected
        text = f"line {line}, column {column}: {self.kind}: {message}"
        if expected:
            text += f" (expected {' or '.join(expected)})"
        super().__init__(text)


class DslSyntaxError(DslError):
    kind = "syntax error"


class DslSemanticError(DslError):
    kind = "semantic error"


@dataclass(frozen=True)
class SystemDocument:
    system: ConstraintSystem
    source: str | None = field(default=None, compare=False)


_KEYWORDS = ("k", "equal", "offset", "ratios", "first", "lhv", "alphabeta")
_TOKEN = re.compile(r"\s*(?:(?P<var>L(?P<idx>\d+))|(?P<int>\d+)|(?P<op>[+-])|(?P<bad>\S))")


def _int_list(text: str, line: int, col: int, sep: str) -> list[tuple[int, int]]:
    """Parse integers separated by ``sep`` (',' or whitespace) with their columns."""
    out = []
    pattern = r"\s*(-?\d+)\s*(,|$)" if sep == "," else r"\s*(-?\d+)(\s+|$)"
    pos = 0
    stripped = text.rstrip()
    if not stripped.strip():
        raise DslSyntaxError(line, col, "empty list", ("an integer",))
    while pos < len(stripped):
        m = re.compile(pattern).match(stripped, pos)
        if not m or m.end() == pos:
            bad = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip())
            raise DslSyntaxError(line, col + bad, f"unexpected {stripped[bad:bad + 8]!r}",
                                 ("an integer",))
        out.append((int(m.group(1)), col + m.start(1)))
        pos = m.end()
        if sep == "," and m.group(2) == "," and pos >= len(stripped):
            raise DslSyntaxError(line, col + pos, "trailing comma", ("an integer",))
    return out


def _tokens(body: str, line: int, col: int) -> list[tuple[str, int, int]]:
    out = []
    for m in _TOKEN.finditer(body):
        c = col + m.start(m.lastgroup)
        if m.group("bad"):
            raise DslSyntaxError(line, c, f"unexpected character {m.group('bad')!r}",
                                 ("an integer", "L<j>", "'+'", "'-'"))
        if m.group("var"):
            out.append(("var", int(m.group("idx")), c))
        elif m.group("int"):
            out.append(("int", int(m.group("int")), c))
        else:
            out.append(("op", -1 if m.group("op") == "-" else 1, c))
    return out


def _parse_row(body: str, line: int, col: int, i: int) -> dict[int, int]:
    """Right-hand side of ``L<i> >= ...`` as {j: coefficient}."""
    toks = _tokens(body, line, col)
    end_col = col + len(body.rstrip())
    coeffs: dict[int, int] = {}
    pos = 0

    def peek(offset=0):
        return toks[pos + offset] if pos + offset < len(toks) else None

    sign = 1
    if peek() and peek()[0] == "op":
        sign = peek()[1]
        pos += 1
    while True:
        t = peek()
        if t is None:
            raise DslSyntaxError(line, end_col + 1, "missing term", ("an integer", "L<j>"))
        if t[0] == "int" and peek(1) and peek(1)[0] == "var":
            coef, (_, j, jc) = t[1], peek(1)
            pos += 2
        elif t[0] == "var":
            coef, j, jc = 1, t[1], t[2]
            pos += 1
        elif t[0] == "int" and t[1] == 0:
            coef, j = 0, None
            pos += 1
        elif t[0] == "int":
            raise DslSyntaxError(line, t[2], "constant terms other than 0 are not allowed",
                                 ("L<j>",))
        else:
            raise DslSyntaxError(line, t[2], "operator without a term", ("an integer", "L<j>"))
        if j is not None:
            if j <= i:
                raise DslSemanticError(line, jc, f"L{i} may only depend on later parts, got L{j}")
            coeffs[j] = coeffs.get(j, 0) + sign * coef
        t = peek()
        if t is None:
            return coeffs
        if t[0] != "op":
            raise DslSyntaxError(line, t[2], "missing operator between terms", ("'+'", "'-'"))
        sign = t[1]
        pos += 1


def parse_system(text: str) -> SystemDocument:
    header: dict[str, tuple] = {}
    rows: dict[int, tuple[dict[int, int], int, int]] = {}
    mode = None
    mode_pos = (1, 1)

    def set_mode(new, ln, c):
        nonlocal mode, mode_pos
        if mode is not None and mode != new:
            raise DslSemanticError(ln, c, f"{new} input conflicts with {mode} input on line {mode_pos[0]}")
        mode, mode_pos = new, (ln, c)

    for ln, raw in enumerate(text.splitlines(), start=1):
        raw = raw.rstrip("\r")
        code = raw.split("#", 1)[0]
        if not code.strip():
            continue
        indent = len(code) - len(code.lstrip())
        col0 = indent + 1
        stripped = code.strip()

        m = re.match(r"L(\d+)\s*>=\s*", stripped)
        if m:
            set_mode("matrix", ln, col0)
            i = int(m.group(1))
            if i in rows:
                raise DslSemanticError(ln, col0, f"constraint for L{i} given twice")
            rows[i] = (_parse_row(stripped[m.end():], ln, col0 + m.end(), i), ln, col0)
            continue
        if stripped.startswith("L"):
            pos = re.match(r"L\d*\s*", stripped).end()
            raise DslSyntaxError(ln, col0 + pos, "malformed constraint", ("'>='",))

        m = re.match(r"k\s*=\s*", stripped)
        key = "k" if m else None
        if not m:
            m = re.match(r"([A-Za-z]+)\s*:\s*", stripped)
            if not m:
                raise DslSyntaxError(ln, col0, f"cannot read {stripped[:12]!r}",
                                     ("k=<int>", "L<i> >= ...", "<keyword>:"))
            key = m.group(1)
            if key not in _KEYWORDS or key == "k":
                raise DslSyntaxError(ln, col0, f"unknown keyword {key!r}",
                                     tuple(f"'{w}:'" for w in _KEYWORDS if w != "k"))
        if key in header:
            raise DslSemanticError(ln, col0, f"{key} given twice")
        body, bcol = stripped[m.end():], col0 + m.end()

        if key == "k":
            set_mode("matrix", ln, col0)
            if not re.fullmatch(r"\d+\s*", body):
                raise DslSyntaxError(ln, bcol, f"bad dimension {body!r}", ("a positive integer",))
            header["k"] = (int(body), ln, bcol)
        elif key in ("equal", "offset"):
            header[key] = (_int_list(body, ln, bcol, ","), ln, bcol)
        elif key == "ratios":
            set_mode("ratios", ln, col0)
            ratios = []
            for rm in re.finditer(r"\S+", body):
                tok = rm.group()
                tm = re.fullmatch(r"(\d+)(?:/(\d+))?", tok)
                if not tm:
                    raise DslSyntaxError(ln, bcol + rm.start(), f"bad ratio {tok!r}", ("n/d",))
                n, d = int(tm.group(1)), int(tm.group(2) or 1)
                if n < 1 or d < 1:
                    raise DslSemanticError(ln, bcol + rm.start(), f"ratio {tok} is not positive")
                ratios.append((n, d))
            header["ratios"] = (ratios, ln, bcol)
        elif key == "first":
            header["first"] = (_int_list(body, ln, bcol, " "), ln, bcol)
        else:
            set_mode(key, ln, col0)
            vals = _int_list(body, ln, bcol, " ")
            if len(vals) != 3:
                raise DslSyntaxError(ln, bcol, f"{key} takes 3 integers, got {len(vals)}",
                                     ("3 integers",))
            header[key] = (vals, ln, bcol)

    if mode is None:
        raise DslSyntaxError(1, 1, "no system given", ("k=<int>", "ratios:", "lhv:", "alphabeta:"))
    return SystemDocument(_build(mode, header, rows), text)


def _build(mode, header, rows) -> ConstraintSystem:
    equal = header.get("equal")
    offset = header.get("offset")
    if mode != "ratios" and "first" in header:
        _, ln, c = header["first"]
        raise DslSemanticError(ln, c, "first: only applies to ratios mode")

    def only_first_equality():
        if not equal:
            return False
        vals, ln, c = equal
        for v, vc in vals:
            if v != 1:
                raise DslSemanticError(ln, vc, f"only equal: 1 is supported in {mode} mode")
        return True

    if mode != "matrix" and offset:
        raise DslSemanticError(offset[1], offset[2], "offset: only applies to matrix mode")

    if mode == "matrix":
        if "k" not in header:
            ln, c = min((r[1], r[2]) for r in rows.values())
            raise DslSemanticError(ln, c, "matrix rows need a k=<int> header")
        k, kln, kc = header["k"]
        if k < 1:
            raise DslSemanticError(kln, kc, "k must be positive")
        entries = {}
        for i, (coeffs, ln, c) in rows.items():
            if not 1 <= i <= k:
                raise DslSemanticError(ln, c, f"L{i} is outside 1..{k}")
            for j, v in coeffs.items():
                if j > k:
                    raise DslSemanticError(ln, c, f"L{i} refers to L{j} but k={k}")
                entries[(i, j)] = v
        S = frozenset()
        if equal:
            vals, ln, c = equal
            for v, vc in vals:
                if not 1 <= v <= k:
                    raise DslSemanticError(ln, vc, f"equality index {v} outside 1..{k}")
            S = frozenset(v for v, _ in vals)
        d = None
        if offset:
            vals, ln, c = offset
            if len(vals) != k:
                raise DslSemanticError(ln, c, f"offset needs {k} values, got {len(vals)}")
            for v, vc in vals:
                if v < 0:
                    raise DslSemanticError(ln, vc, f"offset {v} is negative")
            d = tuple(v for v, _ in vals)
        return ConstraintSystem.integer_matrix(
            ConstraintMatrix.from_entries(k, entries), EqualitySpec(S, d)
        )

    if mode == "ratios":
        ratios, ln, c = header["ratios"]
        first = None
        if "first" in header:
            vals, fln, fc = header["first"]
            if len(vals) != len(ratios) + 1:
                raise DslSemanticError(
                    fln, fc, f"first: needs {len(ratios) + 1} coefficients, got {len(vals)}"
                )
            first = [v for v, _ in vals]
        sys = RationalSystem.from_ratios(ratios, first, only_first_equality())
        return ConstraintSystem.from_rational(sys)

    vals, ln, c = header[mode]
    x, y, z = (v for v, _ in vals)
    try:
        if mode == "lhv":
            return ConstraintSystem.lecture_hall_variant(x, y, z, only_first_equality())
        if equal:
            raise DslSemanticError(equal[1], equal[2], "equal: does not apply to alphabeta mode")
        return ConstraintSystem.alpha_beta(x, y, z)
    except DslError:
        raise
    except GfkitError as exc:
        raise DslSemanticError(ln, c, str(exc)) from None


def render_system(sys: ConstraintSystem) -> str:
    """Inverse of parse_system up to formatting."""
    lines = []
    if sys.kind == "integer_matrix":
        lines.append(f"k={sys.k}")
        for i, row in enumerate(sys.matrix.entries, start=1):
            terms = [(j, v) for j, v in enumerate(row, start=1) if v]
            if not terms:
                continue
            out = []
            for n, (j, v) in enumerate(terms):
                mag = "" if abs(v) == 1 else f"{abs(v)} "
                op = ("- " if v < 0 else "") if n == 0 else ("- " if v < 0 else "+ ")
                out.append(f"{op}{mag}L{j}")
            lines.append(f"L{i} >= " + " ".join(out))
        if sys.equality.S:
            lines.append("equal: " + ",".join(map(str, sorted(sys.equality.S))))
        if sys.equality.d is not None:
            lines.append("offset: " + ",".join(map(str, sys.equality.d)))
    elif sys.kind == "rational":
        r = sys.rational
        lines.append("ratios: " + " ".join(f"{f.numerator}/{f.denominator}" for f in r.ratios()))
        if not r.is_plain():
            lines.append("first: " + " ".join(map(str, r.c)))
        if r.first_equality:
            lines.append("equal: 1")
    elif sys.kind == "lecture_hall_variant":
        lines.append(f"lhv: {sys.k} {sys.l} {sys.j}")
        if sys.first_equality:
            lines.append("equal: 1")
    else:
        lines.append(f"alphabeta: {sys.alpha} {sys.beta} {sys.k}")
    return "\n".join(lines) + "\n"
