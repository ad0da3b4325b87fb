"""Command-line front end.

Parses the variety mini-language (Gr(k,n), P(n), OG(k,n), SG(k,n),
Fl(k1,...,km;n), products joined with 'x'), dispatches to the library,
and renders text tables or JSON reports.  Output is deterministic:
identical invocations produce byte-identical bytes, and fractions are
printed exactly, never as decimals.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chern, genus, sections
from .grassmann import ChowElement, Partition, RingContext, complement, integrate, multiply, transpose_dual
from .varieties import (
    VarietyDescriptor,
    classify,
    flag,
    grassmannian,
    hyperbolicity_threshold,
    known_counterexamples,
    lines_threshold,
    orthogonal,
    product,
    projective_space,
    symplectic,
)


class CLIError(ValueError):
    """User-input problem: bad syntax, bad flags, violated preconditions."""


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def done(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise CLIError(
                f"expected {ch!r} at position {self.pos} in {self.text!r}"
            )
        self.pos += 1

    def read_int(self, signed=False):
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise CLIError(
                f"expected integer at position {start} in {self.text!r}"
            )
        return int(self.text[start:self.pos])

    def read_name(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise CLIError(
                f"expected a name at position {start} in {self.text!r}"
            )
        return self.text[start:self.pos]


def parse_variety(spec: str) -> VarietyDescriptor:
    """Parse 'Gr(2,4)xP(2)'-style variety specifications."""
    sc = _Scanner(spec)
    factors = [_parse_factor(sc)]
    while not sc.done():
        if sc.peek() == "x":
            sc.pos += 1
            factors.append(_parse_factor(sc))
        else:
            raise CLIError(
                f"unexpected {sc.peek()!r} at position {sc.pos} in {spec!r}"
            )
    return product(*factors)


def _parse_factor(sc: _Scanner) -> VarietyDescriptor:
    start = sc.pos
    name = sc.read_name()
    if name == "Fl":
        sc.expect("(")
        ks = [sc.read_int()]
        while sc.peek() == ",":
            sc.pos += 1
            ks.append(sc.read_int())
        sc.expect(";")
        n = sc.read_int()
        sc.expect(")")
        return flag(ks, n)
    makers = {
        "P": (1, projective_space),
        "Gr": (2, grassmannian),
        "OG": (2, orthogonal),
        "SG": (2, symplectic),
    }
    if name not in makers:
        raise CLIError(
            f"unknown variety name {name!r} at position {start} in {sc.text!r}"
        )
    arity, maker = makers[name]
    sc.expect("(")
    args = [sc.read_int()]
    while sc.peek() == ",":
        sc.pos += 1
        args.append(sc.read_int())
    sc.expect(")")
    if len(args) != arity:
        raise CLIError(
            f"{name} takes {arity} argument(s), got {len(args)} in {sc.text!r}"
        )
    try:
        return maker(*args)
    except ValueError as err:
        raise CLIError(str(err)) from err


def render_variety(v: VarietyDescriptor) -> str:
    return v.name


def parse_chow(k: int, n: int, text: str) -> ChowElement:
    """Parse '3*s[2,1] + 5*s[1,1,1]'-style class expressions."""
    ctx = RingContext(k, n)
    sc = _Scanner(text)
    terms = {}
    sign = 1
    first = True
    while not sc.done():
        if not first:
            ch = sc.peek()
            if ch == "+":
                sign = 1
            elif ch == "-":
                sign = -1
            else:
                raise CLIError(
                    f"expected '+' or '-' at position {sc.pos} in {text!r}"
                )
            sc.pos += 1
        else:
            first = False
            if sc.peek() == "-":
                sign = -1
                sc.pos += 1
        coeff, lam = _parse_chow_term(sc)
        coeff *= sign
        sign = 1
        if not ctx.fits(lam):
            raise CLIError(f"{list(lam.parts)} does not fit the G({k},{n}) box")
        terms[lam] = terms.get(lam, 0) + coeff
    if first:
        raise CLIError(f"empty class expression {text!r}")
    return ChowElement(ctx, terms)


def _parse_chow_term(sc: _Scanner):
    if sc.peek().isdigit():
        coeff = sc.read_int()
        if sc.peek() == "*":
            sc.pos += 1
        else:
            return coeff, Partition()  # bare integer: multiple of the unit
    else:
        coeff = 1
    if sc.read_name() != "s":
        raise CLIError(f"expected 's[...]' in {sc.text!r}")
    sc.expect("[")
    parts = []
    if sc.peek() != "]":
        parts.append(sc.read_int())
        while sc.peek() == ",":
            sc.pos += 1
            parts.append(sc.read_int())
    sc.expect("]")
    try:
        return coeff, Partition(parts)
    except ValueError as err:
        raise CLIError(str(err)) from err


def parse_partition(text: str) -> Partition:
    sc = _Scanner(text)
    coeff, lam = _parse_chow_term(sc)
    if not sc.done() or coeff != 1:
        raise CLIError(f"expected a single partition expression, got {text!r}")
    return lam


def _parse_degrees(raw: str):
    try:
        return tuple(int(p) for p in raw.split(","))
    except ValueError as err:
        raise CLIError(f"bad degree list {raw!r}: expected d1,d2,...") from err


def _parse_range(raw: str):
    lo, sep, hi = raw.partition("..")
    if not sep:
        raise CLIError(f"bad range {raw!r}: expected lo..hi")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError as err:
        raise CLIError(f"bad range {raw!r}: expected lo..hi") from err
    if hi < lo:
        raise CLIError(f"bad range {raw!r}: empty")
    return lo, hi


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2)


def _eps_str(eps) -> str:
    return str(eps) if eps is not None else "-"


def _fmt_ints(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _classification_text(c) -> str:
    extra = ""
    if c.witness is not None:
        extra = f" witness=d{c.witness + 1}"
    if c.boundary:
        extra = " boundary=" + ",".join(f"d{i + 1}" for i in c.boundary)
    return c.kind + extra


def _cmd_info(args):
    v = parse_variety(args.variety)
    if args.json:
        return _json_text(v.to_json_dict())
    lines = [
        f"variety: {v.name}",
        f"picard rank: {v.m}",
        f"dimension: {v.D}",
        f"canonical coefficients: {_fmt_ints(v.a)}",
        f"hyperbolicity threshold: {_fmt_ints(hyperbolicity_threshold(v))}",
        f"lines threshold: {_fmt_ints(lines_threshold(v))}",
        f"line-space dimensions: {_fmt_ints(v.D - ai - 3 for ai in v.a)}",
    ]
    for note in v.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _cmd_threshold(args):
    v = parse_variety(args.variety)
    if args.json:
        return _json_text(
            {
                "variety": v.name,
                "hyperbolicity_threshold": hyperbolicity_threshold(v),
                "lines_threshold": lines_threshold(v),
                "paper_discrepancies": list(v.notes),
            }
        )
    return "\n".join(
        [
            f"{v.name}: hyperbolic for d_i >= {_fmt_ints(hyperbolicity_threshold(v))},"
            f" lines for some d_i <= {_fmt_ints(lines_threshold(v))}",
        ]
        + [f"note: {note}" for note in v.notes]
    )


def _classify_payload(v, degrees):
    c = classify(v, degrees)
    report = genus.hyperbolicity_certificate(v, degrees)
    return c, report


def _cmd_classify(args):
    v = parse_variety(args.variety)
    degrees = _parse_degrees(args.deg)
    try:
        c, report = _classify_payload(v, degrees)
        counterexamples = known_counterexamples(v, degrees)
    except ValueError as err:
        raise CLIError(str(err)) from err
    if args.json:
        return _json_text(
            {
                "variety": v.name,
                "degrees": list(degrees),
                "classification": c.to_json_dict(),
                "epsilon": str(report.epsilon) if report.epsilon is not None else None,
                "counterexamples": [e.to_json_dict() for e in counterexamples],
                "paper_discrepancies": list(v.notes),
            }
        )
    lines = [
        f"{v.name} deg={_fmt_ints(degrees)}: {_classification_text(c)},"
        f" threshold={_fmt_ints(hyperbolicity_threshold(v))},"
        f" epsilon={_eps_str(report.epsilon)}"
    ]
    for e in counterexamples:
        lines.append(f"counterexample [{e.citation}] ({e.condition}): {e.note}")
    return "\n".join(lines)


def _cmd_fano_class(args):
    try:
        report = chern.fano_class(args.d, args.N)
    except ValueError as err:
        raise CLIError(str(err)) from err
    if args.json:
        return _json_text(report.to_json_dict())
    lines = [
        f"class of the line scheme, d={report.d}, N={report.N}:",
        f"  {report.expansion.to_text()}",
        f"missing_class_ok: {report.missing_class_ok}",
    ]
    if report.line_count is not None:
        lines.append(f"line count: {report.line_count}")
    return "\n".join(lines)


def _cmd_line_count(args):
    try:
        count = chern.line_count(args.n)
    except ValueError as err:
        raise CLIError(str(err)) from err
    if args.json:
        return _json_text(
            {"n": args.n, "d": 2 * args.n - 3, "N": args.n + 1, "count": count}
        )
    return str(count)


def _cmd_schubert_mul(args):
    x = parse_chow(args.k, args.n, args.factors[0])
    for raw in args.factors[1:]:
        x = multiply(x, parse_chow(args.k, args.n, raw))
    if args.json:
        return _json_text(x.to_json_dict())
    return x.to_text()


def _cmd_schubert_integrate(args):
    x = parse_chow(args.k, args.n, args.expr)
    value = integrate(x)
    if args.json:
        return _json_text({"k": args.k, "n": args.n, "value": str(value)})
    return str(value)


def _cmd_schubert_dual(args):
    ctx = RingContext(args.k, args.n)
    lam = parse_partition(args.partition)
    try:
        comp = complement(ctx, lam)
        dual_ctx, conj = transpose_dual(ctx, lam)
    except ValueError as err:
        raise CLIError(str(err)) from err
    if args.json:
        return _json_text(
            {
                "k": args.k,
                "n": args.n,
                "partition": list(lam.parts),
                "complement": list(comp.parts),
                "dual_k": dual_ctx.k,
                "dual_partition": list(conj.parts),
            }
        )
    return "\n".join(
        [
            f"complement in G({args.k},{args.n}): s[{','.join(map(str, comp.parts))}]",
            f"transpose dual in G({dual_ctx.k},{dual_ctx.n}): s[{','.join(map(str, conj.parts))}]",
        ]
    )


def _cmd_genus_bound(args):
    v = parse_variety(args.variety)
    degrees = _parse_degrees(args.deg)
    try:
        report = genus.hyperbolicity_certificate(v, degrees)
    except ValueError as err:
        raise CLIError(str(err)) from err
    if args.json:
        return _json_text(report.to_json_dict())
    lines = [f"{v.name} deg={_fmt_ints(degrees)}"]
    for case in report.cases:
        where = "uniform" if case.j is None else f"j={case.j + 1}"
        coeffs = ", ".join(str(c) for c in case.coefficients)
        lines.append(f"case {case.case} ({where}): 2g-2 >= [{coeffs}] . e")
    lines.append(f"epsilon: {_eps_str(report.epsilon)} (binding case {report.binding.case})")
    for flag_text in report.ledger_flags:
        lines.append(f"flag: {flag_text}")
    return "\n".join(lines)


def _cmd_certify(args):
    v = parse_variety(args.variety)
    degrees = _parse_degrees(args.deg)
    try:
        c, report = _classify_payload(v, degrees)
    except ValueError as err:
        raise CLIError(str(err)) from err
    if args.json:
        return _json_text(
            {
                "variety": v.name,
                "degrees": list(degrees),
                "classification": c.to_json_dict(),
                "epsilon": str(report.epsilon) if report.epsilon is not None else None,
                "binding_case": report.binding.case,
            }
        )
    if report.epsilon is not None:
        return (
            f"{v.name} deg={_fmt_ints(degrees)}: certified epsilon="
            f"{report.epsilon} (case {report.binding.case}); {_classification_text(c)}"
        )
    return f"{v.name} deg={_fmt_ints(degrees)}: no certificate; {_classification_text(c)}"


def _cmd_section_dom(args):
    if args.grid:
        results = sections.grid_report()
    else:
        if args.n is None or args.d is None:
            raise CLIError("section-dom needs --n and --d (or --grid)")
        try:
            results = [sections.check_projective_space(args.n, args.d)]
        except ValueError as err:
            raise CLIError(str(err)) from err
    if args.json:
        return _json_text(
            {
                "entries": [r.to_json_dict() for r in results],
                "all_ok": all(r.ok for r in results),
            }
        )
    lines = ["n  d  rank  target  ok"]
    for r in results:
        lines.append(f"{r.n}  {r.d}  {r.rank}  {r.target_dim}  {'pass' if r.ok else 'FAIL'}")
    return "\n".join(lines)


def _cmd_sweep(args):
    v = parse_variety(args.variety)
    lo, hi = _parse_range(args.range)
    rows = []
    for t in range(lo, hi + 1):
        degrees = (t,) * v.m
        try:
            c, report = _classify_payload(v, degrees)
        except ValueError as err:
            raise CLIError(str(err)) from err
        rows.append((t, c, report.epsilon))
    if args.json:
        return _json_text(
            {
                "variety": v.name,
                "rows": [
                    {
                        "degree": t,
                        "classification": c.to_json_dict(),
                        "epsilon": str(eps) if eps is not None else None,
                    }
                    for t, c, eps in rows
                ],
            }
        )
    return "\n".join(
        f"d={t}  {_classification_text(c)}  epsilon={_eps_str(eps)}" for t, c, eps in rows
    )


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(message)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="alghyp",
        description="Exact thresholds and certificates for algebraic "
        "hyperbolicity of hypersurfaces in homogeneous varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--out", help="write output to FILE instead of stdout")
        return p

    p = add("info", _cmd_info, "describe a variety")
    p.add_argument("variety")

    p = add("threshold", _cmd_threshold, "hyperbolicity and line thresholds")
    p.add_argument("variety")

    p = add("classify", _cmd_classify, "classify a multidegree")
    p.add_argument("variety")
    p.add_argument("--deg", required=True, help="d1,d2,...")

    p = add("fano-class", _cmd_fano_class, "expansion of the line-scheme class")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True)

    p = add("line-count", _cmd_line_count, "finite line count on a hypersurface")
    p.add_argument("--n", type=int, required=True)

    ps = sub.add_parser("schubert", help="Schubert calculus in G(k,n)")
    ssub = ps.add_subparsers(dest="subcommand", required=True)

    def add_schubert(name, func):
        q = ssub.add_parser(name)
        q.set_defaults(func=func)
        q.add_argument("--k", type=int, required=True)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--json", action="store_true")
        q.add_argument("--out")
        return q

    q = add_schubert("mul", _cmd_schubert_mul)
    q.add_argument("factors", nargs="+", help="class expressions, e.g. 's[2,1]'")
    q = add_schubert("integrate", _cmd_schubert_integrate)
    q.add_argument("expr")
    q = add_schubert("dual", _cmd_schubert_dual)
    q.add_argument("partition", help="single class, e.g. 's[3,1]'")

    p = add("genus-bound", _cmd_genus_bound, "per-case genus lower bounds")
    p.add_argument("variety")
    p.add_argument("--deg", required=True)

    p = add("certify", _cmd_certify, "hyperbolicity certificate")
    p.add_argument("variety")
    p.add_argument("--deg", required=True)

    p = add("section-dom", _cmd_section_dom, "section-domination rank checks")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--grid", action="store_true", help="run the full desk-scale grid")

    p = add("sweep", _cmd_sweep, "classification and epsilon over a degree range")
    p.add_argument("variety")
    p.add_argument("--range", required=True, help="lo..hi")

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        text = args.func(args)
    except (CLIError, ValueError) as err:  # user input or violated precondition
        print(f"error: {err}", file=sys.stderr)
        return 1
    except Exception as err:  # internal invariant violation
        print(f"internal error: {err!r}", file=sys.stderr)
        return 2
    payload = text + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
