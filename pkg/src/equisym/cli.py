"""Command-line front end: map/polynomial parsing, verb dispatch,
deterministic text or JSON output.

Exit codes: 0 success, 1 domain error (bad input, singular matrix,
degenerate family member), 2 resource cap exceeded."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .algebra import (
    CycField,
    CycNum,
    DEFAULT_PRECISION,
    FMatrix,
    MPoly,
    common_field,
    cyclo_field,
)
from .autgroup import (
    AutOptions,
    BadReduction,
    EliminationDegenerate,
    ResourceCap,
    automorphism_group_p2,
    modp_cycle_filter,
    periodic_points,
)
from .dynmaps import (
    ProjMap,
    aut_bound,
    doyle_mcmullen,
    equivariant_combination,
    klein_map,
    macaulay_resultant,
    make_map,
    is_automorphism,
    wedge_map,
)
from .groups import (
    ClosureCapExceeded,
    catalog_from_label,
    linear_characters,
    linear_closure,
)

CATALOG_LABELS = (
    "pgl2:cyclic:n=<n>", "pgl2:dihedral:n=<n>", "pgl2:tetrahedral",
    "pgl2:octahedral", "pgl2:icosahedral",
    "pgl3:A:n=<n>,a=<a>,b=<b>", "pgl3:B1:p=<p>,q=<q>", "pgl3:B2:p=<p>",
    "pgl3:B3:p=<p>", "pgl3:B4:p=<p>", "pgl3:C:n=<n>,a=<a>,b=<b>",
    "pgl3:D:n=<n>,a=<a>,b=<b>,x=<x>,y=<y>",
    "pgl3:E", "pgl3:F", "pgl3:G", "pgl3:H", "pgl3:I", "pgl3:J",
)
from .invariants import (
    equivariant_molien,
    equivariant_space,
    invariant_space,
    molien,
)


class MapParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


# --- polynomial / map parsing -------------------------------------------------

_VAR_INDEX = {"x": 0, "y": 1, "z": 2}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise MapParseError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected '{ch}'")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    # atom := rational | var | z<digits> (cyclotomic literal) | '(' expr ')'
    def atom(self, ctx):
        c = self.peek()
        if c == "(":
            self.eat("(")
            e = self.expr(ctx)
            self.eat(")")
            return e
        if c.isdigit():
            n = self.integer()
            if self.peek() == "/":
                self.eat("/")
                d = self.integer()
                if d == 0:
                    self.error("zero denominator")
                return ("const", Fraction(n, d))
            return ("const", Fraction(n))
        if c and c in "xyz":
            self.pos += 1
            if c == "z" and self.pos < len(self.text) and self.text[self.pos].isdigit():
                m = self.integer()
                if m < 1:
                    self.error("cyclotomic literal conductor must be >= 1")
                return ("zeta", m)
            return ("var", _VAR_INDEX[c])
        self.error("expected a number, variable, cyclotomic literal, or '('")

    def factor(self, ctx):
        base = self.atom(ctx)
        if self.peek() == "^":
            self.eat("^")
            neg = False
            if self.peek() == "-":
                self.eat("-")
                neg = True
            e = self.integer()
            if neg:
                if base[0] != "zeta":
                    self.error("negative exponents only on roots of unity")
                return ("pow", base, -e)
            return ("pow", base, e)
        return base

    def term(self, ctx):
        factors = [self.factor(ctx)]
        while True:
            c = self.peek()
            if c == "*":
                self.eat("*")
                factors.append(self.factor(ctx))
            elif c.isdigit() or (c and c in "xyz") or c == "(":
                factors.append(self.factor(ctx))  # implicit product (e.g. 2x^2y)
            else:
                break
        return ("mul", factors)

    def expr(self, ctx):
        sign = 1
        if self.peek() == "-":
            self.eat("-")
            sign = -1
        elif self.peek() == "+":
            self.eat("+")
        terms = [(sign, self.term(ctx))]
        while self.peek() and self.peek() in "+-":
            op = self.peek()
            self.eat(op)
            terms.append((1 if op == "+" else -1, self.term(ctx)))
        return ("sum", terms)


def _collect_conductors(node, acc):
    tag = node[0]
    if tag == "zeta":
        acc.add(node[1])
    elif tag == "pow":
        _collect_conductors(node[1], acc)
    elif tag == "mul":
        for f in node[1]:
            _collect_conductors(f, acc)
    elif tag == "sum":
        for _, t in node[1]:
            _collect_conductors(t, acc)


def _eval_node(node, field: CycField, nvars: int) -> MPoly:
    tag = node[0]
    if tag == "const":
        return MPoly.constant(field, nvars, node[1])
    if tag == "var":
        if node[1] >= nvars:
            raise MapParseError("variable out of range for this dimension", 0)
        return MPoly.variable(field, nvars, node[1])
    if tag == "zeta":
        m = node[1]
        return MPoly.constant(field, nvars, field.embed(cyclo_field(m).zeta(1)))
    if tag == "pow":
        base = _eval_node(node[1], field, nvars)
        e = node[2]
        if e < 0:
            if base.is_zero() or base.total_degree() != 0:
                raise MapParseError("negative exponent on a non-constant", 0)
            c = base.leading_term()[1]
            return MPoly.constant(field, nvars, c.inverse() ** (-e))
        return base ** e
    if tag == "mul":
        out = MPoly.constant(field, nvars, 1)
        for f in node[1]:
            out = out * _eval_node(f, field, nvars)
        return out
    if tag == "sum":
        out = MPoly.zero(field, nvars)
        for sgn, t in node[1]:
            p = _eval_node(t, field, nvars)
            out = out + (p if sgn > 0 else -p)
        return out
    raise AssertionError(tag)


def parse_poly(text: str, nvars: int, conductor: int | None = None) -> MPoly:
    p = _Parser(text)
    node = p.expr(None)
    p.skip_ws()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    conds = set()
    _collect_conductors(node, conds)
    m = 1
    for c in conds:
        m = math.lcm(m, c)
    if conductor is not None:
        m = math.lcm(m, conductor)
    return _eval_node(node, cyclo_field(m), nvars)


def parse_map(text: str, conductor: int | None = None) -> ProjMap:
    p = _Parser(text)
    opener = p.peek()
    if opener not in "[(":
        p.error("map must start with '[' or '('")
    closer = "]" if opener == "[" else ")"
    p.eat(opener)
    nodes = [p.expr(None)]
    while p.peek() and p.peek() in ",:":
        p.eat(p.peek())
        nodes.append(p.expr(None))
    p.eat(closer)
    p.skip_ws()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    if len(nodes) not in (2, 3):
        raise MapParseError("expected 2 or 3 coordinates", 0)
    conds = set()
    for n in nodes:
        _collect_conductors(n, conds)
    m = 1
    for c in conds:
        m = math.lcm(m, c)
    if conductor is not None:
        m = math.lcm(m, conductor)
    field = cyclo_field(m)
    nvars = len(nodes)
    coords = [_eval_node(n, field, nvars) for n in nodes]
    return make_map(coords)


# --- deterministic formatting ---------------------------------------------------

def format_cyc(c: CycNum) -> str:
    if c.is_rational():
        return str(c.rational_value())
    m = c.field.conductor
    terms = []
    for k, q in enumerate(c.coeffs):
        if q == 0:
            continue
        if k == 0:
            terms.append(str(q))
            continue
        mono = f"z{m}" if k == 1 else f"z{m}^{k}"
        if q == 1:
            terms.append(mono)
        elif q == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{q}*{mono}")
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


_VAR_NAMES = ("x", "y", "z")


def format_poly(p: MPoly) -> str:
    if p.is_zero():
        return "0"
    from .algebra.mpoly import _grlex_key
    items = sorted(p.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
    parts = []
    for e, c in items:
        mono = "*".join(
            (_VAR_NAMES[i] if k == 1 else f"{_VAR_NAMES[i]}^{k}")
            for i, k in enumerate(e) if k)
        cs = format_cyc(c)
        if any(op in cs[1:] for op in "+-"):
            cs = f"({cs})"
        if mono:
            if cs == "1":
                term = mono
            elif cs == "-1":
                term = f"-{mono}"
            else:
                term = f"{cs}*{mono}"
        else:
            term = cs
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def format_map(f: ProjMap) -> str:
    return "[" + ", ".join(format_poly(c) for c in f.coords) + "]"


def format_matrix(m: FMatrix) -> list:
    return [[format_cyc(c) for c in row] for row in m.rows]


def format_point(p) -> str:
    return "(" + " : ".join(format_cyc(c) for c in p.coords) + ")"


def format_series(s) -> str:
    parts = []
    for k, c in enumerate(s.coeffs):
        if c.is_zero():
            continue
        cs = format_cyc(c)
        if k == 0:
            parts.append(cs)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
    out = parts[0] if parts else "0"
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out + f" + O(t^{s.precision})"


# --- dispatch -------------------------------------------------------------------

class _Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, payload: dict, text_lines):
        if self.as_json:
            print(json.dumps(payload, sort_keys=True))
        else:
            for line in text_lines:
                print(line)


def _group_from_label(label: str, linear: bool):
    entry = catalog_from_label(label)
    return entry, (entry.linear_group() if linear else entry.projective_group())


def _default_precision() -> int:
    env = os.environ.get("EQUISYM_PRECISION")
    return int(env) if env else DEFAULT_PRECISION


def _cmd_molien(args, out, equivariant: bool):
    entry = catalog_from_label(args.group)
    group = linear_closure(entry.generators)
    chars = linear_characters(group)
    if not 0 <= args.char < len(chars):
        raise ValueError(f"character index out of range (group has {len(chars)})")
    fn = equivariant_molien if equivariant else molien
    series = fn(group, chars[args.char], args.prec)
    text = format_series(series)
    out.emit({"group": args.group, "character": args.char, "series": text,
              "coefficients": [format_cyc(c) for c in series.coeffs]},
             [text])
    return 0


def _cmd_space(args, out, equivariant: bool):
    entry = catalog_from_label(args.group)
    group = linear_closure(entry.generators)
    chars = linear_characters(group)
    if not 0 <= args.char < len(chars):
        raise ValueError(f"character index out of range (group has {len(chars)})")
    if equivariant:
        basis = equivariant_space(group, chars[args.char], args.degree)
        lines = ["[" + ", ".join(format_poly(c) for c in b) + "]" for b in basis.basis]
    else:
        basis = invariant_space(group, chars[args.char], args.degree)
        lines = [format_poly(b) for b in basis.basis]
    out.emit({"group": args.group, "character": args.char, "degree": args.degree,
              "dimension": basis.dimension, "basis": lines},
             [f"dimension {basis.dimension}"] + lines)
    return 0


def _cmd_construct(args, out):
    nvars = 2 if args.route in ("klein", "dm") else None
    if args.route == "klein":
        f = klein_map(parse_poly(args.poly, 2, args.conductor))
    elif args.route == "dm":
        field = cyclo_field(args.conductor or 1)
        fp = parse_poly(args.f, 2, args.conductor) if args.f else MPoly.zero(field, 2)
        gp = parse_poly(args.g, 2, args.conductor) if args.g else MPoly.zero(field, 2)
        f = doyle_mcmullen(fp, gp)
    elif args.route == "wedge":
        polys = [s for s in args.polys.split(";") if s.strip()]
        nv = len(polys) + 1
        f = wedge_map([parse_poly(s, nv, args.conductor) for s in polys])
    elif args.route == "combine":
        maps = [parse_map(s, args.conductor) for s in args.equivariants.split(";") if s.strip()]
        nv = maps[0].N + 1
        mults = [parse_poly(s, nv, args.conductor) for s in args.multipliers.split(";") if s.strip()]
        f = equivariant_combination([m.coords for m in maps], mults)
    else:
        raise ValueError(f"unknown construction route {args.route!r}")
    res = macaulay_resultant(f, seed=args.seed)
    out.emit({"map": format_map(f), "degree": f.degree,
              "conductor": f.field.conductor, "is_morphism": not res.is_zero()},
             [format_map(f), f"degree {f.degree}",
              f"morphism: {'yes' if not res.is_zero() else 'no'}"])
    return 0


def _cmd_catalog(args, out):
    if not args.label:
        out.emit({"labels": list(CATALOG_LABELS)}, list(CATALOG_LABELS))
        return 0
    entry = catalog_from_label(args.label)
    gens = [format_matrix(g) for g in entry.generators]
    lines = [f"label {entry.label}", f"conductor {entry.conductor}",
             f"stated order {entry.stated_order}"]
    lines += [json.dumps(g) for g in gens]
    out.emit({"label": entry.label, "conductor": entry.conductor,
              "stated_order": entry.stated_order, "generators": gens}, lines)
    return 0


def _cmd_closure(args, out):
    entry, group = _group_from_label(args.group, args.linear)
    out.emit({"group": args.group, "linear": args.linear, "order": group.order},
             [f"order {group.order}"])
    return 0


def _cmd_autgroup(args, out):
    f = parse_map(args.map)
    opts = AutOptions(skip_period_3=args.skip_period_3,
                      modp_primes=tuple(int(p) for p in args.modp_primes.split(",")),
                      eliminant_degree_cap=args.cap, seed=args.seed)
    result = automorphism_group_p2(f, opts)
    elems = sorted((format_matrix(m) for m in result.elements), key=json.dumps)
    prov = {}
    for key, cand in result.provenance.items():
        mk = json.dumps(format_matrix(cand.matrix))
        prov[mk] = {"case": cand.case, "n": cand.n, "a": cand.a, "b": cand.b,
                    "triple": [format_point(p) for p in cand.triple]}
    out.emit({"map": format_map(result.map), "order": result.order,
              "elements": elems, "provenance": prov},
             [f"order {result.order}"] + [json.dumps(e) for e in elems])
    return 0


def _parse_matrix(text: str, conductor: int | None) -> FMatrix:
    rows = json.loads(text)
    n = len(rows)
    entries = [[None] * n for _ in range(n)]
    fields = [cyclo_field(conductor or 1)]
    parsed = [[parse_poly(str(e), 1, conductor) for e in row] for row in rows]
    for row in parsed:
        for p in row:
            fields.append(p.field)
    f = common_field(*fields)
    for i, row in enumerate(parsed):
        for j, p in enumerate(row):
            if p.total_degree() > 0:
                raise ValueError("matrix entries must be constants")
            entries[i][j] = f.embed(p.leading_term()[1]) if not p.is_zero() else f.zero()
    return FMatrix(f, entries)


def _cmd_verify(args, out):
    f = parse_map(args.map, args.conductor)
    m = _parse_matrix(args.matrix, args.conductor)
    ok = is_automorphism(f, m)
    out.emit({"map": format_map(f), "is_automorphism": ok},
             ["true" if ok else "false"])
    return 0


def _cmd_resultant(args, out):
    f = parse_map(args.map, args.conductor)
    res = macaulay_resultant(f, seed=args.seed)
    out.emit({"map": format_map(f), "resultant": format_cyc(res),
              "is_morphism": not res.is_zero()},
             [format_cyc(res)])
    return 0


def _cmd_bound(args, out):
    b = aut_bound(args.degree, args.dim)
    out.emit({"degree": args.degree, "dim": args.dim, "bound": b}, [str(b)])
    return 0


def _cmd_modp(args, out):
    f = parse_map(args.map)
    verdict = modp_cycle_filter(f, args.period, args.prime)
    out.emit({"map": format_map(f), "period": args.period, "prime": args.prime,
              "verdict": verdict}, [verdict])
    return 0


def _cmd_periodic(args, out):
    f = parse_map(args.map)
    ps = periodic_points(f, args.period, args.conductor, cap=args.cap, seed=args.seed)
    pts = sorted(format_point(p) for p in ps.points)
    flags = {format_point(p): e for p, e in zip(ps.points, ps.exactness)}
    out.emit({"map": format_map(f), "period": args.period,
              "conductor": args.conductor,
              "points": [{"point": p, "exact": flags[p]} for p in pts]},
             pts)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="equisym")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    sub = ap.add_subparsers(dest="verb", required=True)

    prec = _default_precision()

    p = sub.add_parser("molien")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--prec", type=int, default=prec)

    p = sub.add_parser("equi-molien")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--prec", type=int, default=prec)

    p = sub.add_parser("invariants")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("equivariants")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("construct")
    p.add_argument("route", choices=("klein", "dm", "wedge", "combine"))
    p.add_argument("--poly")
    p.add_argument("--f")
    p.add_argument("--g")
    p.add_argument("--polys")
    p.add_argument("--equivariants")
    p.add_argument("--multipliers")
    p.add_argument("--conductor", type=int)

    p = sub.add_parser("catalog")
    p.add_argument("label", nargs="?")

    p = sub.add_parser("closure")
    p.add_argument("--group", required=True)
    p.add_argument("--linear", action="store_true")

    p = sub.add_parser("autgroup")
    p.add_argument("map")
    p.add_argument("--skip-period-3", action="store_true")
    p.add_argument("--modp-primes", default="23,29,31")
    p.add_argument("--cap", type=int, default=800)

    p = sub.add_parser("verify")
    p.add_argument("--map", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--conductor", type=int)

    p = sub.add_parser("resultant")
    p.add_argument("map")
    p.add_argument("--conductor", type=int)

    p = sub.add_parser("bound")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)

    p = sub.add_parser("modp-filter")
    p.add_argument("map")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)

    p = sub.add_parser("periodic")
    p.add_argument("map")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--conductor", type=int, default=1)
    p.add_argument("--cap", type=int, default=800)

    return ap


_DISPATCH = {
    "molien": lambda a, o: _cmd_molien(a, o, False),
    "equi-molien": lambda a, o: _cmd_molien(a, o, True),
    "invariants": lambda a, o: _cmd_space(a, o, False),
    "equivariants": lambda a, o: _cmd_space(a, o, True),
    "construct": _cmd_construct,
    "catalog": _cmd_catalog,
    "closure": _cmd_closure,
    "autgroup": _cmd_autgroup,
    "verify": _cmd_verify,
    "resultant": _cmd_resultant,
    "bound": _cmd_bound,
    "modp-filter": _cmd_modp,
    "periodic": _cmd_periodic,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = _Output(args.format == "json")
    try:
        return _DISPATCH[args.verb](args, out)
    except (ResourceCap, ClosureCapExceeded) as e:
        _report_error(out, e, 2)
        return 2
    except (MapParseError, ValueError, ArithmeticError, ZeroDivisionError,
            EliminationDegenerate, BadReduction, KeyError) as e:
        _report_error(out, e, 1)
        return 1


def _report_error(out: _Output, e: Exception, code: int):
    if out.as_json:
        print(json.dumps({"error": {"type": type(e).__name__, "message": str(e),
                                    "exit_code": code}}, sort_keys=True))
    else:
        print(f"error: {e}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
