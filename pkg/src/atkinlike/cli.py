"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import atkin, congruence, extremal, faber, functional, hypergeom, modforms, rogers, verify
from .errors import AtkinError, InconsistentRoutes
from .series import Poly, QSeries, rat_from_json, rat_to_json, to_rat


@dataclass
class Output:
    data: dict
    text: list[str] = field(default_factory=list)
    latex: list[str] = field(default_factory=list)


# ------------------------------------------------------------------ rendering

def _latex_rat(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def series_latex(s: QSeries) -> str:
    parts = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        e = s.val + i
        a = abs(c)
        mono = "" if e == 0 else (s.var if e == 1 else f"{s.var}^{{{e}}}")
        body = (_latex_rat(a) if a != 1 or not mono else "") + mono
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        out = "0"
    else:
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        out += "".join(f" {sg} {b}" for sg, b in parts[1:])
    return f"{out} + O({s.var}^{{{s.prec}}})"


def _rat_list_text(values) -> str:
    return ", ".join(str(to_rat(v)) for v in values)


def _rats(values) -> list:
    return [rat_to_json(v) for v in values]


def _positive(name: str, lo: int = 1):
    def parse(s: str) -> int:
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"{name} must be at least {lo}")
        return v

    return parse


def _parse_poly(text: str) -> Poly:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc.msg}") from None
    if isinstance(d, dict):
        if "coefficients" not in d:
            raise ValueError("polynomial object needs a 'coefficients' list")
        d = d["coefficients"]
    if not isinstance(d, list) or isinstance(d, bool):
        raise ValueError("polynomial must be a JSON list of coefficients (ascending degree)")
    coeffs = []
    for c in d:
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise ValueError(f"bad coefficient {c!r}: use integers or 'n/d' strings")
        coeffs.append(rat_from_json(c))
    return Poly(coeffs)


def _parse_params(text: str) -> list[Fraction]:
    if not text.strip():
        return []
    return [to_rat(p.strip()) for p in text.split(",")]


# ------------------------------------------------------------------ commands

def _series_output(name: str, s: QSeries, extra: dict | None = None) -> Output:
    data = {"name": name, **(extra or {}), "series": s.to_json()}
    return Output(data, [f"{name} = {s!r}"], [f"{name} = {series_latex(s)}"])


def cmd_forms(args) -> Output:
    name, prec = args.name, args.precision
    table = {"E2": modforms.E2, "E4": modforms.E4, "E6": modforms.E6, "Delta": modforms.delta, "j": modforms.j_invariant}
    if name in table:
        return _series_output(name, table[name](prec))
    if name.startswith("G") and name[1:].isdigit():
        return _series_output(name, extremal.G(int(name[1:]), prec), {"weight": int(name[1:])})
    raise ValueError(f"unknown form {name!r}; choose E2, E4, E6, Delta, j or G<w>")


def cmd_extremal(args) -> Output:
    terms = args.terms
    routes = extremal.ROUTES if args.route == "all" else (args.route,)
    series = [extremal.extremal_form(args.weight, terms, r) for r in routes]
    if any(not s.agrees_with(series[0]) for s in series[1:]):
        raise InconsistentRoutes(f"routes disagree for weight {args.weight}")
    s = series[0]
    coeffs = [s[e] for e in range(terms)]
    data = {"weight": args.weight, "route": args.route, "terms": terms, "coefficients": _rats(coeffs)}
    return Output(data, [f"G_{args.weight} = {s!r}"], [f"G_{{{args.weight}}} = {series_latex(s)}"])


def cmd_atkin_poly(args) -> Output:
    r, n, fam = args.r, args.n, args.family
    if args.route == "recursive":
        P = atkin.atkin_poly_recursive(r, n, fam)
    elif args.route == "closed":
        P = atkin.atkin_poly_closed(r, n, fam)
    else:
        P = atkin.atkin_poly_recursive(r, n, fam)
        if atkin.atkin_poly_closed(r, n, fam) != P:
            raise InconsistentRoutes(f"{fam}_{{{n},{r}}}: recursion and closed formula differ")
    data = {"family": fam, "r": r, "n": n, "route": args.route, "polynomial": P.to_json()}
    return Output(data, [P.to_text()], [P.to_latex()])


def cmd_moments(args) -> Output:
    ms = list(functional.moments(args.count).moments)
    text = [f"L(j^{n}) = {m}" for n, m in enumerate(ms)]
    latex = [rf"\mathcal{{L}}(j^{{{n}}}) = {m}" for n, m in enumerate(ms)]
    return Output({"count": args.count, "moments": _rats(ms)}, text, latex)


def cmd_inner_product(args) -> Output:
    f, g = _parse_poly(args.f), _parse_poly(args.g)
    v = functional.inner_product(f, g)
    data = {"f": f.to_json(), "g": g.to_json(), "value": rat_to_json(v)}
    return Output(data, [str(v)], [_latex_rat(v)])


def cmd_faber(args) -> Output:
    routes = faber.FABER_ROUTES if args.route == "all" else (args.route,)
    polys = [faber.faber_poly(args.weight, args.n, r).poly for r in routes]
    if any(p != polys[0] for p in polys[1:]):
        raise InconsistentRoutes(f"F_{{{args.weight},{args.n}}}: routes disagree")
    P = polys[0]
    data = {"weight": args.weight, "n": args.n, "route": args.route, "polynomial": P.to_json()}
    return Output(data, [P.to_text()], [P.to_latex()])


def cmd_omega(args) -> Output:
    k, ell, kind = args.k, args.l, args.kind
    values = [faber.expansion_coeffs(kind, k, n)[ell] for n in range(args.count)]
    label = f"omega_{k},n({ell})" if kind == "omega" else f"Omega_{2 - k},n({ell})"
    text = [f"{label}: {_rat_list_text(values)}"]
    sym = r"\omega" if kind == "omega" else r"\Omega"
    idx = k if kind == "omega" else 2 - k
    latex = [rf"{sym}_{{{idx},{n}}}({ell}) = {_latex_rat(v)}" for n, v in enumerate(values)]
    data = {"kind": kind, "k": k, "l": ell, "count": args.count, "values": _rats(values)}
    return Output(data, text, latex)


def cmd_hyp(args) -> Output:
    prec = args.precision
    if args.g21 is not None:
        a, b = _parse_params(args.g21)
        s = hypergeom.g21_series(a, b, prec)
        name = f"2G1({a}, {b}; z)"
    else:
        upper, lower = _parse_params(args.upper), _parse_params(args.lower)
        s = hypergeom.pfq_series(upper, lower, prec)
        name = f"{len(upper)}F{len(lower)}({', '.join(map(str, upper))}; {', '.join(map(str, lower))}; z)"
    return _series_output(name, s)


def cmd_congruence(args) -> Output:
    p = args.prime
    ss = congruence.supersingular_poly(p)
    reduced = {name: congruence.reduce_poly_mod_p(f, p) for name, f in congruence.congruence_classes(p).items()}
    agree = all(v == ss for v in reduced.values())
    text = [f"ss_{p} = {ss.to_text()}"] + [f"{name} mod {p} = {v.to_text()}" for name, v in reduced.items()]
    text.append(f"all classes agree: {'yes' if agree else 'no'}")
    latex = [rf"ss_{{{p}}}(X) \equiv {Poly(ss.coeffs).to_latex()} \pmod{{{p}}}"]
    latex += [rf"{n}: {Poly(v.coeffs).to_latex()}" for n, v in reduced.items()]
    data = {
        "prime": p,
        "supersingular": list(ss.coeffs),
        "reduced": {n: list(v.coeffs) for n, v in reduced.items()},
        "agree": agree,
    }
    return Output(data, text, latex)


def cmd_cfrac(args) -> Output:
    cf = rogers.atkin_cf(args.depth)
    lists = {"e": cf.e, "alpha": cf.alpha, "beta": cf.beta, "A": cf.A}
    text = [f"{k}: {_rat_list_text(v)}" for k, v in lists.items()]
    names = {"e": "e", "alpha": r"\alpha", "beta": r"\beta", "A": "A"}
    latex = [f"{names[k]}: " + ", ".join(_latex_rat(to_rat(x)) for x in v) for k, v in lists.items()]
    data = {"depth": args.depth, **{k: _rats(v) for k, v in lists.items()}, "consistent": cf.consistent()}
    return Output(data, text, latex)


def cmd_verify(args) -> Output:
    if args.precision < 8:
        raise ValueError("verify needs --precision of at least 8")
    opt = verify.Options(precision=args.precision, pmax=args.pmax, bi_order=args.bi_order)
    report = verify.run_suite(args.suite, opt, jobs=args.jobs, timing=args.timing, progress=verify.stderr_progress)
    text = [f"{e['status'].upper()} [{e['suite']}] {e['id']}" for e in report["entries"]]
    c = report["counts"]
    text.append(f"{c['pass']} passed, {c['fail']} failed")
    latex = [rf"\text{{{e['id']}}} & {e['status']} \\" for e in report["entries"]]
    return Output(report, text, latex)


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_positive("precision"), default=32)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--jobs", type=_positive("jobs"), default=1)
    common.add_argument("--seed", type=int, default=None, help="accepted for compatibility; output is deterministic")

    parser = argparse.ArgumentParser(prog="atkinlike", description="Exact computations with Atkin-like polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forms", parents=[common], help="q-expansions of E2, E4, E6, Delta, j, G<w>")
    p.add_argument("--name", required=True)
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("extremal", parents=[common], help="normalized extremal quasimodular form G_w")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--terms", type=_positive("terms"), default=8)
    p.add_argument("--route", choices=extremal.ROUTES + ("all",), default="diff_recursion")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("atkin-poly", parents=[common], help="Atkin-like polynomial A_{n,r} or B_{n,r}")
    p.add_argument("--r", type=int, required=True, choices=atkin.R_VALUES)
    p.add_argument("--n", type=_positive("n", 0), required=True)
    p.add_argument("--family", choices=("A", "B"), default="A")
    p.add_argument("--route", choices=("recursive", "closed", "both"), default="both")
    p.set_defaults(func=cmd_atkin_poly)

    p = sub.add_parser("moments", parents=[common], help="moments L(j^n) of the Atkin functional")
    p.add_argument("--count", type=_positive("count"), default=8)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("inner-product", parents=[common], help="Atkin inner product of two polynomials in j")
    p.add_argument("--f", required=True, help="JSON list of coefficients, ascending degree")
    p.add_argument("--g", required=True, help="JSON list of coefficients, ascending degree")
    p.set_defaults(func=cmd_inner_product)

    p = sub.add_parser("faber", parents=[common], help="generalized Faber polynomial F_{k,n}")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--n", type=_positive("n", 0), required=True)
    p.add_argument("--route", choices=faber.FABER_ROUTES + ("all",), default="genfunc")
    p.set_defaults(func=cmd_faber)

    p = sub.add_parser("omega", parents=[common], help="expansion coefficients of Faber polynomials")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--count", type=_positive("count"), default=5)
    p.add_argument("--kind", choices=("omega", "Omega"), default="omega")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("hyp", parents=[common], help="pFq or 2G1 truncation")
    p.add_argument("--upper", default="1/12,5/12", help="comma-separated upper parameters")
    p.add_argument("--lower", default="1", help="comma-separated lower parameters")
    p.add_argument("--g21", default=None, metavar="A,B", help="print 2G1(A, B; z) instead")
    p.set_defaults(func=cmd_hyp)

    p = sub.add_parser("congruence", parents=[common], help="supersingular polynomial and reduced Atkin-like polynomials")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("cfrac", parents=[common], help="S- and J-fraction coefficients of the moment series")
    p.add_argument("--depth", type=_positive("depth"), default=4)
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--pmax", type=_positive("pmax", 5), default=97)
    p.add_argument("--bi-order", type=_positive("bi-order", 2), default=5)
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds per group (not deterministic)")
    p.set_defaults(func=cmd_verify)
    return parser


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.data, indent=2, sort_keys=False)
    return "\n".join(out.latex if fmt == "latex" else out.text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (AtkinError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(out, args.format))
    if args.command == "verify" and not out.data["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
