"""Verification suites: named groups of identity checks with a fixed report order."""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import atkin, congruence, extremal, faber, functional, gram, modforms, rogers
from .report import Report
from .series import QSeries

SUITES = ("forms", "section2", "section3", "section4", "section5", "section6", "congruence")


@dataclass(frozen=True)
class Options:
    precision: int = 32
    pmax: int = 97
    bi_order: int = 5


def _orders(opt: Options) -> dict:
    p = opt.precision
    return {
        "forms": min(p, 40),
        "extremal": min(p, 24),
        "series": min(p, 16),
        "faber": min(p, 8),
    }


_EXTREMAL_WEIGHTS = tuple(w for w in range(2, 51, 2) if w != 4)


# each group: (suite, name, builder(options) -> Report)

def _forms_groups():
    return [
        ("forms", "ramanujan", lambda o: modforms.ramanujan_check(_orders(o)["forms"])),
        ("forms", "leibniz", lambda o: modforms.leibniz_check(_orders(o)["forms"])),
        ("forms", "hecke composition", lambda o: modforms.hecke_composition_check(4, 41)),
        ("forms", "integrality", lambda o: modforms.integrality_check(_orders(o)["forms"])),
    ]


# the nontrivial entries of the table of initial values, as printed
INITIAL_POLYS = {
    ("A", 0, 2): "X - 824",
    ("A", 2, 1): "X - 720",
    ("A", 2, 2): "X^2 - 1640*X + 269280",
    ("A", 6, 1): "X - 1266",
    ("A", 8, 1): "X - 330",
    ("B", 0, 1): "X - 1008",
    ("B", 0, 2): "X^2 - 1832*X + 497952",
    ("B", 2, 2): "X - 920",
    ("B", 6, 1): "X - 546",
    ("B", 8, 1): "X - 1338",
}


def initial_polys_check() -> Report:
    """Each printed entry by recursion seed, closed formula and orthogonality of moments."""
    rep = Report("initial polynomials")
    for (fam, r, n), want in INITIAL_POLYS.items():
        name = f"{fam}_{{{n},{r}}}"
        rec = atkin.atkin_poly_recursive(r, n, fam).to_text()
        closed = atkin.atkin_poly_closed(r, n, fam).to_text()
        mom = (functional.atkin_poly_from_moments if fam == "A" else functional.adjoint_poly_from_moments)(r, n).to_text()
        rep.add(f"{name} recursion", rec == want, rec)
        rep.add(f"{name} closed formula", closed == want, closed)
        rep.add(f"{name} moments", mom == want, mom)
    return rep


def _initial_polys(o: Options) -> Report:
    rep = initial_polys_check()
    rep.extend(atkin.routes_agree(8))
    for r in atkin.R_VALUES:
        for n in range(1, 8):
            rep.add(f"A_{{{n},{r}}} moments = recursion", functional.atkin_poly_from_moments(r, n) == atkin.atkin_poly(r, n))
            rep.add(f"B_{{{n},{r}}} moments = recursion",
                    functional.adjoint_poly_from_moments(r, n) == atkin.adjoint_poly(r, n))
    return rep


def _extremal_values(o: Options) -> Report:
    rep = Report("G values")
    g12 = extremal.G(12, 8)
    g14 = extremal.G(14, 8)
    rep.add("G12", [g12[e] for e in range(2, 8)] == [1, 56, 1002, 9296, 57708, 269040], str(g12), order=8)
    rep.add("G14", [g14[e] for e in range(2, 8)] == [1, 128, 4050, 58880, 525300, 3338496], str(g14), order=8)
    return rep


def _extremality(o: Options) -> Report:
    rep = Report("extremality")
    prec = _orders(o)["extremal"]
    for w in _EXTREMAL_WEIGHTS:
        for r in extremal.extremality_check(w, prec).results:
            rep.add(f"w={w} {r.id}", r.passed, r.detail, r.order)
    return rep


def _operator_identities(o: Options) -> Report:
    rep = Report("operator identities")
    for which in extremal.OPERATOR_IDENTITIES:
        for r in extremal.operator_identity_check(which, range(0, 37, 6), _orders(o)["series"] + 4).results:
            rep.add(f"{which} {r.id}", r.passed, r.detail, r.order)
    return rep


def _expansions(o: Options) -> Report:
    rep = Report("expansions")
    for which in atkin.EXPANSION_FAMILIES:
        for r in atkin.expansion_identities_check(which, 6).results:
            rep.add(f"{which} {r.id}", r.passed, r.detail, r.order)
    return rep


def _section2_groups():
    return [
        ("section2", "initial polynomials", _initial_polys),
        ("section2", "G12 and G14 values", _extremal_values),
        ("section2", "extremal routes", lambda o: extremal.routes_agree(_EXTREMAL_WEIGHTS, _orders(o)["extremal"])),
        ("section2", "extremality", _extremality),
        ("section2", "operator identities", _operator_identities),
        ("section2", "expansion identities", _expansions),
    ]


def _section3_groups():
    return [
        ("section3", "orthogonality", lambda o: functional.orthogonality_suite(6, check_residue=True)),
        ("section3", "stieltjes", lambda o: functional.stieltjes_check(_orders(o)["series"])),
        ("section3", "L*", lambda o: functional.lstar_check(9)),
        ("section3", "image formulas", lambda o: functional.image_formulas_check(4, _orders(o)["series"])),
        ("section3", "hankel", lambda o: functional.hankel_check(6)),
        ("section3", "hecke self-adjoint", lambda o: functional.hecke_self_adjoint_check(6)),
    ]


def _omega14_values(o: Options) -> Report:
    rep = Report("omega_14 values")
    table = {
        (0, -1): 1, (1, 0): 1, (2, -1): 196560, (2, 0): 176, (2, 1): 1,
        (3, -1): 42981120, (3, 0): 208302, (3, 1): "1536/5", (3, 2): 1,
        (4, -1): 41292342000, (4, 0): 78071008, (4, 1): "1176672/5", (4, 2): 432, (4, 3): 1,
    }
    for n in range(5):
        for ell in range(-1, 4):
            want = Fraction(table.get((n, ell), 0))
            got = faber.omega(14, n, ell)
            rep.add(f"omega_14,{n}({ell})", got == want, f"{got} vs {want}")
    return rep


def _omega0_values(o: Options) -> Report:
    rep = Report("Omega_0 values")
    table = {
        (1, 0): 1, (2, 0): 152, (2, 1): 1, (3, 0): 7446, (3, 1): "1416/5", (3, 2): 1,
        (4, 0): 200752, (4, 1): "156648/5", (4, 2): 408, (4, 3): 1,
        (5, 0): 3685870, (5, 1): "9867424/5", (5, 2): 70479, (5, 3): "1592/3", (5, 4): 1,
    }
    for ell in range(1, 6):
        for r in range(5):
            want = Fraction(table.get((ell, r), 0))
            got = faber.expansion_coeffs("Omega", 2, ell)[r]
            rep.add(f"Omega_0,{ell}({r})", got == want, f"{got} vs {want}")
    return rep


# printed p-expansions, lowest power first: (first exponent, coefficients)
OMEGA14_COLUMNS = {
    -1: (0, [1, 0, 196560, 42981120, 41292342000]),
    0: (1, [1, 176, 208302, 78071008]),
    1: (2, [1, "1536/5", "1176672/5", "531453184/5"]),
}
OMEGA0_COLUMNS = {
    0: (1, [1, 152, 7446, 200752, 3685870]),
    1: (2, [1, "1416/5", "156648/5", "9867424/5"]),
    2: (3, [1, 408, 70479]),
    3: (4, [1, "1592/3"]),
    4: (5, [1]),
}
MOMENT_GENERATING = (1, [1, -24, 196812, 38262208])


def _printed(val: int, coeffs, prec: int) -> QSeries:
    return QSeries([Fraction(c) for c in coeffs], val, prec)


def _column_series(o: Options) -> Report:
    rep = Report("column series")
    for ell, (val, coeffs) in OMEGA14_COLUMNS.items():
        prec = val + len(coeffs)
        want = _printed(val, coeffs, prec)
        rep.add(f"omega_14 column l={ell} coefficients", faber.omega_series(14, ell, prec).agrees_with(want), order=prec)
        rep.add(f"omega_14 column l={ell} form", faber.omega_form_series(14, ell, prec).agrees_with(want), order=prec)
    for r, (val, coeffs) in OMEGA0_COLUMNS.items():
        prec = val + len(coeffs)
        want = _printed(val, coeffs, prec)
        rep.add(f"Omega_0 column r={r} coefficients", faber.big_omega_series(2, r, prec).agrees_with(want), order=prec)
        rep.add(f"Omega_0 column r={r} form", faber.big_omega_form_series(2, r, prec).agrees_with(want), order=prec)
    val, coeffs = MOMENT_GENERATING
    prec = val + len(coeffs)
    want = _printed(val, coeffs, prec)
    rep.add("omega_2 column l=-1 coefficients", faber.omega_series(2, -1, prec).agrees_with(want), order=prec)
    rep.add("omega_2 column l=-1 form", faber.omega_form_series(2, -1, prec).agrees_with(want), order=prec)
    return rep


def _fourier(o: Options) -> Report:
    rep = Report("fourier coefficients")
    prec = _orders(o)["faber"]
    for k in (14, 2, 0, 4, 26, -12, 8):
        w = faber.weight_decompose(k)
        for ell in range(-w.m - 1, 3):
            if faber.valid_ell(w, ell):
                for r in faber.fourier_coeff_theorem_check(ell, k, prec).results:
                    rep.add(f"k={k} l={ell} {r.id}", r.passed, r.detail, r.order)
    for n in range(2, 7):
        rep.add(f"omega_14,{n}({n - 2}) closed form", faber.omega(14, n, n - 2) == faber.subdiagonal_omega14(n))
    for n in range(3, 7):
        rep.add(f"omega_14,{n}({n - 3}) closed form", faber.omega(14, n, n - 3) == faber.subsubdiagonal_omega14(n))
    return rep


def _section4_groups():
    return [
        ("section4", "faber routes", lambda o: faber.faber_routes_check(range(-12, 28, 2), 6)),
        ("section4", "omega_14 values", _omega14_values),
        ("section4", "Omega_0 values", _omega0_values),
        ("section4", "column series", _column_series),
        ("section4", "fourier coefficients", _fourier),
        ("section4", "cor42", lambda o: faber.corollary_checks("cor42")),
        ("section4", "oFOF", lambda o: faber.corollary_checks("cor44_oFOF")),
        ("section4", "ooOO", lambda o: faber.corollary_checks("cor44_ooOO", {"k": 14, "ell": 0, "ell2": 1, "n": 5})),
        ("section4", "denominator formula", lambda o: faber.corollary_checks("denominator_formula", prec=6)),
    ]


PROP51_PRINTED = {
    1: (1, [393120, 59754240, 2927171520, 78919626240]),
    2: (1, [59754240, 78920412480, 20222985968640]),
}
T_OF_Q = (1, [1, -744, 356652, -140361152, 49336682190])
Q_OF_T = (1, [1, 744, 750420, 872769632, 1102652742882])


def _printed_section5(o: Options) -> Report:
    rep = Report("printed expansions")
    for ell, (val, coeffs) in PROP51_PRINTED.items():
        prec = val + len(coeffs)
        want = _printed(val, coeffs, prec)
        lhs, rhs = gram.cor52_i_sides(ell, prec)
        rep.add(f"sum (H_n, H_{ell}) p^n inner products", lhs.agrees_with(want), str(lhs), order=prec)
        rep.add(f"sum (H_n, H_{ell}) p^n forms", rhs.agrees_with(want), str(rhs), order=prec)
    lhs, rhs = gram.prop51_sides(1, 5)
    want = _printed(1, PROP51_PRINTED[1][1], 5)
    rep.add("sum (H_n, A_1) p^n inner products", lhs.agrees_with(want), str(lhs), order=5)
    rep.add("sum (H_n, A_1) p^n forms", rhs.agrees_with(want), str(rhs), order=5)
    rep.add("A_r = N_(r,2) for r <= 4", tuple(rogers.atkin_cf(5).A[:5]) == tuple(extremal.normalizing_factor(r, 2) for r in range(5)))
    return rep


def _section5_groups():
    return [
        ("section5", "H_n", lambda o: gram.h_poly_check(6)),
        ("section5", "printed expansions", _printed_section5),
        ("section5", "prop51", lambda o: gram.section5_series("prop51", prec=o.bi_order)),
        ("section5", "cor52_i", lambda o: gram.section5_series("cor52_i", prec=o.bi_order)),
        ("section5", "cor52_ii", lambda o: gram.section5_series("cor52_ii", prec=o.bi_order)),
        ("section5", "eqFFpq", lambda o: gram.section5_series("eqFFpq", prec=o.bi_order)),
        ("section5", "thm53", lambda o: gram.section5_series("thm53", prec=o.bi_order)),
        ("section5", "continued fractions", lambda o: rogers.cf_check(6)),
        ("section5", "addition formula", lambda o: rogers.addition_formula_check(o.bi_order)),
        ("section5", "cosine", lambda o: rogers.cosine_toy(8)),
    ]


def _printed_section6(o: Options) -> Report:
    rep = Report("printed inverse series")
    tq, qt = faber.inverse_series(6)
    rep.add("t(q) through q^5", tq.agrees_with(_printed(*T_OF_Q, 6)), str(tq), order=6)
    rep.add("q(t) through t^5", qt.agrees_with(_printed(*Q_OF_T, 6).with_var(qt.var)), str(qt), order=6)
    return rep


def _section6_groups():
    return [
        ("section6", "inverse series", lambda o: faber.inverse_series_check(_orders(o)["series"])),
        ("section6", "printed inverse series", _printed_section6),
        ("section6", "hypergeometric faber", lambda o: faber.faber_routes_check(range(-12, 28, 2), 6)),
        ("section6", "c1 and c2 with l^2 coefficient 276768", lambda o: faber.coefficient_formula_check(faber.COEFF_PAIRS)),
    ]


def _congruence_groups():
    return [("congruence", "congruence sweep", lambda o: congruence.congruence_sweep(o.pmax))]


GROUPS: dict[str, Callable[[], list]] = {
    "forms": _forms_groups,
    "section2": _section2_groups,
    "section3": _section3_groups,
    "section4": _section4_groups,
    "section5": _section5_groups,
    "section6": _section6_groups,
    "congruence": _congruence_groups,
}


def _groups_for(suite: str) -> list:
    if suite == "all":
        return [g for s in SUITES for g in GROUPS[s]()]
    if suite not in GROUPS:
        raise ValueError(f"unknown suite {suite!r}")
    return GROUPS[suite]()


def _run_one(args):
    suite, index, opt = args
    grp = _groups_for(suite)[index]
    start = time.perf_counter()
    rep = grp[2](opt)
    return rep, time.perf_counter() - start


def _short(text: str, limit: int = 240) -> str:
    return text if len(text) <= limit else text[: limit - 3] + "..."


def run_suite(suite: str, opt: Options | None = None, jobs: int = 1, timing: bool = False, progress=None) -> dict:
    """Run a suite and return the machine-readable report."""
    opt = opt or Options()
    groups = _groups_for(suite)
    tasks = [(suite, i, opt) for i in range(len(groups))]
    results = [None] * len(groups)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for i, res in enumerate(ex.map(_run_one, tasks)):
                results[i] = res
                if progress:
                    progress(groups[i], res[0])
    else:
        for i, t in enumerate(tasks):
            results[i] = _run_one(t)
            if progress:
                progress(groups[i], results[i][0])
    entries = []
    for (s, name, _), (rep, secs) in zip(groups, results):
        for r in rep.results:
            e = {"suite": s, "id": f"{name}: {r.id}", "status": "pass" if r.passed else "fail", "order": r.order,
                 "detail": _short(r.detail)}
            if timing:
                e["seconds"] = round(secs, 6)
            entries.append(e)
    entries.sort(key=lambda e: (SUITES.index(e["suite"]), e["id"]))
    passed = sum(e["status"] == "pass" for e in entries)
    return {
        "suite": suite,
        "precision": opt.precision,
        "passed": passed == len(entries),
        "counts": {"pass": passed, "fail": len(entries) - passed},
        "entries": entries,
    }


def stderr_progress(group, rep) -> None:
    print(f"[{group[0]}] {group[1]}: {len(rep) - len(rep.failures())}/{len(rep)}", file=sys.stderr, flush=True)
