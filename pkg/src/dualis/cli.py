"""Command-line front-end: one subcommand per library operation.

Every leaf accepts --json; JSON output is canonical (sorted keys, no
whitespace) so identical inputs produce byte-identical bytes.  Rationals
serialize as ints when integral and as "p/q" strings otherwise.  Domain
errors exit 1 with a one-key {"error": ...} object; argparse handles usage
errors with exit 2.
"""

import argparse
import json
import sys
from fractions import Fraction

from .degrees import (
    ChernData,
    chern_data_complete_intersection,
    chern_data_veronese,
    class_formula,
    defect_and_degree,
    degree_curve_dual,
    degree_sl3_flag,
    degree_sln_weight_a,
    hessian_dual_dimension,
    ranks,
    resultant_degree,
)
from .discriminants import (
    BasedComplex,
    BinaryForm,
    binary_discriminant,
    binary_discriminant_symbolic,
    cayley_determinant,
)
from .dualcurve import (
    RationalParamCurve,
    dual_conic,
    dual_cubic_schlafli,
    dual_parametric,
    plucker_solve,
)
from .enumerative import (
    constant_rank_bounds,
    count_subalgebras,
    d_discriminant_degree,
    isotropic_exists,
)
from .exact import DomainError, MultiPoly, RatMatrix, format_rational, parse_rational
from .flagvar import (
    build_root_system,
    defect_flag,
    degree_dual_gb,
    nef_value,
    maximal_parabolic_table,
)
from .hyperdet import (
    HyperFormat,
    hyperdet_degree_binary_cube,
    hyperdet_degree_boundary,
    hyperdet_degree_cubic,
    hyperdet_degree_gf,
    hyperdet_exists,
    segre_defect,
)
from .mpinv import GaussRational, mp_bilinear, mp_matrix, mp_vector
from .multiseg import (
    Multisegment,
    ranks as ms_ranks,
    weight as ms_weight,
    zeta_kz,
    zeta_mw,
)


# --- serialization ---------------------------------------------------------

def _enc(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else format_rational(x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _enc(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_enc(v) for v in x]
    raise TypeError("cannot serialize %r" % (x,))


def _dump(payload):
    return json.dumps(_enc(payload), sort_keys=True, separators=(",", ":"))


def _emit(args, payload, text):
    print(_dump(payload) if args.json else text)


# --- flag parsing helpers --------------------------------------------------

def _csv_ints(text):
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise DomainError("bad integer list %r" % (text,))


def _csv_rats(text):
    return [parse_rational(t.strip()) for t in text.split(",")]


def _parse_rows(text):
    rows = [_csv_rats(part) for part in text.split(";")]
    return RatMatrix(rows)


def _parse_segments(r, text):
    text = text.strip()
    mult = {}
    if text in ("", "0"):
        return Multisegment(r, mult)
    for token in text.split(","):
        token = token.strip()
        body, _, count = token.partition(":")
        lo, sep, hi = body.partition("-")
        try:
            i, j = int(lo), int(hi) if sep else int(lo)
            c = int(count) if count else 1
        except ValueError:
            raise DomainError("bad segment %r" % (token,))
        mult[(i, j)] = mult.get((i, j), 0) + c
    return Multisegment(r, mult)


def _format_multiseg(m):
    if m.is_zero():
        return "0"
    return ",".join("%d-%d:%d" % (i, j, c)
                    for (i, j), c in sorted(m.mult.items()))


def _rank_table_dict(t):
    out = {}
    for i in range(1, t.r + 1):
        for j in range(i, t.r + 1):
            out["%d-%d" % (i, j)] = t.get(i, j)
    return out


def _weight_map(removed_text, weight_text):
    removed = _csv_ints(removed_text)
    coeffs = _csv_ints(weight_text)
    if len(removed) != len(coeffs):
        raise DomainError("need one weight coefficient per removed root")
    return removed, dict(zip(removed, coeffs))


def _matrix_payload(mat):
    return [[x for x in row] for row in mat.rows]


def _matrix_text(mat):
    return "\n".join(" ".join(format_rational(x) for x in row)
                     for row in mat.rows)


# --- dualcurve -------------------------------------------------------------

def _cmd_dualcurve_param(args):
    curve = RationalParamCurve.parse(args.x, args.y)
    dual = dual_parametric(curve)
    payload = {"x": dual.x.format(), "y": dual.y.format()}
    return payload, "x = %s\ny = %s" % (payload["x"], payload["y"])


def _cmd_dualcurve_conic(args):
    # row-major, with ";" row breaks optional
    entries = _csv_rats(args.matrix.replace(";", ","))
    if len(entries) != 9:
        raise DomainError("conic needs 9 rationals, row-major")
    mat = RatMatrix([entries[0:3], entries[3:6], entries[6:9]])
    dual = dual_conic(mat)
    return {"matrix": _matrix_payload(dual)}, _matrix_text(dual)


def _cmd_dualcurve_schlafli(args):
    f = MultiPoly.parse(args.cubic)
    dual = dual_cubic_schlafli(f)
    text = dual.format()
    return {"dual": text, "degree": dual.degree()}, text


def _cmd_dualcurve_pluecker(args):
    pd = plucker_solve(args.d, args.delta, args.kappa)
    payload = {k: getattr(pd, k) for k in pd._fields}
    text = " ".join("%s=%d" % (k, getattr(pd, k)) for k in pd._fields)
    return payload, text


# --- disc ------------------------------------------------------------------

def _cmd_disc_binary(args):
    if args.symbolic:
        poly = binary_discriminant_symbolic(args.degree)
        text = poly.format()
        return {"discriminant": text, "degree": poly.degree()}, text
    coeffs = _csv_rats(args.coeffs)
    form = BinaryForm(args.degree, coeffs)
    val = binary_discriminant(form)
    payload = {"discriminant": val, "vanishes": val == 0}
    return payload, format_rational(val)


def _cmd_disc_cayley(args):
    data = json.loads(args.complex)
    cx = BasedComplex.from_dict(data)
    val = cayley_determinant(cx)
    return {"determinant": val}, format_rational(val)


# --- degree ----------------------------------------------------------------

def _degree_payload(cd):
    defect, degree = defect_and_degree(cd)
    return {"defect": defect, "degree": degree}, "defect=%d degree=%d" % (
        defect, degree)


def _cmd_degree_ranks(args):
    e = [int(x) for x in _csv_rats(args.chern)]
    cd = ChernData(len(e) - 1, e)
    defect, degree = defect_and_degree(cd)
    payload = {"ranks": list(ranks(cd)), "defect": defect, "degree": degree}
    return payload, "ranks=%s defect=%d degree=%d" % (
        ",".join(str(v) for v in payload["ranks"]), defect, degree)


def _cmd_degree_veronese(args):
    return _degree_payload(chern_data_veronese(args.n, args.d))


def _cmd_degree_ci(args):
    degs = _csv_ints(args.degs)
    return _degree_payload(chern_data_complete_intersection(args.N, degs))


def _cmd_degree_curve(args):
    val = degree_curve_dual(args.g, args.d)
    return {"degree": val}, str(val)


def _cmd_degree_class(args):
    chi = _csv_ints(args.chi)
    if len(chi) != 3:
        raise DomainError("need chi as three integers: X, X.H, X.H.H'")
    val = class_formula(args.n, *chi)
    payload = {"degree": val}
    if val <= 0:
        payload["warning"] = "dual not a hypersurface"
        return payload, "%d (dual not a hypersurface)" % val
    return payload, str(val)


def _cmd_degree_sl3(args):
    val = degree_sl3_flag(args.m1, args.m2)
    return {"degree": val}, str(val)


def _cmd_degree_sln_a(args):
    val = degree_sln_weight_a(args.n, args.a)
    return {"degree": val}, str(val)


def _cmd_degree_resultant(args):
    val = resultant_degree(_csv_ints(args.degs))
    return {"degree": val}, str(val)


def _cmd_degree_hessian(args):
    f = MultiPoly.parse(args.poly)
    val = hessian_dual_dimension(f, args.ambient)
    return {"dual_dimension": val}, str(val)


# --- hyperdet --------------------------------------------------------------

def _cmd_hyperdet_exists(args):
    fmt = HyperFormat(_csv_ints(args.dims))
    ok = hyperdet_exists(fmt)
    payload = {"exists": ok, "defect": segre_defect(fmt)}
    return payload, "yes" if ok else "no (defect %d)" % payload["defect"]


def _cmd_hyperdet_degree(args):
    dims = _csv_ints(args.dims)
    fmt = HyperFormat(dims)
    ks = fmt.ks
    if args.method == "gf":
        val = hyperdet_degree_gf(fmt)
    elif args.method == "boundary":
        total = sum(ks)
        big = [i for i, k in enumerate(ks) if 2 * k == total]
        if not big:
            raise DomainError("not a boundary format")
        rest = list(ks)
        del rest[big[0]]
        val = hyperdet_degree_boundary(rest)
    elif args.method == "cubic":
        if len(dims) != 3 or len(set(dims)) != 1:
            raise DomainError("cubic method needs an m,m,m format")
        val = hyperdet_degree_cubic(dims[0] - 1)
    else:  # egf
        if any(l != 2 for l in dims):
            raise DomainError("egf method needs a 2,...,2 format")
        val = hyperdet_degree_binary_cube(len(dims))
    return {"degree": val, "method": args.method}, str(val)


# --- multiseg --------------------------------------------------------------

def _cmd_multiseg_zeta(args):
    m = _parse_segments(args.r, args.segments)
    if args.method == "kz":
        out = zeta_kz(m)
    elif args.method == "mw":
        out = zeta_mw(m)
    else:
        out = zeta_kz(m)
        alt = zeta_mw(m)
        if out != alt:
            raise DomainError("duality algorithms disagree")
    payload = {
        "input": _format_multiseg(m),
        "output": _format_multiseg(out),
        "weight": list(ms_weight(m)),
        "ranks_input": _rank_table_dict(ms_ranks(m)),
        "ranks_output": _rank_table_dict(ms_ranks(out)),
    }
    return payload, payload["output"]


# --- flag ------------------------------------------------------------------

def _cmd_flag_table(args):
    rows = maximal_parabolic_table(args.type, args.rank)
    payload = {"rows": [{"index": i, "dim": d, "nef_value": t}
                        for i, d, t in rows]}
    text = "\n".join("i=%d dim=%d tau=%d" % row for row in rows)
    return payload, text


def _cmd_flag_nef(args):
    rs = build_root_system(args.type, args.rank)
    removed, weight = _weight_map(args.removed, args.weight)
    tau = nef_value(rs, removed, weight)
    return {"nef_value": tau}, format_rational(tau)


def _cmd_flag_defect(args):
    data = json.loads(args.spec)
    factors = []
    for fac in data["factors"]:
        rs = build_root_system(fac["type"], int(fac["rank"]))
        removed = [int(i) for i in fac["removed"]]
        weight = {int(k): int(v) for k, v in fac["weight"].items()}
        factors.append((rs, removed, weight))
    val = defect_flag(factors)
    return {"defect": val}, str(val)


def _cmd_flag_gb(args):
    rec = degree_dual_gb(args.type, args.rank)
    if rec["applicable"]:
        text = str(rec["degree"])
    else:
        text = "not applicable (plain %d, alternating %d)" % (
            rec["plain_sum"], rec["alternating_sum"])
    return rec, text


# --- enum ------------------------------------------------------------------

def _cmd_enum_isotropic(args):
    ok = isotropic_exists(args.n, args.k, args.d, args.kind)
    return {"exists": ok}, "yes" if ok else "no"


def _cmd_enum_subalgebras(args):
    val = count_subalgebras(args.n, args.k)
    return {"count": val}, str(val)


def _cmd_enum_ddisc(args):
    val = d_discriminant_degree(args.n)
    return {"degree": val}, str(val)


def _cmd_enum_rankbounds(args):
    rec = constant_rank_bounds(args.r, args.m, args.n, kind=args.kind)
    text = " ".join("%s=%s" % (k, rec[k]) for k in sorted(rec))
    return rec, text


# --- mpinv -----------------------------------------------------------------

def _cmd_mpinv_matrix(args):
    out = mp_matrix(_parse_rows(args.rows))
    return {"rows": _matrix_payload(out)}, _matrix_text(out)


def _cmd_mpinv_bilinear(args):
    out = mp_bilinear(_parse_rows(args.rows), args.kind)
    return {"rows": _matrix_payload(out)}, _matrix_text(out)


def _cmd_mpinv_vector(args):
    vec = [GaussRational.parse(t.strip()) for t in args.entries.split(",")]
    gram = _parse_rows(args.gram) if args.gram else None
    out = mp_vector(vec, gram)
    entries = [x.format() for x in out]
    return {"entries": entries}, ",".join(entries)


# --- selftest --------------------------------------------------------------

def _selftest_checks():
    checks = []

    pd = plucker_solve(3, 0, 0)
    checks.append(("plucker smooth cubic",
                   (pd.g, pd.d_star, pd.b, pd.f) == (1, 6, 0, 9)))
    pd = plucker_solve(4, 0, 0)
    checks.append(("plucker smooth quartic",
                   (pd.g, pd.d_star, pd.b, pd.f) == (3, 12, 28, 24)))

    checks.append(("flag table G2",
                   maximal_parabolic_table("G", 2) == [(1, 5, 5), (2, 5, 3)]))
    checks.append(("flag table F4",
                   maximal_parabolic_table("F", 4) == [(1, 15, 8), (2, 20, 5),
                                         (3, 20, 7), (4, 15, 11)]))
    checks.append(("flag table A3",
                   maximal_parabolic_table("A", 3) == [(1, 3, 4), (2, 4, 4), (3, 3, 4)]))
    checks.append(("flag table B3",
                   maximal_parabolic_table("B", 3) == [(1, 5, 5), (2, 7, 4), (3, 6, 6)]))
    checks.append(("flag table C3",
                   maximal_parabolic_table("C", 3) == [(1, 5, 6), (2, 7, 5), (3, 6, 4)]))
    checks.append(("flag table D4",
                   maximal_parabolic_table("D", 4) == [(1, 6, 6), (2, 9, 5),
                                         (3, 6, 6), (4, 6, 6)]))
    # exceptional rows as unordered (dim, tau) content
    goldens = {
        6: [(16, 12), (16, 12), (21, 11), (25, 9), (25, 9), (29, 7)],
        7: [(27, 18), (33, 17), (42, 13), (42, 14), (47, 11),
            (50, 10), (53, 8)],
        8: [(57, 29), (78, 23), (83, 19), (92, 17), (97, 14),
            (98, 13), (104, 11), (106, 9)],
    }
    for rank, want in goldens.items():
        got = sorted((d, t) for _, d, t in maximal_parabolic_table("E", rank))
        checks.append(("flag table E%d" % rank, got == want))

    checks.append(("hyperdet square formats", all(
        hyperdet_degree_gf(HyperFormat((m + 1, m + 1))) == m + 1
        for m in (2, 3, 4, 5))))
    checks.append(("hyperdet 2x2x2",
                   hyperdet_degree_gf(HyperFormat((2, 2, 2))) == 4))
    checks.append(("hyperdet 3x3x3",
                   hyperdet_degree_gf(HyperFormat((3, 3, 3))) == 36))
    checks.append(("hyperdet binary cubes", [
        hyperdet_degree_binary_cube(r) for r in (2, 3, 4)] == [2, 4, 24]))
    checks.append(("hyperdet boundary 3x2x2",
                   hyperdet_degree_boundary((1, 1)) == 6))
    checks.append(("hyperdet off-cone vanishing",
                   hyperdet_degree_gf(HyperFormat((4, 2, 2))) == 0))

    checks.append(("veronese ternary cubic",
                   defect_and_degree(chern_data_veronese(2, 3)) == (0, 12)))
    return checks


def _cmd_selftest(args):
    checks = _selftest_checks()
    failed = [name for name, ok in checks if not ok]
    payload = {
        "checks": [{"name": name, "ok": ok} for name, ok in checks],
        "passed": len(checks) - len(failed),
        "failed": len(failed),
        "ok": not failed,
    }
    lines = ["%s %s" % ("ok  " if ok else "FAIL", name)
             for name, ok in checks]
    lines.append("%d/%d checks passed" % (payload["passed"], len(checks)))
    return payload, "\n".join(lines)


# --- parser ----------------------------------------------------------------

def _build_parser():
    top = argparse.ArgumentParser(
        prog="dualis",
        description="exact invariants of projective duality")
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true",
                        help="canonical JSON output")
    sub = top.add_subparsers(dest="command", required=True)

    def leaf(group, name, func, **flags):
        p = group.add_parser(name, parents=[shared])
        for flag, spec in flags.items():
            p.add_argument("--" + flag.replace("_", "-"), **spec)
        p.set_defaults(func=func)
        return p

    dc = sub.add_parser("dualcurve").add_subparsers(required=True)
    leaf(dc, "param", _cmd_dualcurve_param,
         x={"required": True}, y={"required": True})
    leaf(dc, "conic", _cmd_dualcurve_conic, matrix={"required": True})
    leaf(dc, "schlafli", _cmd_dualcurve_schlafli, cubic={"required": True})
    leaf(dc, "pluecker", _cmd_dualcurve_pluecker,
         d={"required": True, "type": int},
         delta={"type": int, "default": 0},
         kappa={"type": int, "default": 0})

    ds = sub.add_parser("disc").add_subparsers(required=True)
    p = leaf(ds, "binary", _cmd_disc_binary,
             degree={"required": True, "type": int})
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--coeffs")
    g.add_argument("--symbolic", action="store_true")
    leaf(ds, "cayley", _cmd_disc_cayley, complex={"required": True})

    dg = sub.add_parser("degree").add_subparsers(required=True)
    leaf(dg, "ranks", _cmd_degree_ranks, chern={"required": True})
    leaf(dg, "veronese", _cmd_degree_veronese,
         n={"required": True, "type": int}, d={"required": True, "type": int})
    leaf(dg, "ci", _cmd_degree_ci,
         N={"required": True, "type": int}, degs={"required": True})
    leaf(dg, "curve", _cmd_degree_curve,
         g={"required": True, "type": int}, d={"required": True, "type": int})
    leaf(dg, "class", _cmd_degree_class,
         n={"required": True, "type": int}, chi={"required": True})
    leaf(dg, "sl3", _cmd_degree_sl3,
         m1={"required": True, "type": int},
         m2={"required": True, "type": int})
    leaf(dg, "sln-a", _cmd_degree_sln_a,
         n={"required": True, "type": int}, a={"required": True, "type": int})
    leaf(dg, "resultant", _cmd_degree_resultant, degs={"required": True})
    leaf(dg, "hessian", _cmd_degree_hessian,
         poly={"required": True}, ambient={"required": True, "type": int})

    hd = sub.add_parser("hyperdet").add_subparsers(required=True)
    leaf(hd, "exists", _cmd_hyperdet_exists, dims={"required": True})
    leaf(hd, "degree", _cmd_hyperdet_degree,
         dims={"required": True},
         method={"choices": ["gf", "boundary", "cubic", "egf"],
                 "default": "gf"})

    ms = sub.add_parser("multiseg").add_subparsers(required=True)
    leaf(ms, "zeta", _cmd_multiseg_zeta,
         r={"required": True, "type": int},
         segments={"required": True},
         method={"choices": ["kz", "mw", "both"], "default": "both"})

    fl = sub.add_parser("flag").add_subparsers(required=True)
    leaf(fl, "table", _cmd_flag_table,
         type={"required": True}, rank={"required": True, "type": int})
    leaf(fl, "nef", _cmd_flag_nef,
         type={"required": True}, rank={"required": True, "type": int},
         removed={"required": True}, weight={"required": True})
    leaf(fl, "defect", _cmd_flag_defect, spec={"required": True})
    leaf(fl, "gb-degree", _cmd_flag_gb,
         type={"required": True}, rank={"required": True, "type": int})

    en = sub.add_parser("enum").add_subparsers(required=True)
    leaf(en, "isotropic", _cmd_enum_isotropic,
         n={"required": True, "type": int},
         k={"required": True, "type": int},
         d={"required": True, "type": int},
         kind={"required": True, "choices": ["sym", "skew"]})
    leaf(en, "subalgebras", _cmd_enum_subalgebras,
         n={"required": True, "type": int},
         k={"required": True, "type": int})
    leaf(en, "ddisc", _cmd_enum_ddisc, n={"required": True, "type": int})
    leaf(en, "rankbounds", _cmd_enum_rankbounds,
         r={"required": True, "type": int},
         m={"required": True, "type": int},
         n={"type": int},
         kind={"choices": ["general", "symmetric", "skew"],
               "default": "general"})

    mp = sub.add_parser("mpinv").add_subparsers(required=True)
    leaf(mp, "matrix", _cmd_mpinv_matrix, rows={"required": True})
    leaf(mp, "bilinear", _cmd_mpinv_bilinear,
         kind={"required": True, "choices": ["sym", "skew"]},
         rows={"required": True})
    leaf(mp, "vector", _cmd_mpinv_vector,
         entries={"required": True}, gram={})

    st = sub.add_parser("selftest", parents=[shared])
    st.set_defaults(func=_cmd_selftest)
    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = args.func(args)
    except (DomainError, ValueError) as exc:
        print(_dump({"error": str(exc)}))
        return 1
    _emit(args, payload, text)
    if args.func is _cmd_selftest and payload["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
