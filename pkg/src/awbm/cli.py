"""Command-line front end: every operation behind one subcommand, JSON out.

Conventions: a successful invocation prints exactly one JSON document on
stdout (canonical key order, sorted sets) and exits 0; malformed input exits
2; a violated precondition exits 3 with the failing condition named on
stderr; an internal invariant breach exits 4.  Elements are written
PERM or PERM@NU (PERM one of 'e', 'w0', cycle notation '(1 2)', or a
one-line image '2,1'; NU a comma-separated integer vector), tuples join
components with ';'.  The canonical JSON element encoding
{"w": [...], "nu": [...], "convention": "t_nu_then_w"} is accepted anywhere
an element is expected and emitted everywhere one is produced.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from . import affine_weyl as aw
from . import bk_gauge as bk
from . import inertial_types as it
from . import modp_flag as mf
from . import oracles as orc
from . import weight_sets as ws
from . import weights as wt
from .errors import (
    AwbmError,
    InputError,
    InternalError,
    PreconditionError,
)

__all__ = ["main", "run"]


# ---------------------------------------------------------------------------
# parsing helpers

def parse_perm(text: str, n: int):
    text = text.strip()
    if text == "e":
        return aw.perm_identity(n)
    if text == "w0":
        return aw.perm_w0(n)
    if text.startswith("("):
        perm = list(range(1, n + 1))
        for cyc in re.findall(r"\(([^()]*)\)", text):
            body = cyc.strip()
            if re.fullmatch(r"\d+", body) and n < 10:
                entries = [int(ch) for ch in body]  # compact form like (23)
            else:
                entries = [int(x) for x in re.split(r"[,\s]+", body) if x]
            if len(entries) < 2:
                continue
            if any(not 1 <= x <= n for x in entries) or len(set(entries)) != len(entries):
                raise InputError(f"cycle {cyc!r} is not valid for n={n}")
            moved = dict(zip(entries, entries[1:] + entries[:1]))
            perm = [moved.get(x, x) for x in perm]
        return tuple(perm)
    body = text.strip("[]")
    img = tuple(int(x) for x in re.split(r"[,\s]+", body) if x)
    if sorted(img) != list(range(1, n + 1)):
        raise InputError(f"{text!r} is not a permutation of 1..{n}")
    return img


def parse_vector(text: str, n: int):
    out = tuple(int(x) for x in re.split(r"[,\s]+", text.strip().strip("[]")) if x)
    if len(out) != n:
        raise InputError(f"vector {text!r} must have length {n}")
    return out


def parse_element(text: str, n: int) -> aw.WeylElement:
    text = text.strip()
    if text.startswith("{"):
        return aw.WeylElement.from_json(json.loads(text))
    if "@" in text:
        ptxt, ntxt = text.split("@", 1)
        return aw.WeylElement(parse_perm(ptxt, n), parse_vector(ntxt, n))
    return aw.WeylElement(parse_perm(text, n), (0,) * n)


def parse_tuple(text: str, n: int, f: int) -> aw.WeylTuple:
    text = text.strip()
    if text.startswith("["):
        tup = aw.WeylTuple.from_json(json.loads(text))
    else:
        parts = [p for p in text.split(";") if p.strip()]
        if len(parts) == 1 and f > 1:
            parts = parts * f
        tup = aw.WeylTuple(tuple(parse_element(p, n) for p in parts))
    if tup.f != f or tup.n != n:
        raise InputError(f"tuple has shape ({tup.f},{tup.n}), expected ({f},{n})")
    return tup


def parse_weight_rows(text: str, n: int, f: int):
    text = text.strip()
    if text.startswith("[["):
        rows = tuple(tuple(int(x) for x in row) for row in json.loads(text))
    else:
        parts = [p for p in text.split(";") if p.strip()]
        if len(parts) == 1 and f > 1:
            parts = parts * f
        rows = tuple(parse_vector(p, n) for p in parts)
    if len(rows) != f:
        raise InputError(f"weight tuple needs {f} rows")
    return rows


def emit(doc):
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    sys.stdout.write("\n")


def _ctx(args) -> aw.GroupContext:
    return aw.GroupContext(args.n, getattr(args, "f", 1), getattr(args, "p", None))


def _presentation(args, ctx, wflag="w1", oflag="omega"):
    w1 = parse_tuple(getattr(args, wflag), ctx.n, ctx.f)
    omega = parse_weight_rows(getattr(args, oflag), ctx.n, ctx.f)
    return wt.SerreWeightPresentation(w1, omega, ctx)


def _type(args, ctx, sflag="s", mflag="mu", kind="E"):
    s = parse_tuple(getattr(args, sflag), ctx.n, ctx.f)
    mu = parse_weight_rows(getattr(args, mflag), ctx.n, ctx.f)
    return it.make_type(ctx, s, mu, kind)


def _stdin_json():
    data = sys.stdin.read()
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError(f"stdin is not valid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommand implementations

def cmd_mul(args):
    a = parse_element(args.a, args.n)
    b = parse_element(args.b, args.n)
    emit(aw.multiply(a, b).to_json())


def cmd_len(args):
    a = parse_element(args.a, args.n)
    emit({"length": aw.length(a)})


def cmd_star(args):
    emit(aw.star(parse_element(args.a, args.n)).to_json())


def cmd_bruhat(args):
    a = parse_element(args.a, args.n)
    b = parse_element(args.b, args.n)
    emit({"leq": aw.bruhat_leq(a, b)})


def cmd_up(args):
    a = parse_element(args.a, args.n)
    b = parse_element(args.b, args.n)
    emit({"leq": aw.up_leq(a, b)})


def cmd_classify(args):
    a = parse_element(args.a, args.n)
    fl = aw.classify(a, args.m, args.p)
    emit({"dominant": fl.dominant, "restricted": fl.restricted,
          "regular": fl.regular, "m_small": fl.m_small,
          "m_generic": fl.m_generic})


def cmd_interval(args):
    a = parse_element(args.a, args.n)
    emit([e.to_json() for e in aw.bruhat_interval(a)])


def _parallel_adm(lam, variant, jobs):
    n = len(lam)
    if jobs <= 1:
        return aw.adm(lam, variant)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        chunks = pool.map(
            lambda w: aw.bruhat_interval(aw.translation(aw.perm_act(w, lam))),
            aw.all_perms(n))
    seen = set()
    for chunk in chunks:
        seen.update(chunk)
    if variant == "regular":
        seen = {a for a in seen if aw.is_regular(a)}
    elif variant == "dual":
        seen = {aw.star(a) for a in seen}
    elif variant != "all":
        raise InputError(f"unknown admissible-set variant {variant!r}")
    return sorted(seen, key=aw.sort_key)


def cmd_adm(args):
    lam = parse_vector(getattr(args, "lambda"), args.n)
    emit([e.to_json() for e in _parallel_adm(lam, args.variant, args.jobs)])


def cmd_ap(args):
    lam = parse_vector(getattr(args, "lambda"), args.n)
    emit([[a.to_json(), b.to_json()] for a, b in aw.ap_enumerate(lam)])


def cmd_weight(args):
    ctx = _ctx(args)
    lap = _presentation(args, ctx)
    emit({"kappa": [list(r) for r in wt.serre_weight(lap)]})


def cmd_lap(args):
    ctx = _ctx(args)
    kappa = parse_weight_rows(args.kappa, ctx.n, ctx.f)
    zeta = wt.CentralCharacter(parse_vector(args.zeta, ctx.f))
    emit(wt.lap_of(ctx, kappa, zeta).to_json())


def cmd_zchar(args):
    ctx = _ctx(args)
    lap = _presentation(args, ctx)
    emit({"zeta": list(wt.central_character(lap).zeta)})


def cmd_generic(args):
    ctx = _ctx(args)
    mu = parse_weight_rows(args.mu, ctx.n, ctx.f)
    poly = None
    if args.pm is not None:
        poly = wt.build_Pm(ctx.n, args.pm)
        if args.super is not None:
            poly = wt.superscript(poly, parse_vector(args.super, ctx.n))
    out = wt.genericity(ctx, mu, m=args.m, polynomial=poly)
    doc = {"generic": out}
    if poly is not None and args.emit_poly:
        doc["polynomial"] = poly.to_json()
    emit(doc)


def cmd_type(args):
    ctx = _ctx(args)
    tau = _type(args, ctx, kind=args.kind)
    emit({"type": tau.to_json(),
          "w_tilde": tau.w_tilde().to_json(),
          "w_tilde_star": tau.w_tilde_star().to_json(),
          "depth": tau.depth()})


def cmd_descent(args):
    ctx = _ctx(args)
    dd = it.descent_data(_type(args, ctx, kind=args.kind))
    emit({"s_tau": list(dd.s_tau), "r": dd.r, "f_prime": dd.f_prime,
          "alpha_prime": [list(a) for a in dd.alpha_prime],
          "a_prime": [list(a) for a in dd.a_prime],
          "orientation": [list(s) for s in dd.s_orient],
          "chi_exponents": list(dd.chi_exponents)})


def cmd_atau(args):
    ctx = _ctx(args)
    exact, modp = it.a_tau(_type(args, ctx, kind=args.kind))
    emit({"exact": [[str(q) for q in row] for row in exact],
          "mod_p": [list(row) for row in modp]})


def cmd_jh(args):
    ctx = _ctx(args)
    tau = _type(args, ctx)
    lam = parse_weight_rows(getattr(args, "lambda"), ctx.n, ctx.f)
    out = ws.jh_set(tau, lam, force=args.force)
    emit([s.to_json() for s in out])


def cmd_wq(args):
    ctx = _ctx(args)
    rho = _type(args, ctx, kind="F")
    recs = ws.w_question(rho, force=args.force)
    emit([{"presentation": r.presentation.to_json(), "obvious": r.obvious,
           "defect": r.defect} for r in recs])


def cmd_covers(args):
    ctx = _ctx(args)
    s0 = _presentation(args, ctx, "w1a", "omegaa")
    s1 = _presentation(args, ctx, "w1b", "omegab")
    emit({"covers": ws.covers(s0, s1, force=args.force)})


def cmd_intersect(args):
    ctx = _ctx(args)
    rho = it.make_type(ctx, parse_tuple(args.rs, ctx.n, ctx.f),
                       parse_weight_rows(args.rmu, ctx.n, ctx.f), "F")
    tau = it.make_type(ctx, parse_tuple(args.ts, ctx.n, ctx.f),
                       parse_weight_rows(args.tmu, ctx.n, ctx.f), "E")
    lam = parse_weight_rows(getattr(args, "lambda"), ctx.n, ctx.f)
    out = ws.intersection(rho, tau, lam, force=args.force)
    emit([s.to_json() for s in out])


def cmd_defect(args):
    ctx = _ctx(args)
    rho = it.make_type(ctx, parse_tuple(args.rs, ctx.n, ctx.f),
                       parse_weight_rows(args.rmu, ctx.n, ctx.f), "F")
    sigma = _presentation(args, ctx)
    emit({"defect": ws.defect(rho, sigma, force=args.force)})


def cmd_maxdefect(args):
    ctx = _ctx(args)
    rho = it.make_type(ctx, parse_tuple(args.rs, ctx.n, ctx.f),
                       parse_weight_rows(args.rmu, ctx.n, ctx.f), "F")
    tau = it.make_type(ctx, parse_tuple(args.ts, ctx.n, ctx.f),
                       parse_weight_rows(args.tmu, ctx.n, ctx.f), "E")
    emit(ws.max_defect_weight(rho, tau, force=args.force).to_json())


def cmd_bm(args):
    ctx = _ctx(args)
    rho = it.make_type(ctx, parse_tuple(args.rs, ctx.n, ctx.f),
                       parse_weight_rows(args.rmu, ctx.n, ctx.f), "F")
    solved = ws.bm_cycles(rho, force=args.force)
    out = []
    for sigma, (d, expr) in sorted(solved.items(),
                                   key=lambda kv: kv[0].sort_key()):
        out.append({"sigma": sigma.to_json(), "defect": d,
                    "cycle": expr.to_json()})
    emit(out)


def cmd_chart(args):
    z = parse_element(args.z, args.n)
    emit(mf.chart_template(z, getattr(args, "h")).to_json())


def cmd_cell(args):
    w = parse_element(args.w, args.n)
    emit(mf.cell_geometry(w).to_json())


def cmd_monodromy(args):
    w = parse_element(args.w, args.n)
    abar = parse_vector(args.abar, args.n)
    free = None
    if args.free:
        free = {tuple(int(x) for x in k.split(",")): int(v)
                for k, v in json.loads(args.free).items()}
    A = mf.monodromy_solve(w, abar, free, p=args.p)
    emit(A.to_json())


def cmd_nabla(args):
    data = _stdin_json() if args.matrix == "-" else json.loads(args.matrix)
    A = mf.LaurentMatrix.from_json(data)
    abar = parse_vector(args.abar, A.n)
    emit({"holds": mf.verify_nabla(A, abar)})


def cmd_component(args):
    ctx = _ctx(args)
    w1 = parse_tuple(args.w1, ctx.n, ctx.f)
    omega = parse_weight_rows(args.omega, ctx.n, ctx.f)
    emit(mf.component_data(w1, omega, ctx, force=args.force).to_json())


def cmd_fiber(args):
    ctx = _ctx(args)
    tau = it.make_type(ctx, parse_tuple(args.ts, ctx.n, ctx.f),
                       parse_weight_rows(args.tmu, ctx.n, ctx.f), "E")
    lam = parse_weight_rows(getattr(args, "lambda"), ctx.n, ctx.f)
    zeta = None
    if args.zeta:
        zeta = wt.CentralCharacter(parse_vector(args.zeta, ctx.f))
    comps = mf.special_fiber_components(ctx, lam, tau, zeta, force=args.force)
    emit([c.to_json() for c in comps])


def _twist(args, ctx) -> bk.TwistData:
    return bk.TwistData(parse_tuple(args.s, ctx.n, ctx.f),
                        parse_weight_rows(args.mu, ctx.n, ctx.f), ctx)


def cmd_twist(args):
    ctx = _ctx(args)
    tw = _twist(args, ctx)
    data = _stdin_json() if args.matrix == "-" else json.loads(args.matrix)
    Y = bk.SeriesMatrix.from_json(data)
    emit(bk.frobenius_twist(Y, args.j, tw).truncate(args.M).to_json())


def cmd_cob(args):
    ctx = _ctx(args)
    tw = _twist(args, ctx)
    doc = _stdin_json()
    A = [bk.SeriesMatrix.from_json(m) for m in doc["A"]]
    I = [bk.SeriesMatrix.from_json(m) for m in doc["I"]]
    out = bk.change_of_basis(A, I, tw)
    emit([m.truncate(args.M).to_json() for m in out])


def cmd_straighten(args):
    ctx = _ctx(args)
    doc = _stdin_json()
    A = [bk.SeriesMatrix.from_json(m) for m in doc["A"]]
    X = [bk.SeriesMatrix.from_json(m) for m in doc["X"]]
    z = parse_tuple(args.z, ctx.n, ctx.f)
    out = bk.straighten(A, X, z, args.M, h=getattr(args, "h"))
    emit([m.truncate(args.M).to_json() for m in out])


def cmd_shape(args):
    ctx = _ctx(args)
    rho = it.make_type(ctx, parse_tuple(args.rs, ctx.n, ctx.f),
                       parse_weight_rows(args.rmu, ctx.n, ctx.f), "F")
    tau = it.make_type(ctx, parse_tuple(args.ts, ctx.n, ctx.f),
                       parse_weight_rows(args.tmu, ctx.n, ctx.f), "E")
    res = bk.shape_semisimple(rho, tau)
    doc = {"shape": res.shape.to_json(),
           "w_rhobar_tau": res.w_rhobar_tau.to_json()}
    if getattr(args, "lambda"):
        lam = parse_weight_rows(getattr(args, "lambda"), ctx.n, ctx.f)
        lpe = tuple(tuple(l + e for l, e in zip(row, aw.eta_vector(ctx.n)))
                    for row in lam)
        doc["admissible_dual"] = res.admissible_for(lam)
        doc["admissible_shifted"] = res.shifted_member(lpe)
    emit(doc)


def cmd_oracle(args):
    kind = args.kind
    if kind == "length":
        emit({"length": orc.im_length(parse_element(args.a, args.n))})
    elif kind == "bruhat":
        a = parse_element(args.a, args.n)
        b = parse_element(args.b, args.n)
        emit({"leq": orc.subword_leq(a, b, args.bound)})
    elif kind == "up":
        a = parse_element(args.a, args.n)
        b = parse_element(args.b, args.n)
        emit({"leq": orc.chain_up_leq(a, b, args.bound)})
    elif kind == "enumerate":
        out = orc.enumerate_elements(args.n, args.deg, args.bound)
        emit([e.to_json() for e in out])
    else:
        raise InputError(f"unknown oracle kind {kind!r}")


# ---------------------------------------------------------------------------
# argument wiring

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _build_parser():
    top = _Parser(prog="awbm", description=__doc__,
                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, *, ctx=False, prime=False, extra=None):
        sp = sub.add_parser(name)
        sp.add_argument("--n", type=int, required=True)
        if ctx:
            sp.add_argument("--f", type=int, default=1)
        if prime:
            sp.add_argument("--p", type=int, required=prime == "req",
                            default=None)
        sp.add_argument("--jobs", type=int, default=1)
        if extra:
            extra(sp)
        sp.set_defaults(func=fn)
        return sp

    add("mul", cmd_mul, extra=lambda sp: (
        sp.add_argument("--a", required=True), sp.add_argument("--b", required=True)))
    add("len", cmd_len, extra=lambda sp: sp.add_argument("--a", required=True))
    add("star", cmd_star, extra=lambda sp: sp.add_argument("--a", required=True))
    add("bruhat", cmd_bruhat, extra=lambda sp: (
        sp.add_argument("--a", required=True), sp.add_argument("--b", required=True)))
    add("up", cmd_up, extra=lambda sp: (
        sp.add_argument("--a", required=True), sp.add_argument("--b", required=True)))
    add("classify", cmd_classify, prime=True, extra=lambda sp: (
        sp.add_argument("--a", required=True),
        sp.add_argument("--m", type=int, default=None)))
    add("interval", cmd_interval,
        extra=lambda sp: sp.add_argument("--a", required=True))
    add("adm", cmd_adm, extra=lambda sp: (
        sp.add_argument("--lambda", required=True),
        sp.add_argument("--variant", default="all",
                        choices=["all", "regular", "dual"])))
    add("ap", cmd_ap, extra=lambda sp: sp.add_argument(
        "--lambda", required=True, help="the shifted weight lambda+eta"))
    add("weight", cmd_weight, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--w1", required=True),
        sp.add_argument("--omega", required=True)))
    add("lap", cmd_lap, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--kappa", required=True),
        sp.add_argument("--zeta", required=True)))
    add("zchar", cmd_zchar, ctx=True, prime=True, extra=lambda sp: (
        sp.add_argument("--w1", required=True),
        sp.add_argument("--omega", required=True)))
    add("generic", cmd_generic, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--mu", required=True),
        sp.add_argument("--m", type=int, default=None),
        sp.add_argument("--pm", type=int, default=None),
        sp.add_argument("--super", default=None),
        sp.add_argument("--emit-poly", action="store_true")))
    add("type", cmd_type, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--s", required=True), sp.add_argument("--mu", required=True),
        sp.add_argument("--kind", default="E", choices=["E", "F"])))
    add("descent", cmd_descent, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--s", required=True), sp.add_argument("--mu", required=True),
        sp.add_argument("--kind", default="E", choices=["E", "F"])))
    add("atau", cmd_atau, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--s", required=True), sp.add_argument("--mu", required=True),
        sp.add_argument("--kind", default="E", choices=["E", "F"])))
    add("jh", cmd_jh, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--s", required=True), sp.add_argument("--mu", required=True),
        sp.add_argument("--lambda", required=True),
        sp.add_argument("--force", action="store_true")))
    add("wq", cmd_wq, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--s", required=True), sp.add_argument("--mu", required=True),
        sp.add_argument("--force", action="store_true")))
    add("covers", cmd_covers, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--w1a", required=True), sp.add_argument("--omegaa", required=True),
        sp.add_argument("--w1b", required=True), sp.add_argument("--omegab", required=True),
        sp.add_argument("--force", action="store_true")))
    add("intersect", cmd_intersect, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--rs", required=True), sp.add_argument("--rmu", required=True),
        sp.add_argument("--ts", required=True), sp.add_argument("--tmu", required=True),
        sp.add_argument("--lambda", required=True),
        sp.add_argument("--force", action="store_true")))
    add("defect", cmd_defect, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--rs", required=True), sp.add_argument("--rmu", required=True),
        sp.add_argument("--w1", required=True), sp.add_argument("--omega", required=True),
        sp.add_argument("--force", action="store_true")))
    add("maxdefect", cmd_maxdefect, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--rs", required=True), sp.add_argument("--rmu", required=True),
        sp.add_argument("--ts", required=True), sp.add_argument("--tmu", required=True),
        sp.add_argument("--force", action="store_true")))
    add("bm", cmd_bm, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--rs", required=True), sp.add_argument("--rmu", required=True),
        sp.add_argument("--force", action="store_true")))
    add("chart", cmd_chart, extra=lambda sp: (
        sp.add_argument("--z", required=True),
        sp.add_argument("--h", type=int, required=True)))
    add("cell", cmd_cell, extra=lambda sp: sp.add_argument("--w", required=True))
    add("monodromy", cmd_monodromy, prime="req", extra=lambda sp: (
        sp.add_argument("--w", required=True),
        sp.add_argument("--abar", required=True),
        sp.add_argument("--free", default=None)))
    add("nabla", cmd_nabla, extra=lambda sp: (
        sp.add_argument("--matrix", required=True, help="JSON or - for stdin"),
        sp.add_argument("--abar", required=True)))
    add("component", cmd_component, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--w1", required=True),
        sp.add_argument("--omega", required=True),
        sp.add_argument("--force", action="store_true")))
    add("fiber", cmd_fiber, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--ts", required=True), sp.add_argument("--tmu", required=True),
        sp.add_argument("--lambda", required=True),
        sp.add_argument("--zeta", default=None),
        sp.add_argument("--force", action="store_true")))
    add("twist", cmd_twist, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--matrix", required=True, help="JSON or - for stdin"),
        sp.add_argument("--j", type=int, default=0),
        sp.add_argument("--s", required=True), sp.add_argument("--mu", required=True),
        sp.add_argument("--M", type=int, default=40)))
    add("cob", cmd_cob, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--s", required=True), sp.add_argument("--mu", required=True),
        sp.add_argument("--M", type=int, default=40)))
    add("straighten", cmd_straighten, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--z", required=True),
        sp.add_argument("--M", type=int, default=40),
        sp.add_argument("--h", type=int, default=None)))
    add("shape", cmd_shape, ctx=True, prime="req", extra=lambda sp: (
        sp.add_argument("--rs", required=True), sp.add_argument("--rmu", required=True),
        sp.add_argument("--ts", required=True), sp.add_argument("--tmu", required=True),
        sp.add_argument("--lambda", default=None)))
    add("oracle", cmd_oracle, extra=lambda sp: (
        sp.add_argument("--kind", required=True,
                        choices=["length", "bruhat", "up", "enumerate"]),
        sp.add_argument("--a", default=None), sp.add_argument("--b", default=None),
        sp.add_argument("--deg", type=int, default=0),
        sp.add_argument("--bound", type=int, default=6)))
    return top


def run(argv) -> int:
    try:
        parser = _build_parser()
        args = parser.parse_args(argv)
        args.func(args)
        return 0
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 4
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    except AwbmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
