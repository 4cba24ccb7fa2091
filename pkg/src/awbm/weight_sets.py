"""Predicted weight sets, Jordan-Hölder labels, covering, defect, and the
recursive Breuil-Mézard cycle solver.

Everything here is phrased in terms of lowest alcove presentations over a
fixed context.  The two basic parametrizations are

  * JH labels of a type tau twisted by W(lam):  admissible pairs
    (w1, w2) in AP(lam+eta) give the presentations
    (w1, w̃(tau)(w2^{-1}(0)));
  * the predicted set W? of a mod-p type rhobar:  pairs (w, w2) with w
    restricted dominant, w2 dominant and w2 ↑ w give the presentations
    (w, w̃(rhobar)(w2^{-1}(0))), with w2 = w exactly on the obvious subset.

The defect of a predicted weight is len(t_eta) - len((w_h w)^{-1} w0 w2);
it vanishes exactly on the obvious weights, and the cycle solver eliminates
it recursively: a defect-zero weight is read off from a single auxiliary
type, and a higher-defect weight from an auxiliary type whose other
predicted constituents all have strictly smaller defect.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine_weyl import (
    WeylTuple,
    bruhat_interval,
    dominant_witness,
    eta_vector,
    evaluate,
    finite,
    invert,
    is_dominant,
    is_regular,
    length,
    multiply,
    perm_act,
    perm_inverse,
    restricted_classes,
    translation,
    up_leq,
    w0,
    w_h,
)
from .errors import (
    ArgumentError,
    CompatibilityError,
    GenericityError,
    InternalError,
    MembershipError,
    OracleError,
)
from .inertial_types import TameTypePresentation, compatible_zeta, make_type
from .weights import CentralCharacter, SerreWeightPresentation, central_character

__all__ = [
    "CycleExpr",
    "default_multiplicity",
    "jh_set",
    "w_question",
    "PredictedWeight",
    "covers",
    "covers_up_oracle",
    "intersection",
    "w_rhobar_tau",
    "defect",
    "max_defect_weight",
    "bm_cycles",
    "jh_contains_fixed",
]


# ---------------------------------------------------------------------------
# formal cycle expressions

@dataclass(frozen=True)
class CycleExpr:
    """A formal rational combination of symbols (type labels or component
    labels); zero coefficients are pruned."""

    terms: tuple  # sorted tuple of (symbol, Fraction)

    @classmethod
    def of(cls, mapping):
        items = tuple(sorted((k, Fraction(v)) for k, v in mapping.items() if v))
        return cls(items)

    def as_dict(self):
        return dict(self.terms)

    def __add__(self, other):
        out = self.as_dict()
        for k, v in other.terms:
            out[k] = out.get(k, Fraction(0)) + v
        return CycleExpr.of(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return CycleExpr.of({k: v * c for k, v in self.terms})

    def to_json(self):
        return [[list(k) if isinstance(k, tuple) else k, str(v)]
                for k, v in self.terms]


def default_multiplicity(tau: TameTypePresentation,
                         sigma: SerreWeightPresentation) -> int:
    return 1


def _check_multiplicity(mult, tau, sigma, n):
    m = mult(tau, sigma)
    if not isinstance(m, int) or m <= 0:
        raise OracleError(f"multiplicity oracle returned {m!r}")
    if n <= 3 and m != 1:
        raise OracleError("multiplicities must be 1 in the multiplicity-free range")
    return m


# ---------------------------------------------------------------------------
# Jordan-Hölder labels

def _h(lam_row):
    return max(lam_row) - min(lam_row)


def jh_set(tau: TameTypePresentation, lam, force: bool = False):
    """Labels of the constituents of the reduced type twisted by W(lam):
    { (w1, w̃(tau)(w2^{-1}(0))) : (w1, w2) in AP(lam+eta) }, sorted."""
    ctx = tau.ctx
    lam = _weight_tuple(ctx, lam)
    eta = eta_vector(ctx.n)
    need = max(2 * _h(eta), max(_h(tuple(l + e for l, e in zip(row, eta)))
                                for row in lam))
    if not force and tau.depth() < need:
        raise GenericityError(
            f"type is only {tau.depth()}-generic, need {need} (pass force to override)")
    wt = tau.w_tilde()
    per_embedding = []
    from .affine_weyl import ap_enumerate
    for j in range(ctx.f):
        lpe = tuple(l + e for l, e in zip(lam[j], eta))
        per_embedding.append(ap_enumerate(lpe))
    out = []
    for combo in _product(per_embedding):
        w1 = WeylTuple(tuple(pr[0] for pr in combo))
        omega = tuple(
            tuple(evaluate(wt[j], evaluate(invert(combo[j][1]), (0,) * ctx.n)))
            for j in range(ctx.f))
        out.append(SerreWeightPresentation(w1, omega, ctx).canonical())
    out = sorted(set(out), key=lambda s: s.sort_key())
    if len(out) != _prod(len(pe) for pe in per_embedding):
        raise InternalError("JH parametrization failed to be injective")
    return out


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


def _weight_tuple(ctx, lam):
    lam = tuple(tuple(int(x) for x in row) for row in lam)
    if len(lam) != ctx.f or any(len(r) != ctx.n for r in lam):
        raise ArgumentError(f"weight tuple must be {ctx.f} rows of length {ctx.n}")
    for row in lam:
        if any(row[i] < row[i + 1] for i in range(ctx.n - 1)):
            raise ArgumentError(f"weight {row} is not dominant")
    return lam


def jh_contains_fixed(tau: TameTypePresentation, lam,
                      sigma: SerreWeightPresentation) -> bool:
    """Containment criterion at a fixed compatible presentation:
    t_omega · (interval below w0 w1)  ⊂  w̃(tau) · Adm(lam+eta)."""
    ctx = tau.ctx
    lam = _weight_tuple(ctx, lam)
    eta = eta_vector(ctx.n)
    wt = tau.w_tilde()
    from .affine_weyl import adm
    for j in range(ctx.f):
        lpe = tuple(l + e for l, e in zip(lam[j], eta))
        target = set(adm(lpe))
        base = invert(wt[j])
        t_om = translation(sigma.omega[j])
        for m in bruhat_interval(multiply(w0(ctx.n), sigma.w1[j])):
            if multiply(base, multiply(t_om, m)) not in target:
                return False
    return True


# ---------------------------------------------------------------------------
# predicted weights

@dataclass(frozen=True)
class PredictedWeight:
    """A W?-member with its defining pair: presentation (w, omega) with
    omega = w̃(rhobar)(w2^{-1}(0)) and w2 ↑ w (obvious when w2 = w)."""

    presentation: SerreWeightPresentation
    w: WeylTuple
    w2: WeylTuple
    obvious: bool
    defect: int


def _require_f_type(rho):
    if rho.kind != "F":
        raise ArgumentError("expected a mod-p type (kind 'F')")


def w_question(rho: TameTypePresentation, force: bool = False):
    """The predicted weight set of a mod-p type, with obviousness flags and
    defects, sorted by presentation."""
    return list(_w_question_cached(rho, force))


from functools import lru_cache


@lru_cache(maxsize=256)
def _w_question_cached(rho: TameTypePresentation, force: bool):
    ctx = rho.ctx
    _require_f_type(rho)
    eta = eta_vector(ctx.n)
    if not force and rho.depth() < 2 * _h(eta):
        raise GenericityError(
            f"mod-p type is only {rho.depth()}-generic, need {2 * _h(eta)}")
    wt = rho.w_tilde()
    n = ctx.n
    per_embedding = []
    for _ in range(ctx.f):
        pairs = []
        for w1 in restricted_classes(n):
            for w2 in bruhat_interval(w1):
                if is_dominant(w2):  # w2 ↑ w1 iff w2 <= w1, both dominant
                    pairs.append((w1, w2))
        per_embedding.append(pairs)
    out = []
    for combo in _product(per_embedding):
        w = WeylTuple(tuple(pr[0] for pr in combo))
        w2 = WeylTuple(tuple(pr[1] for pr in combo))
        omega = tuple(
            tuple(evaluate(wt[j], evaluate(invert(w2[j]), (0,) * n)))
            for j in range(ctx.f))
        pres = SerreWeightPresentation(w, omega, ctx).canonical()
        out.append(PredictedWeight(
            presentation=pres, w=w, w2=w2,
            obvious=all(a == b for a, b in zip(w, w2)),
            defect=_defect_of_pair(w, w2)))
    out.sort(key=lambda r: r.presentation.sort_key())
    return tuple(out)


def _defect_of_pair(w: WeylTuple, w2: WeylTuple) -> int:
    n = w.n
    eta = eta_vector(n)
    total = 0
    for j in range(w.f):
        g = multiply(invert(multiply(w_h(n), w[j])), multiply(w0(n), w2[j]))
        total += length(translation(eta)) - length(g)
    return total


# ---------------------------------------------------------------------------
# the covering order

def _require_compatible(s0: SerreWeightPresentation, s1: SerreWeightPresentation):
    if s0.ctx != s1.ctx:
        raise ArgumentError("presentations over different contexts")
    if central_character(s0).zeta != central_character(s1).zeta:
        raise CompatibilityError("presentations carry different central characters")


def covers(sigma0: SerreWeightPresentation, sigma: SerreWeightPresentation,
           force: bool = False) -> bool:
    """sigma0 covers sigma, decided by interval containment
    t_{omega'} (interval below w0 w') ⊂ t_omega (interval below w0 w)."""
    _require_compatible(sigma0, sigma)
    ctx = sigma0.ctx
    eta = eta_vector(ctx.n)
    if not force and sigma0.depth() < 3 * _h(eta):
        raise GenericityError(
            f"covering needs a {3 * _h(eta)}-deep upper weight, have {sigma0.depth()}")
    for j in range(ctx.f):
        big = set(bruhat_interval(multiply(w0(ctx.n), sigma0.w1[j])))
        shift = translation(tuple(
            a - b for a, b in zip(sigma.omega[j], sigma0.omega[j])))
        for m in bruhat_interval(multiply(w0(ctx.n), sigma.w1[j])):
            if multiply(shift, m) not in big:
                return False
    return True


def covers_up_oracle(sigma0: SerreWeightPresentation,
                     sigma: SerreWeightPresentation) -> bool:
    """The translated-arrow reading: w' ↑ t_{s(omega - omega')} w for every
    finite Weyl representative s (quantified over all of W)."""
    _require_compatible(sigma0, sigma)
    ctx = sigma0.ctx
    from .affine_weyl import all_perms
    for j in range(ctx.f):
        diff = tuple(a - b for a, b in zip(sigma0.omega[j], sigma.omega[j]))
        for s in all_perms(ctx.n):
            t = translation(perm_act(s, diff))
            if not up_leq(sigma.w1[j], multiply(t, sigma0.w1[j])):
                return False
    return True


# ---------------------------------------------------------------------------
# intersections

def w_rhobar_tau(rho: TameTypePresentation, tau: TameTypePresentation) -> WeylTuple:
    """w̃(rhobar, tau) = w̃(tau)^{-1} w̃(rhobar)."""
    return tau.w_tilde().inverse() * rho.w_tilde()


def _require_lambda_compatible(rho, tau, lam):
    zr = compatible_zeta(rho)
    zt = compatible_zeta(tau, lam)
    if zr.zeta != zt.zeta:
        raise CompatibilityError(
            f"no common central character: rhobar gives {zr.zeta}, "
            f"tau gives {zt.zeta}")
    return zr


def intersection(rho: TameTypePresentation, tau: TameTypePresentation, lam,
                 force: bool = False):
    """W?(rhobar) ∩ JH of the lam-twisted type, through the factorization
    criterion w̃(rhobar,tau) = w2^{-1} w w1 with w1 ↑ w ↑ t_lam w_h^{-1} w2."""
    ctx = rho.ctx
    _require_f_type(rho)
    lam = _weight_tuple(ctx, lam)
    _require_lambda_compatible(rho, tau, lam)
    eta = eta_vector(ctx.n)
    if not force:
        if rho.depth() < 2 * _h(eta):
            raise GenericityError("rhobar presentation is not 2h_eta-generic")
        need = max(2 * _h(eta), max(_h(tuple(l + e for l, e in zip(row, eta)))
                                    for row in lam))
        if tau.depth() < need:
            raise GenericityError(f"tau presentation is not {need}-generic")
    wt_tau = tau.w_tilde()
    n = ctx.n
    out = []
    for rec in w_question(rho, force=force):
        # rec.presentation is canonical, so its w1 row and omega row are a
        # matched representative of the class; the arrow tests are invariant
        # under the simultaneous central shift.
        ok = True
        for j in range(ctx.f):
            omega_j = rec.presentation.omega[j]
            g = multiply(translation(tuple(-x for x in omega_j)), wt_tau[j])
            u = dominant_witness(g)
            w2 = multiply(finite(perm_inverse(u)), g)
            if not is_dominant(w2):
                raise InternalError("dominant representative failed")
            target = multiply(translation(lam[j]),
                              multiply(invert(w_h(n)), w2))
            if not up_leq(rec.presentation.w1[j], target):
                ok = False
                break
        if ok:
            out.append(rec.presentation)
    return sorted(set(out), key=lambda s: s.sort_key())


def defect(rho: TameTypePresentation, sigma: SerreWeightPresentation,
           force: bool = False) -> int:
    """The rhobar-defect of a predicted weight; raises if sigma is not
    predicted."""
    for rec in w_question(rho, force=force):
        if rec.presentation == sigma:
            return rec.defect
    raise MembershipError("sigma does not lie in the predicted set of rhobar")


def max_defect_weight(rho: TameTypePresentation, tau: TameTypePresentation,
                      force: bool = False) -> SerreWeightPresentation:
    """The unique defect-maximizing weight of the intersection: factor
    w̃(rhobar,tau) = w2^{-1} w0 w1 with w1 dominant and w2 restricted, and
    return (w_h^{-1} w2, w̃(rhobar)(w1^{-1}(0)))."""
    ctx = rho.ctx
    _require_f_type(rho)
    zero = (((0,) * ctx.n),) * ctx.f
    _require_lambda_compatible(rho, tau, zero)
    g = w_rhobar_tau(rho, tau)
    eta = eta_vector(ctx.n)
    from .affine_weyl import adm, regular_factorization
    adm_eta = set(adm(eta))
    comps1, comps2 = [], []
    for j in range(ctx.f):
        if not is_regular(g[j]):
            raise ArgumentError("w̃(rhobar,tau) is not regular")
        if g[j] not in adm_eta:
            raise ArgumentError("w̃(rhobar,tau) is not eta-admissible")
        a1, a2 = regular_factorization(invert(g[j]))
        w1_j, w2_j = a2, a1  # variant factorization: swap through inversion
        if multiply(invert(w2_j), multiply(w0(ctx.n), w1_j)) != g[j]:
            raise InternalError("variant factorization product check failed")
        comps1.append(w1_j)
        comps2.append(w2_j)
    wt_rho = rho.w_tilde()
    w1 = WeylTuple(tuple(comps1))
    w2 = WeylTuple(tuple(comps2))
    whinv = invert(w_h(ctx.n))
    pres_w = WeylTuple(tuple(multiply(whinv, w2[j]) for j in range(ctx.f)))
    omega = tuple(
        tuple(evaluate(wt_rho[j], evaluate(invert(w1[j]), (0,) * ctx.n)))
        for j in range(ctx.f))
    return SerreWeightPresentation(pres_w, omega, ctx).canonical()


# ---------------------------------------------------------------------------
# the recursive cycle solver

def _aux_type_from_element(ctx, wt: WeylTuple, kind="E") -> TameTypePresentation:
    """Read a presentation (s, mu) off a tuple of elements t_{mu+eta} s."""
    eta = eta_vector(ctx.n)
    s, mu = [], []
    for g in wt:
        s.append(finite(g.w))
        mu.append(tuple(c - e for c, e in zip(g.nu, eta)))
    return TameTypePresentation(WeylTuple(tuple(s)), tuple(mu), ctx, kind)


def bm_cycles(rho: TameTypePresentation, mult=default_multiplicity,
              force: bool = False):
    """For each predicted weight sigma of rhobar, a formal expression of its
    cycle as a combination of auxiliary type symbols, proceeding from the
    defect-zero weights upward.  Returns {presentation: (defect, CycleExpr)}
    and runs entirely on explicitly constructed auxiliary types."""
    ctx = rho.ctx
    _require_f_type(rho)
    n = ctx.n
    if not force and rho.depth() < 2 * n:
        raise GenericityError(f"cycle solver needs a 2n-generic mod-p type, "
                              f"have depth {rho.depth()}")
    eta = eta_vector(n)
    wt_rho = rho.w_tilde()
    records = w_question(rho, force=force)
    zero_lam = ((0,) * n,) * ctx.f
    solved = {}
    ordered = sorted(records, key=lambda r: r.defect)
    for rec in ordered:
        sigma = rec.presentation
        # auxiliary type with w̃(tau) = w̃(rhobar) · w2^{-1} w0 w_h w;  for an
        # obvious pair (w, w) the inner factor collapses to t_{-w^{-1}(eta)},
        # and in general w̃(rhobar, tau) = (w_h w)^{-1} w0 w2 is the regular
        # eta-admissible element whose defect maximizer is sigma itself.
        comps = []
        for j in range(ctx.f):
            inner = multiply(invert(rec.w2[j]),
                             multiply(w0(n), multiply(w_h(n), rec.w[j])))
            comps.append(multiply(wt_rho[j], inner))
        tau = _aux_type_from_element(ctx, WeylTuple(tuple(comps)))
        if rec.defect == 0:
            m = _check_multiplicity(mult, tau, sigma, n)
            expr = CycleExpr.of({_type_symbol(tau): Fraction(1, m)})
        else:
            others = intersection(rho, tau, zero_lam, force=True)
            expr = CycleExpr.of({_type_symbol(tau): Fraction(1)})
            for kappa in others:
                if kappa == sigma:
                    continue
                if kappa not in solved:
                    raise InternalError(
                        "defect triangularity violated by an auxiliary type")
                mk = _check_multiplicity(mult, tau, kappa, n)
                expr = expr - solved[kappa][1].scale(mk)
            m = _check_multiplicity(mult, tau, sigma, n)
            expr = expr.scale(Fraction(1, m))
            if sigma not in others:
                raise InternalError("maximizer missing from its own intersection")
        solved[sigma] = (rec.defect, expr)
    return solved


def _type_symbol(tau: TameTypePresentation):
    return ("Z_tau",) + tau.sort_key()
