"""Serre weights of GL_n(F_{p^f}) through lowest alcove presentations.

A weight is named by a pair (w1, omega): an f-tuple w1 of restricted dominant
elements and an integer n x f weight matrix omega, taken modulo the diagonal
central-translation action (w1, omega) ~ (t_nu w1, omega - nu) for nu in
X^0(T)^J.  The attached p-restricted highest weight is

    kappa = pi^{-1}(w1) · (omega - eta)

for the p-dot action w̃·lam = w(lam + eta + p nu) - eta, and the presentation
carries an algebraic central character, one integer per embedding.  The module
also provides the depth/genericity tests and the genericity polynomials P_m
together with the hull-shift combinator f ↦ f^omega.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .affine_weyl import (
    GroupContext,
    WeylElement,
    WeylTuple,
    degree,
    eta_vector,
    identity,
    invert,
    multiply,
    omega_power,
    pairing,
    perm_act,
    positive_roots,
    simple_reflections,
    sort_key,
    translation,
)
from .errors import (
    ArgumentError,
    CompatibilityError,
    DepthError,
    InputError,
    InternalError,
)

__all__ = [
    "SerreWeightPresentation",
    "CentralCharacter",
    "Polynomial",
    "build_Pm",
    "superscript",
    "genericity",
    "weight_depth",
    "weight_depth_base",
    "serre_weight",
    "central_character",
    "lap_of",
    "weights_equal_mod_center",
    "dot_action",
    "conv_contains",
    "conv_lattice_points",
]


# ---------------------------------------------------------------------------
# depth

def weight_depth(lam, p: int) -> int:
    """Largest m such that lam is m-deep in some p-alcove: m < |<lam+eta,
    alpha∨> + p k| for all alpha > 0 and k.  Returns -1 if on a wall."""
    n = len(lam)
    eta = eta_vector(n)
    best = p
    for root in positive_roots(n):
        v = (pairing(lam, root) + pairing(eta, root)) % p
        best = min(best, v, p - v)
    return best - 1


def weight_depth_base(lam, p: int) -> int:
    """Depth of lam inside the base p-alcove: largest m with
    m < <lam+eta, alpha∨> < p - m for all alpha > 0; -1 if outside."""
    n = len(lam)
    eta = eta_vector(n)
    best = p
    for root in positive_roots(n):
        v = pairing(lam, root) + pairing(eta, root)
        if not 0 < v < p:
            return -1
        best = min(best, v, p - v)
    return best - 1


# ---------------------------------------------------------------------------
# genericity polynomials

class Polynomial:
    """Integer polynomial in n variables, stored as {exponent tuple: coeff}."""

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = self.terms.get(tuple(e), 0) + c

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    def __sub__(self, other):
        return self + (other * -1)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def shift(self, nu):
        """Substitute t_i -> t_i - nu_i."""
        out = Polynomial.constant(self.nvars, 0)
        for e, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            for i, exp in enumerate(e):
                base = Polynomial.variable(self.nvars, i) - Polynomial.constant(
                    self.nvars, nu[i])
                for _ in range(exp):
                    term = term * base
            out = out + term
        return out

    def eval(self, point) -> int:
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, exp in zip(point, e):
                v *= x ** exp
            total += v
        return total

    def to_json(self):
        return {"nvars": self.nvars,
                "terms": [[list(e), c] for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["nvars"]),
                       {tuple(e): int(c) for e, c in data["terms"]})
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad polynomial encoding: {data!r}") from exc


def build_Pm(n: int, m: int) -> Polynomial:
    """P_m = prod_{i=1}^{n} prod_{j=1}^{m} (X_i - X_{i+1} - j), X_{n+1} = X_1."""
    if m < 0:
        raise ArgumentError("m must be nonnegative")
    out = Polynomial.constant(n, 1)
    for i in range(n):
        xi = Polynomial.variable(n, i)
        xnext = Polynomial.variable(n, (i + 1) % n)
        for j in range(1, m + 1):
            out = out * (xi - xnext - Polynomial.constant(n, j))
    return out


def conv_contains(nu, lam) -> bool:
    """nu in Conv(W·lam), decided by majorization of the sorted vectors."""
    if sum(nu) != sum(lam):
        return False
    a = sorted(nu, reverse=True)
    b = sorted(lam, reverse=True)
    pa = pb = 0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pa > pb:
            return False
    return True


def conv_lattice_points(lam):
    """Integer points of the Weyl-orbit hull of lam."""
    lo, hi = min(lam), max(lam)
    pts = []
    for cand in itertools.product(range(lo, hi + 1), repeat=len(lam)):
        if conv_contains(cand, lam):
            pts.append(cand)
    return pts


def superscript(P: Polynomial, omega) -> Polynomial:
    """f^omega(t) = prod over nu in Conv(omega) of f(t - nu), omega dominant."""
    if any(omega[i] < omega[i + 1] for i in range(len(omega) - 1)):
        raise ArgumentError(f"superscript weight {omega} is not dominant")
    out = Polynomial.constant(P.nvars, 1)
    for nu in conv_lattice_points(tuple(omega)):
        out = out * P.shift(nu)
    return out


def genericity(ctx: GroupContext, mu, m: int | None = None,
               polynomial: Polynomial | None = None) -> bool:
    """m-mode: every embedding of the weight tuple mu is m-deep; polynomial
    mode: P(mu_j) is nonzero mod p for every embedding."""
    p = ctx.require_prime()
    mu = _as_weight_tuple(ctx, mu)
    if polynomial is not None:
        return all(polynomial.eval(mu_j) % p != 0 for mu_j in mu)
    if m is None:
        raise ArgumentError("need a depth bound or a polynomial")
    return all(weight_depth(mu_j, p) >= m for mu_j in mu)


def _as_weight_tuple(ctx, mu):
    mu = tuple(tuple(int(c) for c in row) for row in mu)
    if len(mu) != ctx.f or any(len(row) != ctx.n for row in mu):
        raise ArgumentError(f"weight tuple must be {ctx.f} rows of length {ctx.n}")
    return mu


# ---------------------------------------------------------------------------
# the p-dot action

def dot_action(a: WeylElement, lam, p: int):
    """w̃ · lam = w(lam + eta + p nu) - eta; for the carrier (w, m) = t_m ∘ w
    this is lam ↦ w(lam + eta) + p m - eta."""
    n = a.n
    eta = eta_vector(n)
    shifted = tuple(x + e for x, e in zip(lam, eta))
    moved = perm_act(a.w, shifted)
    return tuple(mv + p * c - e for mv, c, e in zip(moved, a.nu, eta))


def _alcove_element(point, n):
    """The unique group element u with point in u(A0), by reflecting the point
    into the base alcove along violated walls."""
    refs = simple_reflections(n)
    cur = tuple(point)
    u = identity(n)
    guard = 0
    while True:
        guard += 1
        if guard > 10_000:
            raise InternalError("alcove reduction failed to terminate")
        moved = False
        for i in range(1, n):
            if cur[i - 1] - cur[i] < 0:
                s = refs[i]
                cur = tuple(perm_act(s.w, cur))
                u = multiply(s, u)
                moved = True
        if cur[0] - cur[n - 1] > 1:
            s = refs[0]
            from .affine_weyl import evaluate as _eval
            cur = _eval(s, cur)
            u = multiply(s, u)
            moved = True
        if not moved:
            break
    if any(cur[i] - cur[i + 1] <= 0 for i in range(n - 1)) or cur[0] - cur[n - 1] >= 1:
        raise InternalError("alcove reduction landed on a wall")
    return invert(u)


# ---------------------------------------------------------------------------
# presentations

@dataclass(frozen=True)
class SerreWeightPresentation:
    """A lowest alcove presentation (w1, omega) over a fixed context, stored
    with a canonical representative of the central-translation equivalence."""

    w1: WeylTuple
    omega: tuple
    ctx: GroupContext

    def __post_init__(self):
        omega = tuple(tuple(int(c) for c in row) for row in self.omega)
        if self.w1.f != self.ctx.f or self.w1.n != self.ctx.n:
            raise ArgumentError("presentation does not match its context")
        if len(omega) != self.ctx.f or any(len(r) != self.ctx.n for r in omega):
            raise ArgumentError("omega must be an f-tuple of length-n rows")
        object.__setattr__(self, "omega", omega)

    def canonical(self) -> "SerreWeightPresentation":
        comps, rows = [], []
        for j in range(self.ctx.f):
            c = -max(self.w1[j].nu)
            comps.append(multiply(translation((c,) * self.ctx.n), self.w1[j]))
            rows.append(tuple(x - c for x in self.omega[j]))
        return SerreWeightPresentation(WeylTuple(tuple(comps)), tuple(rows), self.ctx)

    def key(self):
        c = self.canonical()
        return tuple((c.w1[j].w, c.w1[j].nu, c.omega[j]) for j in range(self.ctx.f))

    def __eq__(self, other):
        return (isinstance(other, SerreWeightPresentation)
                and self.ctx == other.ctx and self.key() == other.key())

    def __hash__(self):
        return hash((self.ctx, self.key()))

    def highest_weight(self):
        return serre_weight(self)

    def character(self):
        return central_character(self)

    def depth(self) -> int:
        p = self.ctx.require_prime()
        eta = eta_vector(self.ctx.n)
        return min(
            weight_depth(tuple(x - e for x, e in zip(row, eta)), p)
            for row in self.omega)

    def sort_key(self):
        c = self.canonical()
        return tuple(
            sort_key(c.w1[j]) + (c.omega[j],) for j in range(self.ctx.f))

    def to_json(self):
        c = self.canonical()
        return {"w1": c.w1.to_json(), "omega": [list(r) for r in c.omega],
                "zeta": list(central_character(self).zeta)}

    @classmethod
    def from_json(cls, data, ctx: GroupContext):
        try:
            return cls(WeylTuple.from_json(data["w1"]),
                       tuple(tuple(r) for r in data["omega"]), ctx)
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad presentation encoding: {data!r}") from exc


@dataclass(frozen=True)
class CentralCharacter:
    """An algebraic central character, one integer per embedding via the
    identification X*(Z) = Z, lam ↦ sum(lam)."""

    zeta: tuple

    def __post_init__(self):
        object.__setattr__(self, "zeta", tuple(int(z) for z in self.zeta))

    @property
    def f(self):
        return len(self.zeta)

    def reduce_offset(self, other: "CentralCharacter", p: int):
        """Solve (p - pi) xi = self - other; returns the integer vector xi or
        None when the difference is not in the image."""
        if self.f != other.f:
            raise ArgumentError("central characters over different embedding sets")
        d = [a - b for a, b in zip(self.zeta, other.zeta)]
        f = self.f
        num = sum(p ** (f - 1 - k) * d[k] for k in range(f))
        den = p ** f - 1
        if num % den != 0:
            return None
        xi = [num // den]
        for j in range(f - 1):
            xi.append(p * xi[-1] - d[j])
        if p * xi[-1] - d[f - 1] != xi[0]:
            raise InternalError("circulant solve failed")
        return tuple(xi)

    def congruent(self, other: "CentralCharacter", p: int) -> bool:
        return self.reduce_offset(other, p) is not None


def serre_weight(lap: SerreWeightPresentation):
    """kappa = pi^{-1}(w1) · (omega - eta), computed embeddingwise."""
    ctx = lap.ctx
    p = ctx.require_prime()
    if not lap.w1.is_restricted():
        raise ArgumentError("w1 components must be restricted dominant")
    eta = eta_vector(ctx.n)
    shifted = lap.w1.pi_inverse()
    return tuple(
        dot_action(shifted[j],
                   tuple(x - e for x, e in zip(lap.omega[j], eta)), p)
        for j in range(ctx.f))


def central_character(lap: SerreWeightPresentation) -> CentralCharacter:
    """Per embedding, the degree of t_{omega - eta} w1 (independent of the
    representative)."""
    ctx = lap.ctx
    eta = eta_vector(ctx.n)
    zeta = tuple(
        sum(lap.omega[j]) - sum(eta) + degree(lap.w1[j]) for j in range(ctx.f))
    return CentralCharacter(zeta)


def _omega_twist_weight(lap: SerreWeightPresentation, xi):
    """The presentation (w1 · pi(delta^{-1}), delta · (omega - eta) + eta) for
    the central-twist delta with degrees xi."""
    ctx = lap.ctx
    p = ctx.require_prime()
    eta = eta_vector(ctx.n)
    delta = [omega_power(ctx.n, x) for x in xi]
    comps, rows = [], []
    for j in range(ctx.f):
        comps.append(multiply(lap.w1[j], invert(delta[(j + 1) % ctx.f])))
        moved = dot_action(delta[j], tuple(x - e for x, e in zip(lap.omega[j], eta)), p)
        rows.append(tuple(x + e for x, e in zip(moved, eta)))
    return SerreWeightPresentation(WeylTuple(tuple(comps)), tuple(rows), ctx)


def lap_of(ctx: GroupContext, kappa, zeta: CentralCharacter) -> SerreWeightPresentation:
    """The unique lowest alcove presentation of the weight F(kappa) compatible
    with zeta; requires kappa to be 0-deep."""
    p = ctx.require_prime()
    kappa = _as_weight_tuple(ctx, kappa)
    if zeta.f != ctx.f:
        raise ArgumentError("central character has the wrong number of embeddings")
    eta = eta_vector(ctx.n)
    units, rows = [], []
    for j in range(ctx.f):
        if weight_depth(kappa[j], p) < 0:
            raise DepthError(
                f"kappa at embedding {j} is not 0-deep; presentation not unique")
        point = tuple(Fraction(x + e, p) for x, e in zip(kappa[j], eta))
        u = _alcove_element(point, ctx.n)
        mu0 = dot_action(invert(u), kappa[j], p)
        if weight_depth_base(mu0, p) < 0:
            raise InternalError("alcove reduction gave a non-interior base weight")
        units.append(u)
        rows.append(tuple(x + e for x, e in zip(mu0, eta)))
    w1 = WeylTuple(tuple(units)).pi()
    cand = SerreWeightPresentation(w1, tuple(rows), ctx)
    got = central_character(cand)
    xi = zeta.reduce_offset(got, p)
    if xi is None:
        raise CompatibilityError(
            f"zeta {zeta.zeta} is not congruent to the weight's character {got.zeta}")
    out = _omega_twist_weight(cand, xi).canonical()
    if central_character(out).zeta != zeta.zeta:
        raise InternalError("central-character twist failed")
    if not weights_equal_mod_center(serre_weight(out), kappa, p):
        raise InternalError("lap_of did not invert serre_weight")
    return out


def weights_equal_mod_center(k1, k2, p: int) -> bool:
    """Equality of highest weights in X*(T)^J / (p - pi) X^0(T)^J."""
    f = len(k1)
    diffs = []
    for j in range(f):
        d = [a - b for a, b in zip(k1[j], k2[j])]
        if len(set(d)) != 1:
            return False
        diffs.append(d[0])
    zero = CentralCharacter((0,) * f)
    return CentralCharacter(tuple(diffs)).reduce_offset(zero, p) is not None
