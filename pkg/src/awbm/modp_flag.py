"""Exact Laurent-polynomial matrix computations over F_p on the affine flag
variety: affine charts, Schubert-cell geometry, the first-order monodromy
condition, and component labels with their torus fixed points.

A point of the open cell attached to a starred element z = t_nu ∘ w (in the
dual group) is z·N with N unipotent supported on the roots

    -alpha  with  floor<z(x0), alpha∨>  >=  ceil<x0, alpha∨>,

the -alpha entry being v^[alpha>0] f_alpha with deg f_alpha = d_{alpha} =
floor<z(x0),alpha∨> - ceil<x0,alpha∨>.  The monodromy condition

    v (dA/dv) A^{-1} + A Diag(a) A^{-1}  ∈  (1/v)·Lie(Iw)

cuts the cell down to an affine space: the coefficients below the top of each
f_alpha are solved triangularly along the height order of the chamber w(Δ)
containing the support, with pivots i + [alpha>0] + <a, alpha∨> - these are
nonzero exactly when a is generic enough mod p, and a vanishing pivot is
reported with its root and index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine_weyl import (
    GroupContext,
    WeylElement,
    WeylTuple,
    base_point,
    bruhat_interval,
    dominant_witness,
    eta_vector,
    evaluate,
    multiply,
    pairing,
    perm_act,
    perm_inverse,
    positive_roots,
    all_roots,
    sort_key,
    star,
    translation,
    w0,
)
from .errors import (
    ArgumentError,
    GenericityError,
    InputError,
    InternalError,
    ZeroDivisorError,
)
from .inertial_types import TameTypePresentation
from .weights import SerreWeightPresentation

__all__ = [
    "LaurentPoly",
    "LaurentMatrix",
    "ChartTemplate",
    "chart_template",
    "CellGeometry",
    "cell_geometry",
    "required_genericity",
    "monodromy_solve",
    "verify_nabla",
    "nabla_matrix",
    "weyl_matrix",
    "ComponentData",
    "component_data",
    "special_fiber_components",
]


# ---------------------------------------------------------------------------
# Laurent polynomials over F_p

@dataclass(frozen=True)
class LaurentPoly:
    """An element of F_p[v, v^-1], stored as a sorted tuple of (exp, coeff)
    with coefficients in [1, p)."""

    p: int
    terms: tuple

    @classmethod
    def of(cls, p, mapping):
        items = tuple(sorted((int(e), c % p) for e, c in mapping.items() if c % p))
        return cls(p, items)

    @classmethod
    def zero(cls, p):
        return cls(p, ())

    @classmethod
    def const(cls, p, c):
        return cls.of(p, {0: c})

    @classmethod
    def monomial(cls, p, e, c=1):
        return cls.of(p, {e: c})

    def as_dict(self):
        return dict(self.terms)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = (out.get(e, 0) + c) % self.p
        return LaurentPoly.of(self.p, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return LaurentPoly.of(self.p, {e: x * c for e, x in self.terms})

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                out[e] = (out.get(e, 0) + c1 * c2) % self.p
        return LaurentPoly.of(self.p, out)

    def shift(self, k):
        return LaurentPoly(self.p, tuple((e + k, c) for e, c in self.terms))

    def v_ddv(self):
        """v d/dv: the exponent-weighted scaling (exact on Laurent polynomials)."""
        return LaurentPoly.of(self.p, {e: e * c for e, c in self.terms})

    def coeff(self, e):
        for ee, c in self.terms:
            if ee == e:
                return c
        return 0

    def val(self):
        return self.terms[0][0] if self.terms else None

    def is_monomial(self):
        return len(self.terms) == 1

    def to_json(self):
        return {str(e): c for e, c in self.terms}

    @classmethod
    def from_json(cls, p, data):
        try:
            return cls.of(p, {int(e): int(c) for e, c in data.items()})
        except (ValueError, AttributeError) as exc:
            raise InputError(f"bad Laurent encoding: {data!r}") from exc


@dataclass(frozen=True)
class LaurentMatrix:
    """An n x n matrix over F_p[v, v^-1]."""

    p: int
    rows: tuple  # tuple of tuples of LaurentPoly

    @property
    def n(self):
        return len(self.rows)

    @classmethod
    def zero(cls, p, n):
        z = LaurentPoly.zero(p)
        return cls(p, tuple((z,) * n for _ in range(n)))

    @classmethod
    def identity(cls, p, n):
        one = LaurentPoly.const(p, 1)
        z = LaurentPoly.zero(p)
        return cls(p, tuple(tuple(one if i == j else z for j in range(n))
                            for i in range(n)))

    def entry(self, i, j):
        return self.rows[i - 1][j - 1]

    def set_entry(self, i, j, val):
        rows = [list(r) for r in self.rows]
        rows[i - 1][j - 1] = val
        return LaurentMatrix(self.p, tuple(tuple(r) for r in rows))

    def __add__(self, other):
        return LaurentMatrix(self.p, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return LaurentMatrix(self.p, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __mul__(self, other):
        n = self.n
        z = LaurentPoly.zero(self.p)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = z
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(tuple(row))
        return LaurentMatrix(self.p, tuple(out))

    def v_ddv(self):
        return LaurentMatrix(self.p, tuple(
            tuple(e.v_ddv() for e in row) for row in self.rows))

    def det(self) -> LaurentPoly:
        n = self.n
        if n == 1:
            return self.rows[0][0]
        acc = LaurentPoly.zero(self.p)
        for j in range(n):
            minor = LaurentMatrix(self.p, tuple(
                tuple(self.rows[i][k] for k in range(n) if k != j)
                for i in range(1, n)))
            term = self.rows[0][j] * minor.det()
            acc = acc + (term if j % 2 == 0 else term.scale(-1))
        return acc

    def inverse(self) -> "LaurentMatrix":
        """Adjugate over a monomial determinant (unit times a power of v)."""
        d = self.det()
        if not d.is_monomial():
            raise ArgumentError(
                "matrix determinant is not a unit times a power of v")
        (e, c), = d.terms
        cinv = pow(c, -1, self.p)
        n = self.n
        adj = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = LaurentMatrix(self.p, tuple(
                    tuple(self.rows[r][k] for k in range(n) if k != i)
                    for r in range(n) if r != j))
                m = minor.det() if n > 1 else LaurentPoly.const(self.p, 1)
                sgn = 1 if (i + j) % 2 == 0 else -1
                row.append(m.scale(sgn * cinv).shift(-e))
            adj.append(tuple(row))
        return LaurentMatrix(self.p, tuple(adj))

    def to_json(self):
        return {"p": self.p,
                "entries": [[e.to_json() for e in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data):
        try:
            p = int(data["p"])
            rows = tuple(
                tuple(LaurentPoly.from_json(p, e) for e in row)
                for row in data["entries"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad matrix encoding: {data!r}") from exc
        return cls(p, rows)


def weyl_matrix(z: WeylElement, p: int) -> LaurentMatrix:
    """The loop-group matrix of z = t_nu ∘ w: v^nu · P_w with P_w e_j = e_{w(j)}."""
    n = z.n
    m = LaurentMatrix.zero(p, n)
    for j in range(1, n + 1):
        i = z.w[j - 1]
        m = m.set_entry(i, j, LaurentPoly.monomial(p, z.nu[i - 1]))
    return m


# ---------------------------------------------------------------------------
# affine charts

@dataclass(frozen=True)
class ChartTemplate:
    """Entrywise degree windows of the chart U(z)^{det,<=h}: entry (i,j) is
    v^{prefactor} · sum_{k=lo..hi} c_{ij,k} (v-t)^k with a monic coefficient 1
    at (w(j), j), k = monic_exp; empty when some window cannot reach its
    monic constraint."""

    n: int
    h: int
    w: tuple
    nu: tuple
    prefactor: tuple      # delta_{i>j}
    window_lo: tuple      # -h everywhere
    window_hi: tuple      # nu_j - delta_{i>j} - delta_{i<w(j)}
    monic: tuple          # ((i, j, exp) per column)
    det_sign: int
    det_power: int
    is_empty: bool

    def to_json(self):
        return {
            "n": self.n, "h": self.h, "w": list(self.w), "nu": list(self.nu),
            "prefactor": [list(r) for r in self.prefactor],
            "window_lo": [list(r) for r in self.window_lo],
            "window_hi": [list(r) for r in self.window_hi],
            "monic": [list(m) for m in self.monic],
            "det": {"sign": self.det_sign, "power": self.det_power},
            "empty": self.is_empty,
        }


def _perm_sign(w):
    n = len(w)
    sign = 1
    seen = [False] * n
    for i in range(n):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def chart_template(z: WeylElement, h: int) -> ChartTemplate:
    """The affine chart attached to z = w t_nu (so nu = w^{-1} of the carrier's
    translation part) at pole bound h."""
    if h < 0:
        raise ArgumentError("pole bound h must be nonnegative")
    n = z.n
    nu = perm_act(perm_inverse(z.w), z.nu)
    pref, lo, hi = [], [], []
    empty = False
    for i in range(1, n + 1):
        prow, lrow, hrow = [], [], []
        for j in range(1, n + 1):
            d_gt = 1 if i > j else 0
            d_lt = 1 if i < z.w[j - 1] else 0
            top = nu[j - 1] - d_gt - d_lt
            prow.append(d_gt)
            lrow.append(-h)
            hrow.append(top)
            if top < -h:
                empty = True
        pref.append(tuple(prow))
        lo.append(tuple(lrow))
        hi.append(tuple(hrow))
    monic = []
    for j in range(1, n + 1):
        i = z.w[j - 1]
        d_gt = 1 if i > j else 0
        monic.append((i, j, nu[j - 1] - d_gt))
    return ChartTemplate(
        n=n, h=h, w=z.w, nu=tuple(nu),
        prefactor=tuple(pref), window_lo=tuple(lo), window_hi=tuple(hi),
        monic=tuple(monic), det_sign=_perm_sign(z.w), det_power=sum(nu),
        is_empty=empty)


# ---------------------------------------------------------------------------
# cell geometry and the monodromy condition

@dataclass(frozen=True)
class CellGeometry:
    """Support roots of the unipotent part of the cell through z = star(w̃),
    their degree bounds, the dimension, and the chamber witness."""

    support: tuple        # roots -alpha (as (i,k) pairs) in the support
    degrees: tuple        # ((alpha, d_alpha) for the criterion roots alpha)
    dim: int
    critical: int         # number of positive alpha with the image alcove in
                          # the critical alpha-strip
    witness: tuple        # w with w^{-1} w̃ dominant; -support ⊂ w(Phi+)

    def degree_of(self, alpha):
        for a, d in self.degrees:
            if a == alpha:
                return d
        raise ArgumentError(f"root {alpha} is not a criterion root")

    def to_json(self):
        return {"support": [list(r) for r in self.support],
                "degrees": [[list(a), d] for a, d in self.degrees],
                "dim": self.dim, "critical": self.critical,
                "witness": list(self.witness)}


def _floor(q):
    return q.numerator // q.denominator if isinstance(q, Fraction) else q


def _ceil(q):
    return -((-q).numerator // (-q).denominator) if isinstance(q, Fraction) else q


def cell_geometry(wt: WeylElement) -> CellGeometry:
    n = wt.n
    x = base_point(n)
    y = evaluate(wt, x)
    support, degrees = [], []
    for alpha in all_roots(n):
        if _floor(pairing(y, alpha)) >= _ceil(pairing(x, alpha)):
            i, k = alpha
            support.append((k, i))  # -alpha
            degrees.append((alpha, _floor(pairing(y, alpha)) - _ceil(pairing(x, alpha))))
    critical = sum(1 for r in positive_roots(n) if 0 < pairing(y, r) < 1)
    return CellGeometry(
        support=tuple(sorted(support)), degrees=tuple(sorted(degrees)),
        dim=len(support), critical=critical, witness=dominant_witness(wt))


def required_genericity(wt: WeylElement) -> int:
    """The sharp mod-p genericity bound for the monodromy solver: one more
    than the largest degree window."""
    geom = cell_geometry(wt)
    return max((d for _, d in geom.degrees), default=0) + 1


def _root_height_order(geom: CellGeometry, n: int):
    """Criterion roots sorted by height in the witness chamber's simple
    system, ties lexicographically."""
    winv = perm_inverse(geom.witness)

    def key(item):
        alpha, _ = item
        i, k = alpha
        back = (winv[i - 1], winv[k - 1])
        ht = abs(back[0] - back[1])
        return (ht, back)

    return sorted(geom.degrees, key=key)


def nabla_matrix(A: LaurentMatrix, a_bar) -> LaurentMatrix:
    """v dA/dv · A^{-1} + A · Diag(a) · A^{-1}."""
    p = A.p
    n = A.n
    if len(a_bar) != n:
        raise ArgumentError("diagonal datum has wrong length")
    Ainv = A.inverse()
    D = LaurentMatrix.zero(p, n)
    for i in range(1, n + 1):
        D = D.set_entry(i, i, LaurentPoly.const(p, int(a_bar[i - 1])))
    return (A.v_ddv() * Ainv) + (A * D * Ainv)


def verify_nabla(A: LaurentMatrix, a_bar) -> bool:
    """Whether v·(v dA/dv A^{-1} + A Diag(a) A^{-1}) has polynomial entries
    that are upper triangular mod v."""
    L = nabla_matrix(A, a_bar)
    n = A.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e = L.entry(i, j).shift(1)
            v = e.val()
            if v is not None and v < 0:
                return False
            if i > j and e.coeff(0):
                return False
    return True


def monodromy_solve(wt: WeylElement, a_bar, free_values=None, p: int | None = None,
                    check: bool = True) -> LaurentMatrix:
    """Solve the monodromy condition on the cell through star(wt): returns
    A = star(wt)·N with the below-top coefficients of each support entry
    eliminated along the chamber height order, the top coefficients taken
    from free_values (default 1).  A vanishing pivot i + [alpha>0] + <a,
    alpha∨> raises ZeroDivisorError naming (alpha, i)."""
    if p is None:
        raise ArgumentError("monodromy_solve needs the prime p")
    n = wt.n
    a_bar = tuple(int(x) % p for x in a_bar)
    if len(a_bar) != n:
        raise ArgumentError("a_bar must have length n")
    geom = cell_geometry(wt)
    free = dict(free_values or {})
    for alpha in list(free):
        if tuple(alpha) not in {a for a, _ in geom.degrees}:
            raise ArgumentError(f"free value given for a non-support root {alpha}")
    coeffs = {}  # alpha -> list of coefficients of f_alpha
    for alpha, d in geom.degrees:
        coeffs[alpha] = [0] * (d + 1)
        coeffs[alpha][d] = int(free.get(alpha, 1)) % p

    def build_N():
        N = LaurentMatrix.identity(p, n)
        for alpha, d in geom.degrees:
            i, k = alpha
            delta = 1 if i < k else 0  # alpha > 0
            poly = LaurentPoly.of(p, {t + delta: c
                                      for t, c in enumerate(coeffs[alpha])})
            N = N.set_entry(k, i, poly)  # the -alpha entry
        return N

    for alpha, d in _root_height_order(geom, n):
        i, k = alpha
        delta = 1 if i < k else 0
        pair_a = (a_bar[i - 1] - a_bar[k - 1]) % p
        for t in range(d):
            pivot = (t + delta + pair_a) % p
            if pivot == 0:
                raise ZeroDivisorError(alpha, t)
            L = nabla_matrix(build_N(), a_bar)
            c = L.entry(k, i).coeff(t + delta)
            coeffs[alpha][t] = (coeffs[alpha][t] - c * pow(pivot, -1, p)) % p
        # after elimination the sub-top band of this entry must vanish
        L = nabla_matrix(build_N(), a_bar)
        for t in range(d):
            if L.entry(k, i).coeff(t + delta):
                raise InternalError("triangular elimination failed to clear a band")

    A = weyl_matrix(star(wt), p) * build_N()
    if check and not verify_nabla(A, a_bar):
        raise InternalError("solved matrix fails the monodromy condition")
    return A


# ---------------------------------------------------------------------------
# component labels and torus fixed points

@dataclass(frozen=True)
class ComponentData:
    """A component label with its torus fixed-point data: the bound set
    {star(w̃)·t_omega : w̃ <= w0 w1} always contains the fixed points, the
    obvious set {star(t_omega w w1) : w in W} is always contained in them;
    exactness of the bound set is conditional on a polynomial constraint not
    computed here."""

    label: SerreWeightPresentation
    bound: tuple      # sorted tuple of WeylTuple
    obvious: tuple    # sorted tuple of WeylTuple
    exactness: str    # "conditional"

    def to_json(self):
        return {
            "label": self.label.to_json(),
            "bound": [t.to_json() for t in self.bound],
            "obvious": [t.to_json() for t in self.obvious],
            "exactness": self.exactness,
        }


def _tuple_sort_key(t: WeylTuple):
    return tuple(sort_key(c) for c in t)


def component_data(w1: WeylTuple, omega, ctx: GroupContext,
                   force: bool = False) -> ComponentData:
    """Fixed-point data of the component labelled by (w1, omega)."""
    p = ctx.require_prime()
    omega = tuple(tuple(int(x) for x in row) for row in omega)
    if len(omega) != ctx.f or any(len(r) != ctx.n for r in omega):
        raise ArgumentError("omega must be an f-tuple of length-n rows")
    if not w1.is_restricted():
        raise ArgumentError("w1 components must be restricted dominant")
    label = SerreWeightPresentation(w1, omega, ctx).canonical()
    n = ctx.n
    from .affine_weyl import is_generic_element
    for row in omega:
        if not force and not is_generic_element(translation(row), n - 1, p):
            raise GenericityError(
                f"t_omega must be {n - 1}-generic per embedding")
    per_bound, per_obvious = [], []
    for j in range(ctx.f):
        t_om = translation(omega[j])
        bnd = {multiply(star(m), t_om)
               for m in bruhat_interval(multiply(w0(n), w1[j]))}
        from .affine_weyl import all_perms, finite
        obv = {star(multiply(t_om, multiply(finite(u), w1[j])))
               for u in all_perms(n)}
        if not obv <= bnd:
            raise InternalError("obvious fixed points escape the bound set")
        per_bound.append(sorted(bnd, key=sort_key))
        per_obvious.append(sorted(obv, key=sort_key))
    bound = tuple(sorted((WeylTuple(c) for c in _cartesian(per_bound)),
                         key=_tuple_sort_key))
    obvious = tuple(sorted((WeylTuple(c) for c in _cartesian(per_obvious)),
                           key=_tuple_sort_key))
    return ComponentData(label=label, bound=bound, obvious=obvious,
                         exactness="conditional")


def _cartesian(lists):
    if not lists:
        return [()]
    out = []
    for head in lists[0]:
        for rest in _cartesian(lists[1:]):
            out.append((head,) + rest)
    return out


def special_fiber_components(ctx: GroupContext, lam, tau: TameTypePresentation,
                             zeta, force: bool = False):
    """Labels of the top-dimensional irreducible components of the special
    fiber attached to (lam, tau): exactly the constituents of the type twisted
    by W(lam - eta), each with its fixed-point data."""
    from .weight_sets import jh_set
    from .weights import CentralCharacter
    from .inertial_types import compatible_zeta
    lam = tuple(tuple(int(x) for x in row) for row in lam)
    n = ctx.n
    eta = eta_vector(n)
    for row in lam:
        if any(row[i] <= row[i + 1] for i in range(n - 1)):
            raise ArgumentError(f"lambda row {row} is not regular dominant")
    lam_minus = tuple(tuple(l - e for l, e in zip(row, eta)) for row in lam)
    need = max(2 * n, max(max(r) - min(r) for r in lam))
    if not force and tau.depth() < need:
        raise GenericityError(f"tau presentation is not {need}-generic")
    if zeta is not None:
        zt = compatible_zeta(tau, lam_minus)
        if tuple(zeta.zeta) != zt.zeta:
            raise ArgumentError(
                f"tau is not (lambda - eta)-compatible with zeta: {zt.zeta}")
    labels = jh_set(tau, lam_minus, force=force)
    return [component_data(s.w1, s.omega, ctx, force=True) for s in labels]
