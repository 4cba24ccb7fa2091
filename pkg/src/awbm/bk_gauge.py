"""Truncated power-series matrix calculus over F_q for gauge computations.

Matrices live over F_q[[v]][1/v] truncated at a tracked precision: a value is
known exactly for all exponents below `prec` (prec = None means the stored
polynomial is exact).  The coefficient field is F_p or F_{p^2}; Frobenius acts
coefficientwise by x -> x^p and on the variable by v -> v^p.

The three operations implemented on top of the arithmetic are the twisted
Frobenius  Y -> Ad(s^{-1} v^{mu+eta})(phi(Y)), the eigenbasis change
A' = I A · Ad(s^{-1} v^{mu+eta})(phi(I'))^{-1}, and the straightening
iteration

    J_{i+1}^{(j)} = X_j A^{(j)} Ad(z_j)(phi(J_i^{(j-1)})) (A^{(j)})^{-1},

which converges v-adically to the unique unipotent-Iwahori tuple I with
X_j A^{(j)} = I^{(j)} A^{(j)} Ad(z_j)(phi(I^{(j-1)})^{-1}), provided the twist
is deep enough relative to the pole bound h of A.  The contraction gives
J_i - J_{i-1} = O(v^{p(i-2)}), so stabilisation mod v^M is reached within
M/p + O(1) rounds.

Shape calculus of semisimple Frobenius data is purely combinatorial and lives
at the end of the module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .affine_weyl import (
    GroupContext,
    WeylTuple,
    adm,
    eta_vector,
    multiply,
    perm_act,
    perm_inverse,
    translation,
)
from .errors import (
    ArgumentError,
    GenericityError,
    InputError,
    IntegralityError,
    InternalError,
    PreconditionError,
)
from .inertial_types import TameTypePresentation
from .weights import weight_depth_base

__all__ = [
    "Coefficients",
    "SeriesMatrix",
    "TwistData",
    "frobenius_twist",
    "change_of_basis",
    "straighten",
    "recover_left_factor",
    "ShapeResult",
    "shape_semisimple",
]


# ---------------------------------------------------------------------------
# coefficient fields F_p and F_{p^2}

class Coefficients:
    """F_p (degree 1) or F_{p^2} = F_p[w]/(w^2 - r) (degree 2, r the least
    quadratic non-residue); series over the field are arrays of shape
    (degree, length)."""

    def __init__(self, p: int, degree: int = 1):
        if degree not in (1, 2):
            raise ArgumentError("only degree 1 and 2 coefficient fields")
        if degree == 2 and p == 2:
            raise ArgumentError("the quadratic extension needs an odd prime")
        self.p = p
        self.degree = degree
        self.r = None
        if degree == 2:
            for cand in range(2, p):
                if pow(cand, (p - 1) // 2, p) == p - 1:
                    self.r = cand
                    break
            if self.r is None:
                raise InternalError("no quadratic non-residue found")

    def __eq__(self, other):
        return (isinstance(other, Coefficients) and self.p == other.p
                and self.degree == other.degree)

    def zeros(self, length):
        return np.zeros((self.degree, length), dtype=np.int64)

    def one(self, length):
        out = self.zeros(length)
        out[0, 0] = 1
        return out

    def conv(self, a, b):
        p = self.p
        if self.degree == 1:
            return (np.convolve(a[0], b[0]) % p)[None, :]
        c0 = (np.convolve(a[0], b[0]) + self.r * np.convolve(a[1], b[1])) % p
        c1 = (np.convolve(a[0], b[1]) + np.convolve(a[1], b[0])) % p
        return np.stack([c0, c1])

    def frob(self, a):
        """Coefficientwise x -> x^p (identity on F_p, conjugation on F_{p^2})."""
        if self.degree == 1:
            return a.copy()
        out = a.copy()
        out[1] = (-out[1]) % self.p
        return out

    def inv_scalar(self, c):
        p = self.p
        if self.degree == 1:
            if c[0] % p == 0:
                raise ArgumentError("inverting zero")
            return np.array([pow(int(c[0]), -1, p)], dtype=np.int64)
        a, b = int(c[0]) % p, int(c[1]) % p
        nrm = (a * a - self.r * b * b) % p
        if nrm == 0:
            raise ArgumentError("inverting zero")
        ninv = pow(nrm, -1, p)
        return np.array([a * ninv % p, (-b) * ninv % p], dtype=np.int64)

    def mul_scalar(self, c1, c2):
        p = self.p
        if self.degree == 1:
            return np.array([int(c1[0]) * int(c2[0]) % p], dtype=np.int64)
        a = (int(c1[0]) * int(c2[0]) + self.r * int(c1[1]) * int(c2[1])) % p
        b = (int(c1[0]) * int(c2[1]) + int(c1[1]) * int(c2[0])) % p
        return np.array([a, b], dtype=np.int64)

    def rand_scalar(self, rng, nonzero=False):
        while True:
            c = np.array([rng.randrange(self.p) for _ in range(self.degree)],
                         dtype=np.int64)
            if not nonzero or c.any():
                return c


# ---------------------------------------------------------------------------
# series matrices

_BIG = 10 ** 9  # stand-in precision for exact values


@dataclass
class SeriesMatrix:
    """n x n matrix of truncated Laurent series: coeffs has shape
    (n, n, degree, L) covering exponents [lo, lo+L); entries are exact below
    prec (prec=None: exact everywhere, stored support finite)."""

    field: Coefficients
    n: int
    lo: int
    coeffs: np.ndarray
    prec: int | None = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, field, n, lo=0, length=1, prec=None):
        return cls(field, n, lo, np.zeros((n, n, field.degree, length),
                                          dtype=np.int64), prec)

    @classmethod
    def identity(cls, field, n, prec=None):
        out = cls.zero(field, n, 0, 1, prec)
        for i in range(n):
            out.coeffs[i, i, 0, 0] = 1
        return out

    @classmethod
    def from_entries(cls, field, n, entries, prec=None):
        """entries: dict (i, j, exp) -> scalar array or int."""
        if entries:
            lo = min(e for _, _, e in entries)
            hi = max(e for _, _, e in entries)
        else:
            lo, hi = 0, 0
        out = cls.zero(field, n, lo, hi - lo + 1, prec)
        for (i, j, e), c in entries.items():
            if isinstance(c, (int, np.integer)):
                out.coeffs[i - 1, j - 1, 0, e - lo] = int(c) % field.p
            else:
                out.coeffs[i - 1, j - 1, :, e - lo] = np.asarray(c) % field.p
        return out

    # -- bookkeeping -------------------------------------------------------
    @property
    def hi(self):
        return self.lo + self.coeffs.shape[3]

    def _eff_prec(self):
        return _BIG if self.prec is None else self.prec

    def window(self, lo, hi):
        """Coefficients re-windowed onto exponents [lo, hi); empty when
        hi <= lo."""
        L = max(hi - lo, 0)
        out = np.zeros((self.n, self.n, self.field.degree, L), dtype=np.int64)
        src_lo = max(self.lo, lo)
        src_hi = min(self.hi, hi)
        if src_lo < src_hi:
            out[..., src_lo - lo:src_hi - lo] = \
                self.coeffs[..., src_lo - self.lo:src_hi - self.lo]
        return out

    def truncate(self, prec):
        new_prec = min(self._eff_prec(), prec)
        hi = min(self.hi, new_prec)
        hi = max(hi, self.lo)
        return SeriesMatrix(self.field, self.n, self.lo,
                            self.window(self.lo, hi),
                            None if new_prec >= _BIG else new_prec)

    def normalized(self):
        """Strip known-zero leading columns (raise lo)."""
        arr = self.coeffs
        L = arr.shape[3]
        k = 0
        while k < L - 1 and not arr[..., k].any():
            k += 1
        if k == 0:
            return self
        return SeriesMatrix(self.field, self.n, self.lo + k, arr[..., k:],
                            self.prec)

    # -- arithmetic --------------------------------------------------------
    def _align(self, other):
        lo = min(self.lo, other.lo)
        prec = min(self._eff_prec(), other._eff_prec())
        hi = max(self.hi, other.hi)
        if prec < _BIG:
            hi = min(max(hi, lo + 1), max(prec, lo + 1))
        return lo, hi, prec

    def __add__(self, other):
        lo, hi, prec = self._align(other)
        arr = (self.window(lo, hi) + other.window(lo, hi)) % self.field.p
        return SeriesMatrix(self.field, self.n, lo, arr,
                            None if prec >= _BIG else prec)

    def __sub__(self, other):
        lo, hi, prec = self._align(other)
        arr = (self.window(lo, hi) - other.window(lo, hi)) % self.field.p
        return SeriesMatrix(self.field, self.n, lo, arr,
                            None if prec >= _BIG else prec)

    def __mul__(self, other):
        f = self.field
        n = self.n
        lo = self.lo + other.lo
        pa, pb = self._eff_prec(), other._eff_prec()
        prec = min(self.lo + pb, other.lo + pa)
        La, Lb = self.coeffs.shape[3], other.coeffs.shape[3]
        L = La + Lb - 1
        out = np.zeros((n, n, f.degree, L), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                acc = None
                for k in range(n):
                    a = self.coeffs[i, k]
                    b = other.coeffs[k, j]
                    if not a.any() or not b.any():
                        continue
                    c = f.conv(a, b)
                    acc = c if acc is None else (acc + c) % f.p
                if acc is not None:
                    out[i, j, :, :acc.shape[1]] = acc
        m = SeriesMatrix(f, n, lo, out, None if prec >= _BIG else prec)
        return m.truncate(prec) if prec < _BIG else m

    def scalar_mul(self, c):
        f = self.field
        arr = self.coeffs
        out = np.zeros_like(arr)
        cs = np.asarray(c, dtype=np.int64).reshape(f.degree, 1)
        if f.degree == 1:
            out = arr * cs[0, 0] % f.p
        else:
            out[:, :, 0] = (arr[:, :, 0] * cs[0, 0]
                            + f.r * arr[:, :, 1] * cs[1, 0]) % f.p
            out[:, :, 1] = (arr[:, :, 0] * cs[1, 0]
                            + arr[:, :, 1] * cs[0, 0]) % f.p
        return SeriesMatrix(f, self.n, self.lo, out, self.prec)

    def shift(self, k):
        return SeriesMatrix(self.field, self.n, self.lo + k, self.coeffs,
                            None if self.prec is None else self.prec + k)

    # -- Frobenius and twists ----------------------------------------------
    def frobenius(self):
        """v -> v^p and coefficientwise x -> x^p; a value known below prec is
        known below p(prec-1)+1 afterwards."""
        f = self.field
        p = f.p
        L = self.coeffs.shape[3]
        out = np.zeros((self.n, self.n, f.degree, (L - 1) * p + 1),
                       dtype=np.int64)
        out[..., ::p] = self.coeffs
        if f.degree == 2:
            out[:, :, 1] = (-out[:, :, 1]) % p
        prec = None if self.prec is None else p * (self.prec - 1) + 1
        return SeriesMatrix(f, self.n, p * self.lo, out, prec)

    def ad_monomial(self, w, bvec):
        """Ad(P_w · v^b): entry (i,k) lands at (w(i), w(k)) shifted by
        b_i - b_k."""
        n = self.n
        shifts = [[bvec[i] - bvec[k] for k in range(n)] for i in range(n)]
        smin = min(min(r) for r in shifts)
        smax = max(max(r) for r in shifts)
        L = self.coeffs.shape[3]
        out = np.zeros((n, n, self.field.degree, L + smax - smin),
                       dtype=np.int64)
        for i in range(n):
            for k in range(n):
                off = shifts[i][k] - smin
                out[w[i] - 1, w[k] - 1, :, off:off + L] = self.coeffs[i, k]
        prec = None if self.prec is None else self.prec + smin
        return SeriesMatrix(self.field, n, self.lo + smin, out, prec)

    # -- predicates ----------------------------------------------------------
    def is_zero_mod(self, M):
        lo = self.lo
        hi = min(self.hi, M)
        if hi <= lo:
            return True
        return not self.window(lo, hi).any()

    def equal_mod(self, other, M):
        if self._eff_prec() < M or other._eff_prec() < M:
            raise PreconditionError(
                f"comparison mod v^{M} exceeds the known precision")
        return (self - other).is_zero_mod(M)

    def check_integral(self, context=""):
        if self.lo >= 0:
            return self
        bad = self.window(self.lo, 0)
        if bad.any():
            idx = np.argwhere(bad.any(axis=2))
            i, j, e = idx[0][0] + 1, idx[0][1] + 1, None
            raise IntegralityError(
                f"negative-exponent residue at entry ({i},{j}){context}")
        return self.normalized()

    def const_term(self):
        """The n x n matrix of v^0 coefficients (scalar arrays)."""
        arr = self.window(0, 1)[..., 0]
        return arr

    def is_iwahori(self, M=None):
        """Integral, invertible, upper triangular mod v."""
        if self.lo < 0 and self.window(self.lo, 0).any():
            return False
        c0 = self.const_term()
        n = self.n
        for i in range(n):
            for j in range(n):
                if i > j and c0[i, j].any():
                    return False
            if not c0[i, i].any():
                return False
        return True

    def is_iw1(self, M=None):
        """Unipotent upper triangular mod v."""
        if not self.is_iwahori():
            return False
        c0 = self.const_term()
        for i in range(self.n):
            d = c0[i, i].copy()
            d[0] = (d[0] - 1) % self.field.p
            if d.any():
                return False
        return True

    # -- inversion -----------------------------------------------------------
    def _det_series(self, length):
        """det as a single series array over exponents [n*lo, n*lo+length)."""
        import itertools as _it
        f = self.field
        n = self.n
        acc = np.zeros((f.degree, length), dtype=np.int64)
        for perm in _it.permutations(range(n)):
            sign = _perm_sign_0(perm)
            term = None
            for i in range(n):
                a = self.coeffs[i, perm[i]]
                term = a if term is None else f.conv(term, a)
            term = term[:, :length] if term.shape[1] >= length else np.pad(
                term, ((0, 0), (0, length - term.shape[1])))
            acc = (acc + sign * term) % f.p
        return acc

    def inverse(self, prec):
        """A^{-1} to the requested precision; the determinant must be a unit
        times a power of v within the known window."""
        f = self.field
        n = self.n
        Lw = self.coeffs.shape[3] + n * 4
        det = self._det_series(Lw)
        val = None
        for t in range(det.shape[1]):
            if det[:, t].any():
                val = t
                break
        if val is None:
            raise ArgumentError("matrix is not invertible (zero determinant)")
        det_lo = n * self.lo + val
        unit = det[:, val:]
        eff = self._eff_prec()
        out_prec = prec if self.prec is None else min(prec, eff - 2 * max(det_lo, 0))
        need = max(out_prec - (-det_lo) - (n - 1) * self.lo, 1) + 4
        uinv = _invert_unit(f, unit, need)
        adj = self._adjugate()
        inv = _mul_entrywise_series(adj, uinv, f).shift(-det_lo)
        inv.prec = out_prec
        return inv.truncate(out_prec).normalized()

    def _adjugate(self):
        f = self.field
        n = self.n
        if n == 1:
            return SeriesMatrix.identity(f, 1)
        Ls = (n - 1) * (self.coeffs.shape[3] - 1) + 1
        out = np.zeros((n, n, f.degree, Ls), dtype=np.int64)
        import itertools as _it
        for i in range(n):
            for j in range(n):
                rows = [r for r in range(n) if r != j]
                cols = [c for c in range(n) if c != i]
                acc = np.zeros((f.degree, Ls), dtype=np.int64)
                for perm in _it.permutations(range(n - 1)):
                    sign = _perm_sign_0(perm)
                    term = None
                    for a, row in enumerate(rows):
                        arr = self.coeffs[row, cols[perm[a]]]
                        term = arr if term is None else f.conv(term, arr)
                    if term.shape[1] < Ls:
                        term = np.pad(term, ((0, 0), (0, Ls - term.shape[1])))
                    acc = (acc + sign * ((-1) ** (i + j)) * term[:, :Ls]) % f.p
                out[i, j] = acc
        return SeriesMatrix(f, n, (n - 1) * self.lo, out, None)

    # -- encoding ------------------------------------------------------------
    def to_json(self):
        ent = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                d = {}
                for t in range(self.coeffs.shape[3]):
                    c = self.coeffs[i, j, :, t]
                    if c.any():
                        d[str(self.lo + t)] = (
                            int(c[0]) if self.field.degree == 1
                            else [int(x) for x in c])
                row.append(d)
            ent.append(row)
        return {"p": self.field.p, "degree": self.field.degree,
                "precision": self.prec, "entries": ent}

    @classmethod
    def from_json(cls, data):
        try:
            field = Coefficients(int(data["p"]), int(data.get("degree", 1)))
            rows = data["entries"]
            n = len(rows)
            entries = {}
            for i, row in enumerate(rows):
                for j, cell in enumerate(row):
                    for e, c in cell.items():
                        entries[(i + 1, j + 1, int(e))] = (
                            c if isinstance(c, int) else np.array(c))
            prec = data.get("precision")
            return cls.from_entries(field, n, entries,
                                    None if prec is None else int(prec))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad series-matrix encoding: {data!r}") from exc


def _perm_sign_0(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _invert_unit(field, unit, length):
    """Inverse of a unit power series (array of shape (d, L)) to `length`."""
    d = field.degree
    p = field.p
    L = min(unit.shape[1], length)
    out = np.zeros((d, length), dtype=np.int64)
    c0inv = field.inv_scalar(unit[:, 0])
    out[:, 0] = c0inv
    if d == 1:
        u = unit[0]
        w = out[0]
        inv0 = int(c0inv[0])
        for t in range(1, length):
            s_hi = min(t, L - 1)
            acc = int(np.dot(u[1:s_hi + 1], w[t - s_hi:t][::-1])) if s_hi else 0
            w[t] = (-inv0 * acc) % p
        return out
    for t in range(1, length):
        acc = np.zeros(d, dtype=np.int64)
        for s in range(1, min(t, L - 1) + 1):
            acc = (acc + field.mul_scalar(unit[:, s], out[:, t - s])) % p
        out[:, t] = (-field.mul_scalar(c0inv, acc)) % p
    return out


def _mul_entrywise_series(m: SeriesMatrix, series, field):
    n = m.n
    L = m.coeffs.shape[3] + series.shape[1] - 1
    out = np.zeros((n, n, field.degree, L), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if m.coeffs[i, j].any():
                c = field.conv(m.coeffs[i, j], series)
                out[i, j, :, :c.shape[1]] = c
    return SeriesMatrix(field, n, m.lo, out, None)


# ---------------------------------------------------------------------------
# twists

@dataclass(frozen=True)
class TwistData:
    """Per-embedding twist elements s_j^{-1} v^{mu_j + eta_j}."""

    s: WeylTuple
    mu: tuple
    ctx: GroupContext

    def __post_init__(self):
        mu = tuple(tuple(int(x) for x in row) for row in self.mu)
        if len(mu) != self.ctx.f or any(len(r) != self.ctx.n for r in mu):
            raise ArgumentError("mu must be an f-tuple of length-n rows")
        if any(c.nu != (0,) * self.ctx.n for c in self.s):
            raise ArgumentError("twist Weyl parts must be finite")
        object.__setattr__(self, "mu", mu)

    @classmethod
    def from_type(cls, tau: TameTypePresentation):
        return cls(tau.s, tau.mu, tau.ctx)

    @classmethod
    def from_dual_element(cls, z: WeylTuple, ctx: GroupContext):
        """Read (s, mu) off z_j = s_j^{-1} t_{mu_j + eta_j}."""
        eta = eta_vector(ctx.n)
        from .affine_weyl import finite
        s_parts, mu_rows = [], []
        for g in z:
            s_j = perm_inverse(g.w)
            mupeta = perm_act(perm_inverse(g.w), tuple(g.nu))
            # g = t_nu ∘ w with w = s^{-1}: nu = s^{-1}(mu+eta)
            mu_rows.append(tuple(m - e for m, e in zip(mupeta, eta)))
            s_parts.append(finite(s_j))
        return cls(WeylTuple(tuple(s_parts)), tuple(mu_rows), ctx)

    def depth(self):
        p = self.ctx.require_prime()
        return min(weight_depth_base(row, p) for row in self.mu)

    def dual_element(self) -> WeylTuple:
        """The tuple with components s_j^{-1} t_{mu_j + eta_j}."""
        eta = eta_vector(self.ctx.n)
        from .affine_weyl import finite
        comps = []
        for j in range(self.ctx.f):
            t = translation(tuple(m + e for m, e in zip(self.mu[j], eta)))
            comps.append(multiply(finite(perm_inverse(self.s[j].w)), t))
        return WeylTuple(tuple(comps))

    def exponents(self, j):
        eta = eta_vector(self.ctx.n)
        return tuple(m + e for m, e in zip(self.mu[j % self.ctx.f], eta))

    def perm(self, j):
        return perm_inverse(self.s[j % self.ctx.f].w)


def frobenius_twist(Y: SeriesMatrix, j: int, twist: TwistData) -> SeriesMatrix:
    """Ad(s_j^{-1} v^{mu_j + eta_j})(phi(Y)); raises when the result has a
    genuine pole (insufficient deepness for the given input)."""
    out = Y.frobenius().ad_monomial(twist.perm(j), twist.exponents(j))
    return out.check_integral(f" in frobenius_twist at embedding {j}")


def change_of_basis(A, I, twist: TwistData):
    """A'_j = I_j · A_j · Ad(s_j^{-1} v^{mu_j+eta_j})(phi(I_{j-1}))^{-1}."""
    f = twist.ctx.f
    if len(A) != f or len(I) != f:
        raise ArgumentError("need one matrix per embedding")
    prec = min(m._eff_prec() for m in list(A) + list(I))
    out = []
    for j in range(f):
        cap = prec if prec < _BIG else 10 ** 6
        tw = frobenius_twist(I[(j - 1) % f], j, twist).truncate(cap)
        tw_inv = tw.inverse(cap)
        out.append((I[j] * A[j] * tw_inv).truncate(
            prec if prec < _BIG else 10 ** 6))
    return tuple(out)


def straighten(A, X, z: WeylTuple, M: int, h: int | None = None):
    """The unique tuple I in Iw1^J with X_j A_j z_j = I_j A_j z_j phi(I_{j-1})^{-1}
    mod v^M, by the contraction iteration; z_j = s_j^{-1} t_{mu_j + eta_j} with
    mu (h+1)-deep."""
    if not A or len(A) != len(X):
        raise ArgumentError("need matching tuples of matrices")
    ctx_n = A[0].n
    field = A[0].field
    fcount = len(A)
    ctx = GroupContext(ctx_n, fcount, field.p)
    twist = TwistData.from_dual_element(z, ctx)
    if h is None:
        h = max(0, -min(m.lo for m in A))
    for j, m in enumerate(A):
        if m.lo < 0 and m.window(m.lo, 0).any():
            raise ArgumentError(f"A[{j}] is not integral")
    if twist.depth() < h + 1:
        raise GenericityError(
            f"twist depth {twist.depth()} < h+1 = {h + 1}: convergence of the "
            "straightening iteration is not guaranteed")
    work = M + 2 * ctx_n * h + 8
    A = [m.truncate(work) for m in A]
    X = [m.truncate(work) for m in X]
    for j, m in enumerate(X):
        if not m.is_iw1():
            raise ArgumentError(f"X[{j}] is not unipotent-Iwahori")
    Ainv = [m.inverse(work) for m in A]
    for j in range(fcount):
        pole = (A[j] * Ainv[j])  # sanity: A A^{-1} = 1 to working precision
        if not pole.equal_mod(SeriesMatrix.identity(field, ctx_n), M):
            raise InternalError("inverse lost too much precision")
        test = Ainv[j].shift(h)
        if test.lo < 0 and test.window(test.lo, 0).any():
            raise ArgumentError(f"v^{h} A[{j}]^(-1) is not integral: "
                                "height condition fails")
    J = [SeriesMatrix.identity(field, ctx_n) for _ in range(fcount)]
    cap = (M + field.p - 1) // field.p + 4
    for it in range(cap + 1):
        Jn = []
        for j in range(fcount):
            tw = frobenius_twist(J[(j - 1) % fcount], j, twist).truncate(work)
            Jn.append((X[j] * A[j] * tw * Ainv[j]).truncate(work))
        if all(Jn[j].equal_mod(J[j], M) for j in range(fcount)):
            J = Jn
            break
        J = Jn
    else:
        raise InternalError("straightening iteration failed to stabilise")
    out = []
    for j in range(fcount):
        Ij = J[j].normalized()  # keep the full certified working precision
        if Ij._eff_prec() < M:
            raise PreconditionError(
                "inputs carry too little precision to certify the result "
                f"mod v^{M}; supply exact matrices or precision >= {work}")
        if not Ij.is_iw1():
            raise InternalError("straightened factor left Iw1")
        out.append(Ij)
    # defining equation mod v^M
    for j in range(fcount):
        tw = frobenius_twist(out[(j - 1) % fcount], j, twist).truncate(work)
        rhs = out[j] * A[j] * tw.inverse(work)
        lhs = X[j] * A[j]
        if not lhs.equal_mod(rhs, M):
            raise InternalError("straightening equation fails mod v^M")
    return tuple(out)


def recover_left_factor(A, I, z: WeylTuple, M: int):
    """The direct map back: X_j = (I_j A_j Ad(z_j)(phi(I_{j-1}))^{-1}) A_j^{-1},
    truncated mod v^M; the factors I must carry enough precision headroom
    (as returned by straighten)."""
    fcount = len(A)
    field = A[0].field
    ctx = GroupContext(A[0].n, fcount, field.p)
    twist = TwistData.from_dual_element(z, ctx)
    work = M + 2 * A[0].n * 8 + 8
    out = []
    Ainv = [m.inverse(work) for m in A]
    for j in range(fcount):
        tw = frobenius_twist(I[(j - 1) % fcount], j, twist).truncate(work)
        x = I[j] * A[j] * tw.inverse(work) * Ainv[j]
        if x._eff_prec() < M:
            raise PreconditionError(
                f"inputs carry too little precision to recover mod v^{M}")
        out.append(x.truncate(M))
    return tuple(out)


# ---------------------------------------------------------------------------
# semisimple shape calculus

@dataclass(frozen=True)
class ShapeResult:
    """shape = star(w̃(rhobar)) · star(w̃(tau))^{-1}, with the admissibility
    predicates it satisfies."""

    shape: WeylTuple
    w_rhobar_tau: WeylTuple
    ctx: GroupContext

    def admissible_for(self, lam_rows) -> bool:
        """shape in Adm∨(lam) componentwise."""
        lam_rows = tuple(tuple(int(x) for x in r) for r in lam_rows)
        ok = True
        for j in range(self.ctx.f):
            dual = set(adm(lam_rows[j], "dual"))
            ok = ok and (self.shape[j] in dual)
        return ok

    def shifted_member(self, lam_plus_eta_rows) -> bool:
        """w̃(rhobar, tau) in Adm(lam + eta) componentwise."""
        rows = tuple(tuple(int(x) for x in r) for r in lam_plus_eta_rows)
        ok = True
        for j in range(self.ctx.f):
            full = set(adm(rows[j]))
            ok = ok and (self.w_rhobar_tau[j] in full)
        return ok


def shape_semisimple(rho: TameTypePresentation,
                     tau: TameTypePresentation) -> ShapeResult:
    """Shape calculus for semisimple Frobenius data; sufficient genericity of
    tau is the caller's responsibility (query tau.depth()), not enforced."""
    if rho.ctx.n != tau.ctx.n or rho.ctx.f != tau.ctx.f:
        raise ArgumentError("presentations over different contexts")
    shape = rho.w_tilde_star() * tau.w_tilde_star().inverse()
    wrt = tau.w_tilde().inverse() * rho.w_tilde()
    return ShapeResult(shape=shape, w_rhobar_tau=wrt, ctx=rho.ctx)
