"""Exact arithmetic and order theory for the extended affine Weyl group of GL_n.

An element is stored as a pair (w, nu) with w a permutation of {1..n} in
one-line notation and nu an integer vector; it acts on X*(T) ⊗ Q = Q^n by

    x  |->  w(x) + nu,

i.e. it is the product t_nu ∘ w (translation after the finite part).  All
order-theoretic questions are settled geometrically through a fixed interior
point x0 = eta/n of the base alcove, where eta = (n-1, n-2, ..., 0): for any
element g and any root alpha the pairing <g(x0), alpha∨> has denominator
exactly n, so it is never an integer and every alcove membership test is a
strict inequality.  Length is the number of root hyperplanes separating x0
from g(x0); the Bruhat order is computed by descent recursion on the affine
Weyl group W_a, with the finite-index factor Omega (the stabilizer of the
base alcove) split off by the degree homomorphism deg(t_nu ∘ w) = sum(nu).

Conventions used throughout the package:

* permutations act by (w·v)_{w(i)} = v_i, i.e. (w·v)_i = v_{w^{-1}(i)};
* (w1, nu1) · (w2, nu2) = (w1 w2, nu1 + w1(nu2));
* the star involution sends t_nu ∘ w to w^{-1} t_nu, an element of the
  group attached to the antidominant base alcove; it is realised on the
  same carrier as (w, nu) |-> (w^{-1}, w^{-1}(nu));
* the upper-arrow order is decided by simultaneous translation into the
  dominant cone, where it coincides with the Bruhat order.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    ArgumentError,
    CapacityError,
    ContextError,
    InputError,
    InternalError,
    RegularityError,
)

__all__ = [
    "GroupContext",
    "WeylElement",
    "WeylTuple",
    "identity",
    "translation",
    "finite",
    "w0",
    "w_h",
    "eta_vector",
    "base_point",
    "multiply",
    "invert",
    "evaluate",
    "length",
    "dual_length",
    "star",
    "degree",
    "bruhat_leq",
    "dual_bruhat_leq",
    "up_leq",
    "classify",
    "Flags",
    "smallness",
    "is_small",
    "element_depth",
    "is_generic_element",
    "is_dominant",
    "is_restricted",
    "is_regular",
    "dominant_witness",
    "bruhat_interval",
    "reduced_word",
    "simple_reflections",
    "omega_power",
    "wa_part_and_omega",
    "adm",
    "regular_factorization",
    "ap_enumerate",
    "ap_member",
    "restricted_classes",
    "sort_key",
    "canonical_x0_shift",
    "max_len_cap",
    "perm_identity",
    "perm_compose",
    "perm_inverse",
    "perm_act",
    "perm_w0",
    "all_perms",
    "positive_roots",
    "all_roots",
    "pairing",
    "tuple_bruhat_leq",
    "tuple_up_leq",
]


# ---------------------------------------------------------------------------
# permutations (one-line notation, 1-based images)

def perm_identity(n):
    return tuple(range(1, n + 1))


def perm_compose(w1, w2):
    """(w1 w2)(i) = w1(w2(i))."""
    return tuple(w1[w2[i] - 1] for i in range(len(w1)))


def perm_inverse(w):
    inv = [0] * len(w)
    for i, wi in enumerate(w):
        inv[wi - 1] = i + 1
    return tuple(inv)


def perm_act(w, v):
    """(w·v)_{w(i)} = v_i."""
    out = [0] * len(w)
    for i in range(len(w)):
        out[w[i] - 1] = v[i]
    return tuple(out)


def perm_w0(n):
    return tuple(range(n, 0, -1))


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def positive_roots(n):
    """Positive roots eps_i - eps_k as pairs (i, k), i < k, 1-based."""
    return [(i, k) for i in range(1, n + 1) for k in range(i + 1, n + 1)]


def all_roots(n):
    return [(i, k) for i in range(1, n + 1) for k in range(1, n + 1) if i != k]


def pairing(v, root):
    """<v, alpha∨> = v_i - v_k for alpha = eps_i - eps_k."""
    i, k = root
    return v[i - 1] - v[k - 1]


# ---------------------------------------------------------------------------
# elements

@dataclass(frozen=True)
class WeylElement:
    """The affine map x |-> w(x) + nu, i.e. the element t_nu ∘ w."""

    w: tuple
    nu: tuple

    def __post_init__(self):
        n = len(self.w)
        if sorted(self.w) != list(range(1, n + 1)):
            raise InputError(f"not a permutation one-line image: {self.w}")
        if len(self.nu) != n:
            raise InputError("translation part has wrong length")
        object.__setattr__(self, "w", tuple(self.w))
        object.__setattr__(self, "nu", tuple(int(c) for c in self.nu))

    @property
    def n(self):
        return len(self.w)

    def __mul__(self, other):
        return multiply(self, other)

    def inverse(self):
        return invert(self)

    def to_json(self):
        return {"w": list(self.w), "nu": list(self.nu), "convention": "t_nu_then_w"}

    @classmethod
    def from_json(cls, data):
        try:
            conv = data.get("convention", "t_nu_then_w")
            if conv != "t_nu_then_w":
                raise InputError(f"unknown element convention {conv!r}")
            return cls(tuple(data["w"]), tuple(data["nu"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad element encoding: {data!r}") from exc


def identity(n):
    return WeylElement(perm_identity(n), (0,) * n)


def translation(nu):
    return WeylElement(perm_identity(len(nu)), tuple(nu))


def finite(w):
    return WeylElement(tuple(w), (0,) * len(w))


def w0(n):
    return finite(perm_w0(n))


def eta_vector(n):
    return tuple(range(n - 1, -1, -1))


def w_h(n):
    """w0 · t_{-eta}, the distinguished element of the restricted dominant box."""
    return multiply(w0(n), translation(tuple(-e for e in eta_vector(n))))


@lru_cache(maxsize=None)
def base_point(n):
    """eta/n, an interior point of the base alcove with wall-free orbit."""
    return tuple(Fraction(c, n) for c in eta_vector(n))


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.n != b.n:
        raise ContextError(f"rank mismatch: {a.n} vs {b.n}")
    nu = tuple(x + y for x, y in zip(a.nu, perm_act(a.w, b.nu)))
    return WeylElement(perm_compose(a.w, b.w), nu)


def invert(a: WeylElement) -> WeylElement:
    wi = perm_inverse(a.w)
    return WeylElement(wi, tuple(-c for c in perm_act(wi, a.nu)))


def evaluate(a: WeylElement, x):
    """w(x) + nu with exact arithmetic; x may have rational entries."""
    if len(x) != a.n:
        raise ArgumentError(f"point has length {len(x)}, expected {a.n}")
    moved = perm_act(a.w, tuple(x))
    return tuple(m + c for m, c in zip(moved, a.nu))


def degree(a: WeylElement) -> int:
    return sum(a.nu)


def star(a: WeylElement) -> WeylElement:
    """t_nu ∘ w  |->  w^{-1} t_nu, realised as (w^{-1}, w^{-1}(nu))."""
    wi = perm_inverse(a.w)
    return WeylElement(wi, perm_act(wi, a.nu))


def _floor(q):
    return q.numerator // q.denominator if isinstance(q, Fraction) else q // 1


@lru_cache(maxsize=None)
def _separation(a: WeylElement, x_index: int) -> int:
    n = a.n
    x = base_point(n) if x_index == 0 else perm_act(perm_w0(n), base_point(n))
    y = evaluate(a, x)
    total = 0
    for root in positive_roots(n):
        total += abs(_floor(pairing(y, root)) - _floor(pairing(x, root)))
    return total


def length(a: WeylElement) -> int:
    """Hyperplanes strictly separating x0 from a(x0); extends Coxeter length by
    length(g·delta) = length(g) for delta in Omega."""
    return _separation(a, 0)


def dual_length(a: WeylElement) -> int:
    """Length with respect to the antidominant base alcove (for starred elements)."""
    return _separation(a, 1)


# ---------------------------------------------------------------------------
# alcove position predicates

def _image_point(a: WeylElement):
    return evaluate(a, base_point(a.n))


def is_dominant(a: WeylElement) -> bool:
    y = _image_point(a)
    return all(pairing(y, r) > 0 for r in positive_roots(a.n))


def is_restricted(a: WeylElement) -> bool:
    y = _image_point(a)
    if any(pairing(y, r) <= 0 for r in positive_roots(a.n)):
        return False
    return all(y[i] - y[i + 1] < 1 for i in range(a.n - 1))


def is_regular(a: WeylElement) -> bool:
    y = _image_point(a)
    return not any(0 < pairing(y, r) < 1 for r in positive_roots(a.n))


def smallness(a: WeylElement) -> int:
    """h_nu = max_alpha <nu, alpha∨> = max(nu) - min(nu)."""
    return max(a.nu) - min(a.nu)


def is_small(a: WeylElement, m: int) -> bool:
    return smallness(a) <= m


def element_depth(a: WeylElement, p: int) -> int:
    """Largest m with nu - eta m-deep, i.e. m < |<nu, alpha∨> + p k| for all
    alpha > 0, k; returns -1 when some pairing vanishes mod p."""
    depth = p
    for root in positive_roots(a.n):
        r = pairing(a.nu, root) % p
        depth = min(depth, r, p - r)
    return depth - 1


def is_generic_element(a: WeylElement, m: int, p: int) -> bool:
    return element_depth(a, p) >= m


@dataclass(frozen=True)
class Flags:
    dominant: bool
    restricted: bool
    regular: bool
    m_small: bool | None = None
    m_generic: bool | None = None


def classify(a: WeylElement, m: int | None = None, p: int | None = None) -> Flags:
    if m is not None and m < 0:
        raise ArgumentError("smallness/genericity bound m must be >= 0")
    return Flags(
        dominant=is_dominant(a),
        restricted=is_restricted(a),
        regular=is_regular(a),
        m_small=None if m is None else is_small(a, m),
        m_generic=None if m is None or p is None else is_generic_element(a, m, p),
    )


def dominant_witness(a: WeylElement):
    """The unique w in W with w^{-1}·(a(x0)) strictly dominant."""
    y = _image_point(a)
    order = sorted(range(a.n), key=lambda i: y[i], reverse=True)
    # (w^{-1} y)_i = y_{w(i)} must decrease, so w(i) = order[i-1] + 1
    return tuple(i + 1 for i in order)


# ---------------------------------------------------------------------------
# Omega (length-zero elements) and the W_a / Omega splitting

@lru_cache(maxsize=None)
def _omega_generator(n: int) -> WeylElement:
    cycle = tuple(list(range(2, n + 1)) + [1])  # i -> i+1 mod n
    gen = WeylElement(cycle, (1,) + (0,) * (n - 1))
    if length(gen) != 0 or degree(gen) != 1:
        raise InternalError("Omega generator sanity check failed")
    return gen


@lru_cache(maxsize=None)
def _omega_table(n: int):
    gen = _omega_generator(n)
    table = [identity(n)]
    for _ in range(n - 1):
        table.append(multiply(table[-1], gen))
    full = multiply(table[-1], gen)
    if full != translation((1,) * n):
        raise InternalError("Omega generator does not close up onto t_(1,..,1)")
    return tuple(table)


def omega_power(n: int, m: int) -> WeylElement:
    """The canonical length-zero element of degree m."""
    q, r = divmod(m, n)
    return multiply(translation((q,) * n), _omega_table(n)[r])


def wa_part_and_omega(a: WeylElement):
    """Write a = x · delta with x in W_a and delta the canonical length-zero
    element of degree deg(a)."""
    delta = omega_power(a.n, degree(a))
    x = multiply(a, invert(delta))
    if degree(x) != 0:
        raise InternalError("W_a part has nonzero degree")
    return x, delta


@lru_cache(maxsize=None)
def simple_reflections(n: int):
    """Affine simple reflections: s_0 through the wall <x, theta∨> = 1, then
    s_1 .. s_{n-1} the adjacent transpositions."""
    refs = []
    theta_perm = list(range(1, n + 1))
    theta_perm[0], theta_perm[n - 1] = n, 1
    theta = (1,) + (0,) * (n - 2) + (-1,)
    refs.append(WeylElement(tuple(theta_perm), theta))
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        refs.append(finite(tuple(p)))
    return tuple(refs)


def max_len_cap() -> int:
    try:
        return int(os.environ.get("AWBM_MAX_LEN", "12"))
    except ValueError:
        raise InputError("AWBM_MAX_LEN must be an integer")


@lru_cache(maxsize=None)
def _leq_wa(a: WeylElement, b: WeylElement) -> bool:
    if a == b:
        return True
    la, lb = length(a), length(b)
    if la >= lb:
        return False
    for s in simple_reflections(a.n):
        sb = multiply(s, b)
        if length(sb) < lb:
            sa = multiply(s, a)
            if length(sa) < la:
                return _leq_wa(sa, sb)
            return _leq_wa(a, sb)
    raise InternalError("non-identity element without left descent")


def bruhat_leq(a: WeylElement, b: WeylElement) -> bool:
    """Bruhat order on the extended group: components over distinct W_a-cosets
    are incomparable, and right Omega-translation is an order isomorphism."""
    if a.n != b.n:
        raise ContextError("rank mismatch")
    if degree(a) != degree(b):
        return False
    xa, delta = wa_part_and_omega(a)
    xb, _ = wa_part_and_omega(b)
    return _leq_wa(xa, xb)


def dual_bruhat_leq(a: WeylElement, b: WeylElement) -> bool:
    """Bruhat order defined by the antidominant base alcove (on starred carriers)."""
    n = a.n
    c = w0(n)
    return bruhat_leq(multiply(c, multiply(a, c)), multiply(c, multiply(b, c)))


def reduced_word(x: WeylElement):
    """Greedy left-descent word for an element of W_a (indices into
    simple_reflections): stripping descents on the left yields the letters of
    x = s_{i_1} s_{i_2} ... s_{i_k} in that order."""
    word = []
    cur = x
    lcur = length(cur)
    while lcur > 0:
        for idx, s in enumerate(simple_reflections(x.n)):
            cand = multiply(s, cur)
            lc = length(cand)
            if lc < lcur:
                word.append(idx)
                cur, lcur = cand, lc
                break
        else:
            raise InternalError("no descent found")
    return word


def bruhat_interval(a: WeylElement):
    """All b <= a, via the subword closure of one reduced expression of the
    W_a-part, right-translated by the Omega-component.  Canonically sorted."""
    x, delta = wa_part_and_omega(a)
    if length(x) > max_len_cap():
        raise CapacityError(
            f"interval of an element of length {length(x)} exceeds AWBM_MAX_LEN")
    word = reduced_word(x)
    refs = simple_reflections(a.n)
    closure = {identity(a.n)}
    for idx in word:
        s = refs[idx]
        closure |= {multiply(y, s) for y in closure}
    out = [multiply(y, delta) for y in closure]
    return sorted(out, key=sort_key)


def sort_key(a: WeylElement):
    return (length(a), a.w, a.nu)


# ---------------------------------------------------------------------------
# upper-arrow order

def _dominating_translation(elements):
    n = elements[0].n
    bound = 0
    for e in elements:
        y = _image_point(e)
        for r in positive_roots(n):
            q = abs(pairing(y, r))
            bound = max(bound, _floor(q) + 1)
    b = bound + 1
    return translation(tuple(b * c for c in eta_vector(n)))


@lru_cache(maxsize=None)
def up_leq(a: WeylElement, b: WeylElement) -> bool:
    """a ↑ b.  Distinct W_a-cosets are incomparable; otherwise translate both
    into the dominant cone (↑ is invariant under simultaneous translation) and
    compare there in Bruhat order, which agrees with ↑ on dominant elements."""
    if a.n != b.n:
        raise ContextError("rank mismatch")
    if degree(a) != degree(b):
        return False
    t = _dominating_translation([a, b])
    ta, tb = multiply(t, a), multiply(t, b)
    if not (is_dominant(ta) and is_dominant(tb)):
        raise InternalError("translation bound failed to dominate")
    return bruhat_leq(ta, tb)


# ---------------------------------------------------------------------------
# admissible sets, regular factorization, admissible pairs

def _check_dominant_weight(lam):
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ArgumentError(f"weight {lam} is not dominant")


def adm(lam, variant="all"):
    """Adm(lam) = union of Bruhat intervals below the translations t_{w(lam)};
    'regular' keeps the regular elements, 'dual' applies the star involution."""
    lam = tuple(int(c) for c in lam)
    _check_dominant_weight(lam)
    n = len(lam)
    seen = set()
    for w in all_perms(n):
        t = translation(perm_act(w, lam))
        seen.update(bruhat_interval(t))
    if variant == "all":
        out = seen
    elif variant == "regular":
        out = {a for a in seen if is_regular(a)}
    elif variant == "dual":
        out = {star(a) for a in seen}
    else:
        raise InputError(f"unknown admissible-set variant {variant!r}")
    return sorted(out, key=sort_key)


def canonical_x0_shift(w1: WeylElement, *others):
    """Shift by the central translation making max(w1.nu) = 0; apply the same
    shift to companions (the diagonal X^0-action on pairs)."""
    c = -max(w1.nu)
    t = translation((c,) * w1.n)
    shifted = [multiply(t, w1)] + [multiply(t, o) for o in others]
    return shifted[0] if not others else tuple(shifted)


def regular_factorization(a: WeylElement):
    """Write a regular element as w2^{-1} · w0 · w1 with w1 restricted dominant
    and w2 dominant; canonical up to the diagonal central-translation action,
    normalised so that max coordinate of w1's translation part is zero."""
    if not is_regular(a):
        raise RegularityError(f"element {a} is not regular")
    n = a.n
    y = _image_point(a)
    order = sorted(range(n), key=lambda i: y[i])  # ascending -> antidominant
    w2f = perm_inverse(tuple(i + 1 for i in order))
    z = perm_act(w2f, base_point(n))
    diffs = [-_floor(z[i] - z[i + 1]) for i in range(n - 1)]
    eta2 = [0] * n
    for i in range(n - 2, -1, -1):
        eta2[i] = eta2[i + 1] + diffs[i]
    w2 = multiply(translation(tuple(eta2)), finite(w2f))
    if not is_restricted(w2):
        raise InternalError("restricted normalisation of w2 failed")
    b = multiply(w0(n), multiply(w2, a))
    yb = _image_point(b)
    kdiffs = [_floor(yb[i] - yb[i + 1]) for i in range(n - 1)]
    nu = [0] * n
    for i in range(n - 2, -1, -1):
        nu[i] = nu[i + 1] + kdiffs[i]
    if any(c < 0 for c in kdiffs):
        raise InternalError("dominant part of the factorization is negative")
    w1 = multiply(translation(tuple(-c for c in nu)), b)
    if not is_restricted(w1):
        raise InternalError("restricted part of the factorization failed")
    w2_final = multiply(translation(perm_act(perm_w0(n), tuple(-c for c in nu))), w2)
    w1c, w2c = canonical_x0_shift(w1, w2_final)
    if multiply(invert(w2c), multiply(w0(n), w1c)) != a:
        raise InternalError("factorization product check failed")
    return w1c, w2c


def ap_enumerate(lam_plus_eta):
    """AP(lam+eta) as the set of factorizations of the regular admissible set;
    the induced map (w1, w2) -> w2^{-1} w0 w1 is checked to be a bijection."""
    lam = tuple(int(c) for c in lam_plus_eta)
    _check_dominant_weight(lam)
    reg = adm(lam, "regular")
    pairs = {}
    for a in reg:
        pair = regular_factorization(a)
        if pair in pairs:
            raise InternalError("factorization is not injective")
        pairs[pair] = a
    return sorted(pairs, key=lambda pr: (sort_key(pr[0]), sort_key(pr[1])))


def ap_member(w1: WeylElement, w2: WeylElement, lam_plus_eta) -> bool:
    lam = tuple(int(c) for c in lam_plus_eta)
    _check_dominant_weight(lam)
    if not is_restricted(w1):
        return False
    if not is_dominant(w2):
        return False
    prod = multiply(invert(w2), multiply(w0(w1.n), w1))
    return any(
        bruhat_leq(prod, translation(perm_act(w, lam))) for w in all_perms(w1.n))


@lru_cache(maxsize=None)
def restricted_classes(n: int):
    """Representatives of the restricted dominant elements modulo central
    translations, normalised with max translation coordinate zero."""
    found = set()
    for w in all_perms(n):
        y = perm_act(w, base_point(n))
        diffs = [-_floor(y[i] - y[i + 1]) for i in range(n - 1)]
        nu = [0] * n
        for i in range(n - 2, -1, -1):
            nu[i] = nu[i + 1] + diffs[i]
        cand = multiply(translation(tuple(nu)), finite(w))
        if not is_restricted(cand):
            continue
        for d in range(n):
            elt = multiply(cand, omega_power(n, d))
            if is_restricted(elt):
                found.add(canonical_x0_shift(elt))
    return tuple(sorted(found, key=sort_key))


# ---------------------------------------------------------------------------
# tuples over the embedding set J = Z/f

@dataclass(frozen=True)
class WeylTuple:
    """An f-tuple of elements, indexed by the embeddings Z/f; all group and
    order operations act componentwise, and pi shifts the index."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise InputError("empty tuple")
        n = comps[0].n
        if any(c.n != n for c in comps):
            raise ContextError("mixed ranks inside a tuple")
        object.__setattr__(self, "components", comps)

    @property
    def f(self):
        return len(self.components)

    @property
    def n(self):
        return self.components[0].n

    def __getitem__(self, j):
        return self.components[j % self.f]

    def __iter__(self):
        return iter(self.components)

    def __mul__(self, other):
        self._match(other)
        return WeylTuple(tuple(multiply(a, b) for a, b in zip(self, other)))

    def _match(self, other):
        if not isinstance(other, WeylTuple) or other.f != self.f or other.n != self.n:
            raise ContextError("tuple shape mismatch")

    def inverse(self):
        return WeylTuple(tuple(invert(a) for a in self))

    def star(self):
        return WeylTuple(tuple(star(a) for a in self))

    def pi(self):
        """pi(x)_j = x_{j+1}; the identity when f = 1."""
        return WeylTuple(tuple(self[(j + 1) % self.f] for j in range(self.f)))

    def pi_inverse(self):
        return WeylTuple(tuple(self[(j - 1) % self.f] for j in range(self.f)))

    def degree(self):
        return tuple(degree(a) for a in self)

    def length(self):
        return sum(length(a) for a in self)

    def is_dominant(self):
        return all(is_dominant(a) for a in self)

    def is_restricted(self):
        return all(is_restricted(a) for a in self)

    def to_json(self):
        return [a.to_json() for a in self]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not data:
            raise InputError("tuple encoding must be a nonempty array")
        return cls(tuple(WeylElement.from_json(d) for d in data))

    @classmethod
    def constant(cls, a: WeylElement, f: int):
        return cls((a,) * f)


def tuple_bruhat_leq(a: WeylTuple, b: WeylTuple) -> bool:
    a._match(b)
    return all(bruhat_leq(x, y) for x, y in zip(a, b))


def tuple_up_leq(a: WeylTuple, b: WeylTuple) -> bool:
    a._match(b)
    return all(up_leq(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# context

@dataclass(frozen=True)
class GroupContext:
    """Rank, number of embeddings, and the (optional) prime, plus the standard
    weight eta = (n-1, ..., 0) repeated per embedding and the base point eta/n."""

    n: int
    f: int = 1
    p: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ArgumentError("rank must be at least 2")
        if self.f < 1:
            raise ArgumentError("need at least one embedding")
        if self.p is not None and self.p < 2:
            raise ArgumentError("prime must be at least 2")

    @property
    def eta(self):
        return eta_vector(self.n)

    @property
    def base_point(self):
        return base_point(self.n)

    def require_prime(self):
        if self.p is None:
            raise ArgumentError("this operation needs a prime in the context")
        return self.p

    def w0_tuple(self):
        return WeylTuple.constant(w0(self.n), self.f)

    def wh_tuple(self):
        return WeylTuple.constant(w_h(self.n), self.f)

    def eta_tuple(self):
        return (self.eta,) * self.f
