"""Deliberately naive reference implementations of the order machinery.

These recompute length, Bruhat order, the upper-arrow order, and bounded
enumerations straight from the definitions, sharing nothing with the main
algorithms beyond the group law:

* length: the Iwahori-Matsumoto closed formula for t_nu ∘ w,
      sum_{alpha>0, w^{-1}alpha>0} |<nu,alpha∨>|
    + sum_{alpha>0, w^{-1}alpha<0} |<nu,alpha∨> - 1|;
* bruhat: the subword property over one reduced expression (descents taken
  with respect to the closed-formula length);
* up: breadth-first search over single up-reflections across separating
  hyperplanes, restricted to alcoves within hyperplane distance L of both
  endpoints (every chain step crosses exactly one hyperplane, so the chain
  stays inside that region);
* enumerate: all elements of a given degree with length at most L.

They are shipped, not test-only, so cross-checks can be run on demand.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache

from .affine_weyl import (
    WeylElement,
    degree,
    evaluate,
    base_point,
    identity,
    multiply,
    omega_power,
    pairing,
    perm_inverse,
    positive_roots,
    simple_reflections,
    sort_key,
    wa_part_and_omega,
)
from .errors import CapacityError, InputError

__all__ = ["oracle", "im_length", "subword_leq", "chain_up_leq", "enumerate_elements"]


def _check_bound(n: int, bound: int):
    if bound < 0:
        raise InputError("length bound must be nonnegative")
    if n >= 3 and bound > 10:
        raise CapacityError(f"oracle bound {bound} exceeds the n>=3 limit of 10")
    if bound > 14:
        raise CapacityError(f"oracle bound {bound} exceeds the hard limit of 14")


def im_length(a: WeylElement) -> int:
    """Iwahori-Matsumoto closed formula for t_nu ∘ w."""
    n = a.n
    winv = perm_inverse(a.w)
    total = 0
    for root in positive_roots(n):
        i, k = root
        v = pairing(a.nu, root)
        if winv[i - 1] < winv[k - 1]:  # w^{-1}(alpha) > 0
            total += abs(v)
        else:
            total += abs(v - 1)
    return total


def _im_reduced_word(x: WeylElement):
    # left-descent stripping: the letters come out in product order
    word = []
    cur = x
    lcur = im_length(cur)
    while lcur > 0:
        for idx, s in enumerate(simple_reflections(x.n)):
            cand = multiply(s, cur)
            lc = im_length(cand)
            if lc < lcur:
                word.append(idx)
                cur, lcur = cand, lc
                break
        else:
            raise CapacityError("stuck while extracting a reduced word")
    return word


def subword_leq(a: WeylElement, b: WeylElement, bound: int | None = None) -> bool:
    """a <= b by enumerating all subword products of one reduced word of b."""
    if degree(a) != degree(b):
        return False
    xb, delta = wa_part_and_omega(b)
    xa, _ = wa_part_and_omega(a)
    if bound is not None:
        _check_bound(a.n, bound)
        if im_length(xb) > bound:
            raise CapacityError("subword oracle bound exceeded")
    word = _im_reduced_word(xb)
    refs = simple_reflections(a.n)
    closure = {identity(a.n)}
    for idx in word:
        closure |= {multiply(y, refs[idx]) for y in closure}
    return xa in closure


@lru_cache(maxsize=None)
def _hyperplane_distance(a: WeylElement, b: WeylElement) -> int:
    x = base_point(a.n)
    ya, yb = evaluate(a, x), evaluate(b, x)
    total = 0
    for root in positive_roots(a.n):
        pa, pb = pairing(ya, root), pairing(yb, root)
        fa = pa.numerator // pa.denominator if isinstance(pa, Fraction) else pa
        fb = pb.numerator // pb.denominator if isinstance(pb, Fraction) else pb
        total += abs(fa - fb)
    return total


def chain_up_leq(a: WeylElement, b: WeylElement, bound: int) -> bool:
    """a ↑ b by BFS over up-reflections c ↦ s_{alpha,k}·c (alcove of c strictly
    below the hyperplane).  The search region is the set of alcoves within
    hyperplane distance R of both endpoints, R = max(bound, d(a,b)) + 4;
    every chain step crosses hyperplanes only between the endpoints' floors
    up to that slack, so the region is generous enough at desk scale (and the
    result is cross-checked against the Wang-reduction path in the tests)."""
    _check_bound(a.n, bound)
    if degree(a) != degree(b):
        return False
    radius = max(bound, _hyperplane_distance(a, b)) + 4
    n = a.n
    x = base_point(n)
    ybs = evaluate(b, x)
    klim = {}
    for root in positive_roots(n):
        pb = pairing(ybs, root)
        fb = pb.numerator // pb.denominator
        klim[root] = (fb - radius - 1, fb + radius + 1)
    seen = {a}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        if cur == b:
            return True
        ycur = evaluate(cur, x)
        for root in positive_roots(n):
            pc = pairing(ycur, root)
            lo, hi = klim[root]
            for k in range(lo, hi + 1):
                if pc < k:
                    nxt = multiply(_reflection(n, root, k), cur)
                    if nxt in seen:
                        continue
                    if (_hyperplane_distance(nxt, a) <= radius
                            and _hyperplane_distance(nxt, b) <= radius):
                        seen.add(nxt)
                        queue.append(nxt)
    return False


def _reflection(n: int, root, k: int) -> WeylElement:
    """s_{alpha,k}: x ↦ x - (<x,alpha∨> - k) alpha."""
    i, j = root
    perm = list(range(1, n + 1))
    perm[i - 1], perm[j - 1] = j, i
    nu = [0] * n
    nu[i - 1], nu[j - 1] = k, -k
    return WeylElement(tuple(perm), tuple(nu))


def enumerate_elements(n: int, deg: int, bound: int):
    """All elements of the given degree with length <= bound."""
    _check_bound(n, bound)
    delta = omega_power(n, deg)
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for cur in frontier:
            for s in simple_reflections(n):
                cand = multiply(s, cur)
                if cand not in seen and im_length(cand) <= bound:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted((multiply(y, delta) for y in seen), key=sort_key)


def oracle(kind: str, *args, **kwargs):
    """Dispatch {length | bruhat | up | enumerate} to the naive implementations."""
    if kind == "length":
        (a,) = args
        return im_length(a)
    if kind == "bruhat":
        a, b = args
        return subword_leq(a, b, kwargs.get("bound"))
    if kind == "up":
        a, b = args
        return chain_up_leq(a, b, kwargs["bound"])
    if kind == "enumerate":
        return enumerate_elements(kwargs["n"], kwargs["deg"], kwargs["bound"])
    raise InputError(f"unknown oracle kind {kind!r}")
