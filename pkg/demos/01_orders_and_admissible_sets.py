"""A tour of the exact affine Weyl group layer for GL_n.

Run as `python demos/01_orders_and_admissible_sets.py`.  Elements are pairs
(w, nu) realising the affine map x -> w(x) + nu; all order computations go
through a fixed interior base point, so everything below is exact integer or
rational arithmetic.
"""

from awbm.affine_weyl import (
    WeylElement,
    adm,
    ap_enumerate,
    bruhat_interval,
    bruhat_leq,
    classify,
    length,
    multiply,
    regular_factorization,
    star,
    translation,
    up_leq,
    w0,
)
from awbm.oracles import chain_up_leq, im_length, subword_leq

print("== lengths ==")
t = translation((2, 1, 0))
print("ell(t_(2,1,0)) by hyperplane count:", length(t))
print("ell(t_(2,1,0)) by the closed formula:", im_length(t))
print("ell(w0) =", length(w0(3)), " (the number of positive roots)")

print("\n== orders ==")
s_delta = WeylElement((2, 1), (1, 0))  # a length-zero element of degree one
t10 = translation((1, 0))
print("s_delta <= t_(1,0):", bruhat_leq(s_delta, t10),
      " (subword oracle:", subword_leq(s_delta, t10), ")")
print("t_(0,1) <= t_(1,0):", bruhat_leq(translation((0, 1)), t10))
print("w0 ↑ e:", up_leq(w0(2), WeylElement((1, 2), (0, 0))),
      " (chain oracle:", chain_up_leq(w0(2), WeylElement((1, 2), (0, 0)), 5), ")")

print("\n== intervals and admissible sets ==")
print("interval below t_(1,0):",
      [(x.w, x.nu) for x in bruhat_interval(t10)])
for variant in ("all", "regular", "dual"):
    A = adm((1, 0), variant)
    print(f"Adm((1,0)) {variant}: {[(x.w, x.nu) for x in A]}")
print("|Adm^reg((2,1,0))| =", len(adm((2, 1, 0), "regular")))

print("\n== regular factorization and admissible pairs ==")
for g in adm((1, 0), "regular"):
    w1, w2 = regular_factorization(g)
    check = multiply(multiply(w2, g), WeylElement((1, 2), (0, 0)))
    print(f"  {(g.w, g.nu)} = w2^-1 w0 w1 with w1={(w1.w, w1.nu)}, "
          f"w2={(w2.w, w2.nu)}")
print("AP((2,1,0)) has", len(ap_enumerate((2, 1, 0))), "pairs, one per",
      "regular admissible element")

print("\n== alcove flags ==")
fl = classify(t10, m=1, p=37)
print("t_(1,0):", fl)
print("star of (s,(1,0)):", star(s_delta).w, star(s_delta).nu)
