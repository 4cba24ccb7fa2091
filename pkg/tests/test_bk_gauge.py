"""Series-matrix calculus: twists, basis changes, straightening, shapes."""

import random

import pytest

from awbm.affine_weyl import (
    GroupContext,
    WeylTuple,
    finite,
    identity,
    translation,
)
from awbm.errors import (
    ArgumentError,
    GenericityError,
    IntegralityError,
)
from awbm.bk_gauge import (
    Coefficients,
    SeriesMatrix,
    TwistData,
    change_of_basis,
    frobenius_twist,
    recover_left_factor,
    shape_semisimple,
    straighten,
)
from awbm.inertial_types import make_type
from conftest import (
    perms,
    random_bounded_height,
    random_iw1,
    random_iwahori,
)

F5 = Coefficients(5)
F7 = Coefficients(7)
F49 = Coefficients(7, 2)

# a twist of depth 1 at p = 5 and one of depth 2 at p = 7
CTX5 = GroupContext(2, 1, 5)
TW5 = TwistData(WeylTuple((finite((2, 1)),)), ((1, 0),), CTX5)
CTX7 = GroupContext(2, 1, 7)
TW7 = TwistData(WeylTuple((finite((2, 1)),)), ((2, 0),), CTX7)


def test_field_arithmetic():
    assert F49.r is not None
    rng = random.Random(60)
    for field in (F7, F49):
        for _ in range(30):
            c = field.rand_scalar(rng, nonzero=True)
            inv = field.inv_scalar(c)
            prod = field.mul_scalar(c, inv)
            assert prod[0] == 1 and (field.degree == 1 or prod[1] == 0)


def test_series_inverse():
    rng = random.Random(61)
    for field in (F7, F49):
        for n in (2, 3):
            A = random_iwahori(field, n, rng)
            I = SeriesMatrix.identity(field, n)
            assert (A * A.inverse(40)).equal_mod(I, 40)
            assert (A.inverse(40) * A).equal_mod(I, 40)


def test_json_round_trip():
    rng = random.Random(62)
    for field in (F7, F49):
        m = random_bounded_height(field, 2, rng, 1).truncate(25)
        again = SeriesMatrix.from_json(m.to_json())
        assert again.equal_mod(m, 25)


def test_twist_identity_and_depth():
    assert TW5.depth() == 1 and TW7.depth() == 2
    Z = frobenius_twist(SeriesMatrix.identity(F5, 2), 0, TW5)
    assert Z.equal_mod(SeriesMatrix.identity(F5, 2), 30)


def test_twist_contraction_claims():
    rng = random.Random(63)
    m = TW5.depth()
    p = 5
    one = SeriesMatrix.identity(F5, 2)
    for _ in range(10):
        # unipotent-Iwahori inputs contract to 1 mod v^{m+1}
        Y = random_iw1(F5, 2, rng)
        Z = frobenius_twist(Y.truncate(40), 0, TW5)
        assert (Z - one).is_zero_mod(m + 1)
    for k in (1, 2, 3):
        # inputs congruent to 1 mod v^k land at 1 mod v^{(k-1)p + m + 1}
        ent = {(1, 1, 0): 1, (2, 2, 0): 1, (1, 2, k): 3, (2, 1, k): 2,
               (1, 1, k): 4}
        Yk = SeriesMatrix.from_entries(F5, 2, ent, None)
        Zk = frobenius_twist(Yk.truncate(60), 0, TW5)
        assert (Zk - one).is_zero_mod((k - 1) * p + m + 1)
    # nilpotent-mod-v inputs land inside v^{m+1} of the integral matrices
    Yu = SeriesMatrix.from_entries(
        F5, 2, {(1, 1, 1): 2, (2, 2, 1): 3, (1, 2, 0): 1, (2, 1, 1): 4}, None)
    Zu = frobenius_twist(Yu.truncate(40), 0, TW5)
    assert not Zu.window(Zu.lo, m + 1).any()
    for k in (1, 2):
        # v^k Mat lands in v^{(k-1)p + m + 1} Mat
        Yd = SeriesMatrix.from_entries(
            F5, 2, {(i, j, k): 1 + i + j for i in (1, 2) for j in (1, 2)}, None)
        Zd = frobenius_twist(Yd.truncate(60), 0, TW5)
        assert not Zd.window(Zd.lo, (k - 1) * p + m + 1).any()


def test_twist_integrality_error():
    # a pole: strictly lower constant entry cannot survive a shallow twist
    bad = SeriesMatrix.from_entries(
        F5, 2, {(1, 1, 0): 1, (2, 2, 0): 1, (2, 1, 0): 1}, None)
    with pytest.raises(IntegralityError):
        frobenius_twist(bad.truncate(40), 0, TW5)


def test_change_of_basis_identity_and_cocycle():
    rng = random.Random(64)
    ctx = GroupContext(2, 2, 5)
    tw = TwistData(WeylTuple((finite((2, 1)), finite((1, 2)))),
                   ((1, 0), (2, 1)), ctx)
    A = [random_bounded_height(F5, 2, rng, 1).truncate(60) for _ in range(2)]
    ident = [SeriesMatrix.identity(F5, 2) for _ in range(2)]
    out = change_of_basis(A, ident, tw)
    assert all(out[j].equal_mod(A[j].truncate(40), 40) for j in range(2))
    I1 = [random_iwahori(F5, 2, rng).truncate(60) for _ in range(2)]
    J1 = [random_iwahori(F5, 2, rng).truncate(60) for _ in range(2)]
    two_steps = change_of_basis(change_of_basis(A, I1, tw), J1, tw)
    at_once = change_of_basis(A, [(J1[j] * I1[j]).truncate(60)
                                  for j in range(2)], tw)
    assert all(two_steps[j].equal_mod(at_once[j], 40) for j in range(2))


def test_change_of_basis_constant_diagonal():
    # constant diagonals are Frobenius-fixed over F_p, so the twist reduces
    # to the permuted conjugation
    D = SeriesMatrix.from_entries(F7, 2, {(1, 1, 0): 3, (2, 2, 0): 4}, None)
    A = [SeriesMatrix.from_entries(
        F7, 2, {(1, 1, 0): 1, (2, 2, 1): 1, (1, 2, 0): 2}, None).truncate(50)]
    out = change_of_basis(A, [D], TW7)
    s = TW7.perm(0)
    Dperm_inv = SeriesMatrix.from_entries(
        F7, 2, {(s[0], s[0], 0): pow(3, -1, 7), (s[1], s[1], 0): pow(4, -1, 7)},
        None)
    expected = (D * A[0] * Dperm_inv).truncate(40)
    assert out[0].equal_mod(expected, 40)


STRAIGHT_CONFIGS = [
    (2, 1, 5, 0, (1, 0)),
    (2, 2, 5, 0, (1, 0)),
    (2, 1, 7, 1, (2, 0)),
    (2, 2, 7, 1, (2, 0)),
    (3, 1, 7, 0, (2, 1, 0)),
    (3, 2, 7, 0, (2, 1, 0)),
]


@pytest.mark.parametrize("n,f_emb,p,h,mu0", STRAIGHT_CONFIGS)
def test_straighten_round_trip(n, f_emb, p, h, mu0):
    rng = random.Random(65 + n + p + f_emb)
    field = Coefficients(p)
    ctx = GroupContext(n, f_emb, p)
    M = 40
    for _ in range(3):
        s = WeylTuple(tuple(finite(rng.choice(perms(n))) for _ in range(f_emb)))
        tw = TwistData(s, (mu0,) * f_emb, ctx)
        assert tw.depth() >= h + 1
        z = tw.dual_element()
        A = [random_bounded_height(field, n, rng, h).truncate(80)
             for _ in range(f_emb)]
        X = [random_iw1(field, n, rng).truncate(80) for _ in range(f_emb)]
        I = straighten(A, X, z, M, h=h)
        for m in I:
            assert m.is_iw1()
        back = recover_left_factor(A, I, z, M)
        for j in range(f_emb):
            assert back[j].equal_mod(X[j].truncate(M), M)


def test_straighten_identity_fixed_point():
    rng = random.Random(66)
    z = TW7.dual_element()
    A = [random_bounded_height(F7, 2, rng, 1).truncate(80)]
    I = straighten(A, [SeriesMatrix.identity(F7, 2)], z, 40, h=1)
    assert I[0].equal_mod(SeriesMatrix.identity(F7, 2), 40)


def test_straighten_uniqueness_different_seed():
    rng = random.Random(67)
    z = TW7.dual_element()
    A = [random_bounded_height(F7, 2, rng, 1).truncate(80)]
    X = [random_iw1(F7, 2, rng).truncate(80)]
    main = straighten(A, X, z, 20, h=1)
    J = random_iw1(F7, 2, rng).truncate(60)
    Ainv = A[0].inverse(60)
    for _ in range(20):
        J = (X[0] * A[0] * frobenius_twist(J, 0, TW7).truncate(60)
             * Ainv).truncate(60)
    assert J.equal_mod(main[0], 20)


def test_straighten_depth_guard():
    rng = random.Random(68)
    shallow = TwistData(WeylTuple((finite((2, 1)),)), ((3, 0),), CTX5)
    z = shallow.dual_element()
    A = [random_bounded_height(F5, 2, rng, 1).truncate(80)]
    X = [random_iw1(F5, 2, rng).truncate(80)]
    with pytest.raises(GenericityError):
        straighten(A, X, z, 40, h=1)


def test_straighten_height_guard():
    rng = random.Random(69)
    z = TW7.dual_element()
    A = [random_bounded_height(F7, 2, rng, 2).truncate(80)]
    # claim height 0 while the matrix has valuation-2 determinant somewhere
    X = [random_iw1(F7, 2, rng).truncate(80)]
    det = A[0]._det_series(10)
    if not det[:, 0].any() and not det[:, 1].any():
        with pytest.raises(ArgumentError):
            straighten(A, X, z, 40, h=0)


def test_straighten_quadratic_field():
    rng = random.Random(70)
    z = TW7.dual_element()
    A = [random_bounded_height(F49, 2, rng, 1).truncate(80)]
    X = [random_iw1(F49, 2, rng).truncate(80)]
    I = straighten(A, X, z, 40, h=1)
    back = recover_left_factor(A, I, z, 40)
    assert back[0].equal_mod(X[0].truncate(40), 40)


def test_shape_examples():
    ctx = GroupContext(2, 1, 37)
    rho = make_type(ctx, [(1, 2)], [(5, 0)], kind="F")
    tau = make_type(ctx, [(1, 2)], [(4, 0)])
    res = shape_semisimple(rho, tau)
    assert res.shape[0] == translation((1, 0))
    assert res.admissible_for(((1, 0),))
    rho6 = make_type(ctx, [(1, 2)], [(6, 0)], kind="F")
    res2 = shape_semisimple(rho6, tau)
    assert res2.shape[0] == translation((2, 0))
    assert not res2.admissible_for(((1, 0),))
    # equal avatars: identity shape, admissible for every regular weight in
    # the degree-zero twist class
    res3 = shape_semisimple(rho, make_type(ctx, [(1, 2)], [(5, 0)]))
    assert res3.shape[0] == identity(2)
    assert res3.admissible_for(((1, -1),)) and res3.admissible_for(((2, -2),))
    assert not res3.admissible_for(((1, 0),))  # degree obstruction


def test_shape_dual_matches_shifted():
    rng = random.Random(71)
    ctx = GroupContext(2, 1, 211)
    from conftest import random_deep_mu
    for _ in range(15):
        mu_r = random_deep_mu(2, 211, 1, rng)
        mu_t = random_deep_mu(2, 211, 1, rng)
        rho = make_type(ctx, [rng.choice(perms(2))], [mu_r], kind="F")
        tau = make_type(ctx, [rng.choice(perms(2))], [mu_t])
        res = shape_semisimple(rho, tau)
        for lam in [(1, 0), (2, 0), (2, 1), (3, 1)]:
            lpe = (tuple(l + e for l, e in zip(lam, (1, 0))),)
            assert res.admissible_for((lam,)) == \
                (res.w_rhobar_tau[0] in set(__import__("awbm.affine_weyl",
                 fromlist=["adm"]).adm(lam)))
