"""Serre weight presentations, central characters, and genericity polynomials."""

import random

import pytest

from awbm.affine_weyl import GroupContext, WeylElement, WeylTuple, identity, translation
from awbm.errors import ArgumentError, CompatibilityError, DepthError
from awbm.weights import (
    CentralCharacter,
    SerreWeightPresentation,
    build_Pm,
    central_character,
    conv_contains,
    conv_lattice_points,
    genericity,
    lap_of,
    serre_weight,
    superscript,
    weight_depth,
    weight_depth_base,
    weights_equal_mod_center,
)

CTX = GroupContext(2, 1, 37)
WH = WeylElement((2, 1), (0, -1))


def pres(w1, omega, ctx=CTX):
    return SerreWeightPresentation(WeylTuple((w1,)), (omega,), ctx)


def test_serre_weight_examples():
    assert serre_weight(pres(identity(2), (5, 2))) == ((4, 2),)
    assert serre_weight(pres(WH, (10, 3))) == ((2, -27),)


def test_pi_is_identity_for_one_embedding():
    lap = pres(WH, (7, 0))
    assert serre_weight(lap) == ((-1, -30),)


def test_restricted_precondition():
    with pytest.raises(ArgumentError):
        serre_weight(pres(translation((1, 0)), (5, 0)))


def test_central_character_examples():
    assert central_character(pres(identity(2), (1, 0))).zeta == (0,)
    assert central_character(pres(WH, (1, 0))).zeta == (-1,)
    shifted = pres(translation((1, 1)), (0, -1))
    assert central_character(shifted).zeta == (0,)
    assert shifted == pres(identity(2), (1, 0))


def test_depth_of_presentation():
    # omega - eta = (5,0): pairing of (omega) with the coroot is 6
    assert pres(identity(2), (6, 0)).depth() == 5


def test_lap_of_base_alcove():
    out = lap_of(CTX, ((5, 0),), CentralCharacter((5,)))
    assert out.w1[0] == identity(2) and out.omega == ((6, 0),)
    assert serre_weight(out) == ((5, 0),)


def test_lap_of_round_trip_with_twists():
    rng = random.Random(20)
    ctx = GroupContext(2, 2, 37)
    for _ in range(20):
        rows = []
        while len(rows) < 2:
            a, b = rng.randrange(37), rng.randrange(37)
            hi, lo = max(a, b), min(a, b)
            if weight_depth((hi, lo), 37) >= 0:
                rows.append((hi, lo))
        kappa = tuple(rows)
        base_zeta = tuple(sum(k) for k in kappa)
        out = lap_of(ctx, kappa, CentralCharacter(base_zeta))
        assert weights_equal_mod_center(serre_weight(out), kappa, 37)
        # a shifted lift: (p - pi) xi with xi = (3, 5)
        target = CentralCharacter((base_zeta[0] + 37 * 3 - 5,
                                   base_zeta[1] + 37 * 5 - 3))
        out2 = lap_of(ctx, kappa, target)
        assert central_character(out2).zeta == target.zeta
        assert weights_equal_mod_center(serre_weight(out2), kappa, 37)


def test_lap_of_refuses_shallow_weights():
    # kappa on a wall: <kappa+eta, alpha> = 0 mod p
    with pytest.raises(DepthError):
        lap_of(CTX, ((36, 0),), CentralCharacter((36,)))


def test_lap_of_refuses_bad_zeta():
    with pytest.raises(CompatibilityError):
        lap_of(CTX, ((5, 0),), CentralCharacter((6,)))


def test_depth_p_equivalence():
    # exhaustive box: mu - eta is m-deep in the base alcove iff P_m(mu) != 0,
    # whenever mu - eta lies in the base alcove at all
    p = 13
    ctx = GroupContext(2, 1, p)
    for m in (1, 2, 3):
        Pm = build_Pm(2, m)
        for a in range(-p, p):
            for b in range(-p, p):
                mu = (a, b)
                lam = (a - 1, b)  # mu - eta
                in_base = weight_depth_base(lam, p) >= 0
                if not in_base:
                    continue
                deep = weight_depth_base(lam, p) >= m
                assert deep == genericity(ctx, (mu,), polynomial=Pm)


def test_pm_example_values():
    P2 = build_Pm(2, 2)
    assert P2.eval((5, 0)) == 504
    ctx13 = GroupContext(2, 1, 13)
    assert genericity(ctx13, ((5, 0),), polynomial=P2)
    assert not genericity(ctx13, ((2, 0),), polynomial=P2)


def test_superscript():
    P2 = build_Pm(2, 2)
    assert superscript(P2, (0, 0)) == P2
    lifted = superscript(P2, (1, 0))
    pts = conv_lattice_points((1, 0))
    assert set(pts) == {(1, 0), (0, 1)}
    prod = P2.shift((1, 0)) * P2.shift((0, 1))
    assert lifted == prod
    with pytest.raises(ArgumentError):
        superscript(P2, (0, 1))


def test_conv_membership():
    assert conv_contains((1, 1), (2, 0))
    assert not conv_contains((3, -1), (2, 0))
    assert conv_contains((1, 1, 1), (2, 1, 0))
    assert not conv_contains((2, 2, -1), (2, 1, 0))


def test_dot_action_preserves_depth():
    rng = random.Random(21)
    p = 211
    ctx3 = GroupContext(3, 1, p)
    from awbm.affine_weyl import restricted_classes
    from awbm.weights import dot_action
    from awbm.affine_weyl import eta_vector
    eta = eta_vector(3)
    for w1 in restricted_classes(3):
        for _ in range(10):
            from conftest import random_deep_mu
            mu = random_deep_mu(3, p, 3, rng)
            lam = tuple(m - e for m, e in zip(mu, eta))
            kappa = dot_action(w1, lam, p)
            assert weight_depth(kappa, p) == weight_depth(lam, p)


def test_character_reduction_consistency():
    # all presentations of one weight have characters congruent mod (p - pi)
    out1 = lap_of(CTX, ((5, 0),), CentralCharacter((5,)))
    out2 = lap_of(CTX, ((5, 0),), CentralCharacter((5 + 36,)))
    z1, z2 = central_character(out1), central_character(out2)
    assert z1.congruent(z2, 37)
    assert not z1.congruent(CentralCharacter((6,)), 37)
