import itertools
import random

import pytest

from optsl2.errors import DomainError, PreconditionError
from optsl2.jordan import jordan_block
from optsl2.matrices import Mat, inverse, random_invertible
from optsl2.orbits import rep_from_partition
from optsl2.partitions import partitions_of
from optsl2.scalars import Fp, QQ
from optsl2.springer import (AdditiveHom, SpringerCoeffs, additive_derivative,
                             additive_eval, additive_untwist, eps_exp,
                             eps_log, orbit_bijection_check, reversion,
                             springer_apply, springer_coeffs_from_value,
                             springer_invert, springer_tangent_experiment)

F2 = Fp(2)
F3 = Fp(3)
F5 = Fp(5)


def test_coeffs_validation():
    c = SpringerCoeffs(QQ, (1, "1/2"))
    assert c.n == 3
    assert SpringerCoeffs(F3, ()).n == 1
    with pytest.raises(DomainError):
        SpringerCoeffs(F3, (0, 1))


def test_apply_known_value_and_equivariance():
    rnd = random.Random(31)
    c = SpringerCoeffs(QQ, (1, "1/2"))
    e = jordan_block(QQ, 3)
    u = Mat.identity(QQ, 3) + e
    f = springer_apply(c, u)
    assert f == e + (e * e).scale(QQ.of("1/2"))
    g = random_invertible(QQ, 3, rnd, bound=3)
    assert springer_apply(c, g * u * inverse(g)) == g * f * inverse(g)


def test_apply_rejects_bad_input():
    c = SpringerCoeffs(F3, (1, 1))
    with pytest.raises(PreconditionError):
        springer_apply(c, Mat.diagonal(F3, [1, 2, 1]))
    with pytest.raises(DomainError):
        springer_apply(c, Mat.identity(F3, 2))


def test_reversion_catalan_pattern():
    # inverse of t + t^2 starts t - t^2 + 2t^3 - 5t^4 (signed Catalans)
    b = reversion(SpringerCoeffs(QQ, (1, 1, 0, 0)), 5)
    assert b == (1, -1, 2, -5)


def test_invert_round_trips():
    rnd = random.Random(32)
    systems = {
        F2: [(1,), (1, 1), (1, 0, 1)],
        F3: [(1,), (2, 1), (1, 2, 1)],
        QQ: [(1,), (1, "1/2"), (2, 0, "1/3")],
    }
    for dom, coeff_lists in systems.items():
        for a in coeff_lists:
            n = len(a) + 1
            c = SpringerCoeffs(dom, a)
            for lam in partitions_of(n):
                g = random_invertible(dom, n, rnd, bound=2)
                X = g * rep_from_partition(dom, lam) * inverse(g)
                u = springer_invert(c, X)
                assert springer_apply(c, u) == X
                assert springer_invert(c, springer_apply(c, u)) == u
    assert springer_invert(SpringerCoeffs(F2, ()),
                           Mat.zero(F2, 1, 1)) == Mat.identity(F2, 1)


def test_invert_rejects_non_nilpotent():
    with pytest.raises(PreconditionError):
        springer_invert(SpringerCoeffs(F3, (1,)), Mat.identity(F3, 2))


def test_orbit_bijection_two_systems_agree():
    rnd = random.Random(33)
    ca = SpringerCoeffs(F3, (1, 2, 0))
    cb = SpringerCoeffs(F3, (2, 1, 1))
    for lam in partitions_of(4):
        g = random_invertible(F3, 4, rnd, bound=2)
        u = Mat.identity(F3, 4) + g * rep_from_partition(F3, lam) * inverse(g)
        rep = orbit_bijection_check(ca, cb, u)
        assert rep.partitions_agree
        assert rep.partition_u == lam


def test_eps_exp_log_round_trip():
    rnd = random.Random(34)
    for dom, n in ((F2, 4), (F3, 5), (F5, 4), (QQ, 4)):
        for lam in partitions_of(n):
            g = random_invertible(dom, n, rnd, bound=2)
            X = g * rep_from_partition(dom, lam) * inverse(g)
            if dom is not QQ and lam[0] > dom.p:
                with pytest.raises(PreconditionError):
                    eps_exp(X)
                continue
            u = eps_exp(X)
            assert eps_log(u) == X
            assert eps_exp(eps_log(u)) == u


def test_eps_exp_known_values():
    e = jordan_block(QQ, 4)
    u = eps_exp(e)
    assert u[0, 1] == 1 and u[0, 2] == QQ.of("1/2") and u[0, 3] == QQ.of("1/6")
    # over F_5 a chain of length 4 is fine and 1/3! = inv(6) = inv(1) = 1
    u5 = eps_exp(jordan_block(F5, 4))
    assert u5[0, 3] == F5.inv(F5.of(6))


def test_eps_exp_is_additive_in_the_parameter():
    for p, lam in ((2, (2, 2)), (3, (3, 1)), (5, (4,))):
        dom = Fp(p)
        X = rep_from_partition(dom, lam)
        for s in range(p):
            for t in range(p):
                lhs = eps_exp(X.scale(s)) * eps_exp(X.scale(t))
                assert lhs == eps_exp(X.scale((s + t) % p))


def test_additive_hom_validation():
    N = jordan_block(F3, 3)
    AdditiveHom(F3, (N, N * N))
    with pytest.raises(PreconditionError):
        AdditiveHom(F3, (Mat.unit(F3, 3, 3, 0, 1), Mat.unit(F3, 3, 3, 1, 0)))
    with pytest.raises(PreconditionError):
        AdditiveHom(F2, (jordan_block(F2, 3),))
    with pytest.raises(DomainError):
        AdditiveHom(F3, ())


def test_additive_eval_is_a_homomorphism():
    N = jordan_block(F3, 3)
    h = AdditiveHom(F3, (N, N * N))
    for s in range(3):
        for t in range(3):
            assert (additive_eval(h, s) * additive_eval(h, t)
                    == additive_eval(h, (s + t) % 3))
    assert additive_eval(h, 0) == Mat.identity(F3, 3)


def test_additive_untwist_strips_frobenius_twists():
    N = jordan_block(F5, 2)
    Z = Mat.zero(F5, 2, 2)
    h = AdditiveHom(F5, (Z, Z, N))
    core, r = additive_untwist(h)
    assert r == 2
    assert not additive_derivative(core).is_zero()
    assert additive_derivative(h).is_zero()
    # untwisting matches precomposition with Frobenius: h(s) = core(s^(p^r))
    for s in range(5):
        assert additive_eval(h, s) == additive_eval(core, pow(s, 5 ** r, 5))
    zero = AdditiveHom(F5, (Z,))
    assert additive_untwist(zero) == (zero, 0)
    plain = AdditiveHom(F5, (N,))
    assert additive_untwist(plain) == (plain, 0)


def test_tangent_experiment_both_outcomes():
    linear = springer_tangent_experiment(SpringerCoeffs(QQ, (3, 0)))
    assert linear.is_scalar and linear.scalar == 3
    quad = springer_tangent_experiment(SpringerCoeffs(QQ, (1, 1)))
    assert not quad.is_scalar and quad.scalar is None
    assert quad.matrix == Mat.from_rows(QQ, [[1, 0], [2, 1]])


def test_coeffs_recovered_from_one_regular_value():
    for dom, a in ((QQ, (1, "1/2", 5)), (F5, (2, 0, 3))):
        c = SpringerCoeffs(dom, a)
        u = Mat.identity(dom, 4) + jordan_block(dom, 4)
        X = springer_apply(c, u)
        assert springer_coeffs_from_value(u, X) == c
    with pytest.raises(PreconditionError):
        springer_coeffs_from_value(Mat.identity(F3, 3),
                                   Mat.zero(F3, 3, 3))
