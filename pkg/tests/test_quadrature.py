import itertools
import math

import numpy as np
import pytest

from fbh.domain import DomainError, FBHDomain, Point
from fbh.kernel import kernel, kernel_monomial_coefficient
from fbh.quadrature import (
    MonomialFunction,
    inner_product_mc,
    inner_product_monomials,
    monomial_norm,
    orthogonality_residual,
    reproducing_residual,
)

D111 = FBHDomain(1, 1, 1.0)
ONE = [MonomialFunction((0,), (0,))]
Z = [MonomialFunction((0,), (1,))]
W = [MonomialFunction((1,), (0,))]


def closed_form_norm(d, alpha, beta):
    ka = sum(alpha)
    num = math.pi ** (d.n + d.m) * math.prod(map(math.factorial, alpha)) * math.prod(map(math.factorial, beta))
    return num / (math.factorial(ka + d.m) * (d.mu * (ka + d.m)) ** (sum(beta) + d.n))


def test_monomial_function():
    f = MonomialFunction((2,), (1,), 3.0)
    assert f.degree == 3
    assert f(np.array([2.0]), np.array([0.5]))[0] == pytest.approx(1.5)
    with pytest.raises(ValueError):
        MonomialFunction((-1,), (0,))


def test_norm_examples():
    assert monomial_norm(D111, (0,), (0,)) == pytest.approx(math.pi**2, rel=1e-13)
    assert monomial_norm(D111, (1,), (0,)) == pytest.approx(math.pi**2 / 4, rel=1e-13)
    assert monomial_norm(D111, (0,), (1,)) == pytest.approx(math.pi**2, rel=1e-13)
    with pytest.raises(ValueError):
        monomial_norm(D111, (0,), (0,), quad_points=4)
    with pytest.raises(DomainError):
        monomial_norm(D111, (0, 0), (0,))


@pytest.mark.parametrize("nm", [(1, 1), (2, 1), (1, 2), (2, 2)])
@pytest.mark.parametrize("mu", [0.5, 2.0])
def test_norm_matches_closed_form(nm, mu):
    d = FBHDomain(*nm, mu)
    for alpha in itertools.product(range(4), repeat=d.m):
        for beta in itertools.product(range(4), repeat=d.n):
            assert monomial_norm(d, alpha, beta) == pytest.approx(closed_form_norm(d, alpha, beta), rel=1e-12)


def test_coefficient_duality_degree_five():
    d = FBHDomain(2, 2, 0.5)
    for alpha in itertools.product(range(6), repeat=2):
        for beta in itertools.product(range(6), repeat=2):
            if sum(alpha) + sum(beta) <= 5:
                assert kernel_monomial_coefficient(d, alpha, beta) * monomial_norm(d, alpha, beta) == pytest.approx(1, abs=1e-8)


def test_volume_consistency(rng):
    d = FBHDomain(2, 1, 2.0)
    o = Point([0, 0], [0])
    vol = monomial_norm(d, (0,), (0, 0))
    p = Point([0.1, 0.2j], [0.3])
    assert vol * kernel(d, p, o).value == pytest.approx(1, abs=1e-8)


def test_orthogonality_examples():
    assert orthogonality_residual(D111, ((1,), (0,)), ((0,), (1,))) <= 1e-12
    assert orthogonality_residual(D111, ((2,), (0,)), ((1,), (0,))) <= 1e-12
    with pytest.raises(ValueError):
        orthogonality_residual(D111, ((1,), (0,)), ((1,), (0,)))


def test_inner_product_diagonal_is_norm():
    d = FBHDomain(1, 2, 1.0)
    v = inner_product_monomials(d, ((1, 2), (1,)), ((1, 2), (1,)))
    assert v.real == pytest.approx(monomial_norm(d, (1, 2), (1,)), rel=1e-12)


def within(est, exact, se, k=3.0):
    return abs(est - exact) <= k * se


def test_mc_inner_product_examples():
    r = inner_product_mc(D111, ONE, ONE, 100_000, seed=1)
    assert r.estimate.real == pytest.approx(math.pi**2, rel=1e-12)
    r = inner_product_mc(D111, Z, W, 100_000, seed=2)
    assert within(r.estimate, 0, r.standard_error)
    r = inner_product_mc(D111, W, W, 100_000, seed=3)
    assert within(r.estimate, math.pi**2 / 4, r.standard_error)
    with pytest.raises(ValueError):
        inner_product_mc(D111, ONE, ONE, 10)


def test_mc_is_reproducible_and_shard_invariant_in_distribution():
    a = inner_product_mc(D111, W, W, 20_000, seed=5, shards=4)
    b = inner_product_mc(D111, W, W, 20_000, seed=5, shards=4)
    assert a == b
    c = inner_product_mc(D111, W, W, 20_000, seed=5, shards=1)
    assert within(a.estimate, c.estimate, math.hypot(a.standard_error, c.standard_error), 4.0)


def test_mc_threads_do_not_change_result(monkeypatch):
    a = inner_product_mc(D111, W, W, 20_000, seed=9, shards=4)
    monkeypatch.setenv("FBH_SUITE_THREADS", "4")
    b = inner_product_mc(D111, W, W, 20_000, seed=9, shards=4)
    assert a == b


def test_reproducing_examples():
    r = reproducing_residual(D111, ONE, Point([0.4], [0.2]), 100_000, seed=0)
    assert r.residual <= 3 * r.standard_error
    r = reproducing_residual(D111, W, Point([0], [0.5]), 100_000, seed=1)
    assert r.exact == 0.5 and r.residual <= 3 * r.standard_error
    r = reproducing_residual(D111, Z, Point([1], [0.1]), 100_000, seed=2)
    assert r.exact == 1 and r.residual <= 3 * r.standard_error


def test_reproducing_preconditions():
    with pytest.raises(DomainError):
        reproducing_residual(D111, ONE, Point([0], [1.0]), 1000)
    with pytest.raises(ValueError):
        reproducing_residual(D111, [MonomialFunction((7,), (0,))], Point([0], [0.1]), 1000)
    with pytest.raises(DomainError):
        reproducing_residual(D111, [MonomialFunction((0, 0), (0,))], Point([0], [0.1]), 1000)
