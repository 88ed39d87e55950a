import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fbh.automorphism import (
    Automorphism,
    LinearBiholomorphism,
    apply,
    as_linear_biholomorphism,
    compose,
    decompose_linear_biholomorphism,
    generator,
    identity,
    inverse,
    jacobian_det,
    kernel_invariance_residual,
    rescaling_biholomorphism,
    rotate_w,
    rotate_z,
    same_action,
    translate,
)
from fbh.domain import DomainError, FBHDomain, Point, boundary_point, defining_function
from fbh.sampling import random_automorphism, random_boundary, random_interior, random_unitary

D111 = FBHDomain(1, 1, 1.0)
GRID = [FBHDomain(n, m, mu) for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] for mu in (0.5, 1.0, 2.0)]


def close(a: Point, b: Point, tol=1e-12):
    return np.allclose(a.z, b.z, rtol=0, atol=tol) and np.allclose(a.w, b.w, rtol=0, atol=tol)


def test_rejects_non_unitary():
    with pytest.raises(DomainError):
        rotate_z(D111, [[2.0]])
    with pytest.raises(DomainError):
        Automorphism(D111, [[1]], [[1]], [0, 0])


def test_generator_examples():
    assert same_action(translate(D111, [0]), identity(D111), [Point([0.3], [0.2])])
    g = generator("rotate_w", D111, -np.eye(1))
    assert np.array_equal(g.Uw, [[-1]]) and np.array_equal(g.U, [[1]]) and not np.any(g.v)
    img = apply(translate(D111, [1]), Point([0], [1]))
    assert close(img, Point([1], [math.exp(-0.5)]))
    assert abs(defining_function(D111, img)) <= 1e-15
    with pytest.raises(ValueError):
        generator("shear", D111, None)


def test_compose_examples(rng):
    v = np.array([0.4 - 0.2j])
    g = compose(translate(D111, -v), translate(D111, v))
    assert np.allclose(g.U, 1, atol=1e-12) and np.allclose(g.Uw, 1, atol=1e-12) and np.allclose(g.v, 0, atol=1e-12)

    t1, ti = translate(D111, [1]), translate(D111, [1j])
    g = compose(ti, t1)
    assert g.v[0] == pytest.approx(1 + 1j)
    assert abs(g.Uw[0, 0]) == pytest.approx(1)
    for _ in range(20):
        p = random_interior(rng, D111)
        assert close(apply(g, p), apply(ti, apply(t1, p)))

    d = FBHDomain(2, 1, 1.0)
    U1, U2 = random_unitary(rng, 2), random_unitary(rng, 2)
    assert np.array_equal(compose(rotate_z(d, U2), rotate_z(d, U1)).U, U2 @ U1)


def test_composition_phase_sign_is_frozen():
    # translate(i) after translate(1) picks up exp(-i mu Im<1, i>) = exp(i) in Uw
    g = compose(translate(D111, [1j]), translate(D111, [1]))
    assert g.Uw[0, 0] == pytest.approx(np.exp(1j), abs=1e-15)


def test_inverse_examples(rng):
    e = identity(D111)
    assert same_action(inverse(e), e, [Point([0.1], [0.2])])
    v = np.array([0.3 + 0.5j])
    probes = [random_interior(rng, D111) for _ in range(5)]
    assert same_action(inverse(translate(D111, v)), translate(D111, -v), probes)
    for _ in range(50):
        d = GRID[int(rng.integers(len(GRID)))]
        g, p = random_automorphism(rng, d), random_interior(rng, d)
        assert close(apply(inverse(g), apply(g, p)), p)


def test_jacobian_examples(rng):
    assert jacobian_det(identity(D111), Point([0.2], [0.1])) == 1
    assert jacobian_det(translate(D111, [1]), Point([0], [0.3])) == pytest.approx(math.exp(-0.5))
    for _ in range(50):
        d = GRID[int(rng.integers(len(GRID)))]
        g1, g2 = random_automorphism(rng, d), random_automorphism(rng, d)
        p = random_interior(rng, d)
        chain = jacobian_det(g2, apply(g1, p)) * jacobian_det(g1, p)
        assert abs(jacobian_det(compose(g2, g1), p) - chain) <= 1e-12 * abs(chain)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_group_laws_and_homomorphism(seed):
    rng = np.random.default_rng(seed)
    d = GRID[seed % len(GRID)]
    g1, g2, g3 = (random_automorphism(rng, d) for _ in range(3))
    probes = [random_interior(rng, d) for _ in range(3)]
    assert same_action(compose(compose(g3, g2), g1), compose(g3, compose(g2, g1)), probes)
    assert same_action(compose(g1, inverse(g1)), identity(d), probes)
    for p in probes:
        assert close(apply(g2 @ g1, p), g2(g1(p)))


def test_boundary_and_sign_preserved(rng):
    for d in GRID:
        g = random_automorphism(rng, d)
        b = random_boundary(rng, d)
        assert abs(defining_function(d, apply(g, b))) <= 1e-10
        assert defining_function(d, apply(g, random_interior(rng, d))) < 0


def test_rotate_w_preserves_rho_exactly():
    d = FBHDomain(1, 2, 1.0)
    p = Point([0.3], [0.2, 0.4])
    g = rotate_w(d, np.array([[0, 1], [1, 0]]))
    assert defining_function(d, apply(g, p)) == defining_function(d, p)


def test_linear_elements_match_matrix(rng):
    for d in GRID:
        g = compose(rotate_w(d, random_unitary(rng, d.m)), rotate_z(d, random_unitary(rng, d.n)))
        p = random_interior(rng, d)
        img = apply(g, p)
        assert np.allclose(g.matrix() @ p.as_vector(), img.as_vector(), rtol=0, atol=1e-15)
        assert decompose_linear_biholomorphism(as_linear_biholomorphism(g)).accepted
    with pytest.raises(DomainError):
        translate(D111, [1]).matrix()


def test_invariance_examples(rng):
    p = Point([0.1], [0.3])
    assert kernel_invariance_residual(D111, identity(D111), p, p) == 0
    d = FBHDomain(2, 2, 1.0)
    g = compose(rotate_w(d, random_unitary(rng, 2)), rotate_z(d, random_unitary(rng, 2)))
    assert kernel_invariance_residual(d, g, random_interior(rng, d), random_interior(rng, d)) <= 1e-12
    q = Point([0], [0.5])
    assert kernel_invariance_residual(D111, translate(D111, [1]), q, q) < 1e-10
    with pytest.raises(DomainError):
        kernel_invariance_residual(d, identity(D111), p, p)


def test_rescaling_examples():
    L = rescaling_biholomorphism(D111, D111)
    assert np.array_equal(L.matrix, np.eye(2))
    src, tgt = FBHDomain(1, 1, 2.0), FBHDomain(1, 1, 1.0)
    L = rescaling_biholomorphism(src, tgt)
    assert np.allclose(L.matrix, np.diag([math.sqrt(2), 1]))
    b = boundary_point(src, [1], [1])
    assert abs(defining_function(tgt, L(b))) <= 1e-15
    with pytest.raises(DomainError):
        rescaling_biholomorphism(D111, FBHDomain(2, 1, 1.0))


def test_decompose_examples():
    r = decompose_linear_biholomorphism(
        LinearBiholomorphism(FBHDomain(1, 1, 2.0), FBHDomain(1, 1, 1.0), np.diag([math.sqrt(2), 1]))
    )
    assert r.accepted and np.allclose(r.U, 1) and np.allclose(r.B, 1)
    r = decompose_linear_biholomorphism(LinearBiholomorphism(D111, D111, np.eye(2)))
    assert r.accepted
    M = np.eye(2)
    M[0, 1] = 1e-3
    r = decompose_linear_biholomorphism(LinearBiholomorphism(D111, D111, M))
    assert not r.accepted and r.violated == "C" and r.reason == "C ≠ 0"
    M = np.eye(2)
    M[1, 0] = 1e-3
    M[0, 1] = 1e-3
    assert decompose_linear_biholomorphism(LinearBiholomorphism(D111, D111, M)).violated == "D"


def test_decompose_tolerance_boundary():
    M = np.eye(2)
    M[0, 1] = 1e-12
    assert decompose_linear_biholomorphism(LinearBiholomorphism(D111, D111, M)).accepted
    assert not decompose_linear_biholomorphism(LinearBiholomorphism(D111, D111, M), tol=1e-13).accepted


def test_linear_map_shape_checks():
    with pytest.raises(DomainError):
        LinearBiholomorphism(D111, D111, np.eye(3))
    with pytest.raises(DomainError):
        LinearBiholomorphism(D111, FBHDomain(2, 1, 1.0), np.eye(2))
    with pytest.raises(DomainError):
        decompose_linear_biholomorphism(LinearBiholomorphism(FBHDomain(1, 2, 1.0), FBHDomain(2, 1, 1.0), np.eye(3)))
