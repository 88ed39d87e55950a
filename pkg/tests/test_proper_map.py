import cmath
import math

import numpy as np
import pytest

from fbh.domain import DomainError, FBHDomain, Point, boundary_point, defining_function
from fbh.proper_map import (
    PowerProperMap,
    apply_proper,
    branch_gap,
    branch_locus_report,
    local_inverses,
    proper_jacobian_det,
    roots_of_unity,
    transformation_rule_residual,
    transformation_rule_sides,
)
from fbh.sampling import random_interior

PHI = PowerProperMap(1, 1.0, 2)


def off_locus(rng, d, margin=0.05):
    while True:
        q = random_interior(rng, d)
        if abs(q.w[0]) > margin:
            return q


def test_construction():
    assert PHI.domain == FBHDomain(1, 1, 1.0)
    assert PHI.order == 2
    with pytest.raises(DomainError):
        PowerProperMap(1, 1.0, 1)
    with pytest.raises(DomainError):
        apply_proper(PHI, Point([0], [0, 0]))


def test_apply_examples():
    assert apply_proper(PHI, Point([0], [0])) == Point([0], [0])
    img = apply_proper(PHI, boundary_point(PHI.domain, [1], [1]))
    assert img.z[0] == pytest.approx(math.sqrt(2))
    assert img.w[0] == pytest.approx(math.exp(-1))
    assert abs(defining_function(PHI.domain, img)) <= 1e-15
    img = PowerProperMap(1, 1.0, 3)(Point([0], [0.5]))
    assert img.w[0] == pytest.approx(0.125)


def test_jacobian_examples():
    assert proper_jacobian_det(PHI, Point([0.3], [0])) == 0
    assert proper_jacobian_det(PHI, Point([0], [0.5])) == pytest.approx(math.sqrt(2))
    assert proper_jacobian_det(PowerProperMap(2, 1.0, 2), Point([0, 0], [1])) == pytest.approx(4)


def test_roots_of_unity_exact_quarter_turns():
    assert roots_of_unity(4) == [1, 1j, -1, -1j]
    assert roots_of_unity(2) == [1, -1]
    r = roots_of_unity(5)
    assert all(abs(abs(x) - 1) < 1e-15 for x in r)
    assert abs(sum(r)) < 1e-15


def test_local_inverse_examples():
    brs = local_inverses(PHI, Point([0], [0.25]))
    assert [b.point.w[0] for b in brs] == [0.5, -0.5]
    assert brs[0].jacobian == pytest.approx(1 / math.sqrt(2))
    assert brs[1].jacobian == pytest.approx(-1 / math.sqrt(2))
    assert brs[0].jacobian + brs[1].jacobian == 0
    for b in brs:
        assert b.jacobian * proper_jacobian_det(PHI, b.point) == pytest.approx(1)
    with pytest.raises(DomainError):
        local_inverses(PHI, Point([0], [0]))
    with pytest.raises(DomainError):
        local_inverses(PHI, Point([0], [1.5]))


def test_inverses_roundtrip_and_distinct(rng):
    for f in (PHI, PowerProperMap(2, 0.5, 3), PowerProperMap(1, 2.0, 5)):
        for _ in range(20):
            q = off_locus(rng, f.domain)
            pts = []
            for b in local_inverses(f, q):
                back = apply_proper(f, b.point)
                assert np.allclose(back.as_vector(), q.as_vector(), rtol=0, atol=1e-12)
                pts.append(b.point.as_vector())
            for i in range(len(pts)):
                for j in range(i):
                    assert np.abs(pts[i] - pts[j]).max() > 1e-12


def test_transformation_rule_examples():
    assert transformation_rule_residual(PHI, Point([0], [0.3]), Point([0], [0.25])) < 1e-9
    lhs, rhs = transformation_rule_sides(PHI, Point([0.2], [0]), Point([0.1], [0.25]))
    assert rhs == 0 and lhs == 0


def test_transformation_rule_random(rng):
    for _ in range(50):
        assert transformation_rule_residual(PHI, random_interior(rng, PHI.domain), off_locus(rng, PHI.domain)) < 1e-9


def test_transformation_rule_near_branch(rng):
    for _ in range(10):
        q = Point([0.3 * rng.standard_normal()], [1e-3 * cmath.exp(2j * math.pi * rng.random())])
        assert transformation_rule_residual(PHI, random_interior(rng, PHI.domain), q) < 1e-6


def test_transformation_rule_higher_order(rng):
    for f in (PowerProperMap(1, 1.0, 3), PowerProperMap(2, 0.5, 4)):
        for _ in range(10):
            assert transformation_rule_residual(f, off_locus(rng, f.domain), off_locus(rng, f.domain)) < 1e-9


def test_properness_along_rays(rng):
    for _ in range(20):
        b = boundary_point(PHI.domain, [rng.standard_normal() + 1j * rng.standard_normal()], [1])
        vals = [defining_function(PHI.domain, apply_proper(PHI, Point(b.z, t * b.w))) for t in 1 - np.logspace(-1, -8, 15)]
        assert all(v < 0 for v in vals)
        assert all(y >= x for x, y in zip(vals, vals[1:]))
        assert abs(vals[-1]) < 1e-6


def test_branch_report():
    rep = branch_locus_report(PHI, 200, seed=0)
    assert not rep.closure_meets_boundary
    assert rep.min_boundary_gap >= math.exp(-9)
    assert rep.probes == 200
    assert branch_gap(PHI, [0]) == 1
    gaps = [branch_gap(PHI, [r]) for r in np.linspace(0, 3, 10)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    with pytest.raises(DomainError):
        branch_locus_report(PHI, 0, seed=0)
