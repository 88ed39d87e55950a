"""Branched proper self-maps (z, w) -> (sqrt(d) z, w^d) of D_{n,1}(mu).

For d = 2 this is the standard example showing that proper self-maps of
D_{n,m}(mu) need not be automorphisms when m = 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import config
from .domain import DomainError, FBHDomain, Point, check_point, defining_function
from .kernel import DEFAULT_CONTROL, SeriesControl, kernel_to_scale


@dataclass(frozen=True)
class PowerProperMap:
    n: int
    mu: float
    d: int = 2

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise DomainError("branching order d must be an integer >= 2")
        object.__setattr__(self, "d", int(self.d))

    @property
    def domain(self) -> FBHDomain:
        return FBHDomain(self.n, 1, self.mu)

    @property
    def order(self) -> int:
        return self.d

    def __call__(self, p: Point) -> Point:
        return apply_proper(self, p)


def _check(f: PowerProperMap, p: Point) -> None:
    if p.w.size != 1:
        raise DomainError("power maps act on D_{n,1}: w must have length 1")
    check_point(f.domain, p)


def apply_proper(f: PowerProperMap, p: Point) -> Point:
    _check(f, p)
    return Point(math.sqrt(f.d) * p.z, p.w**f.d)


def proper_jacobian_det(f: PowerProperMap, p: Point) -> complex:
    _check(f, p)
    return math.sqrt(f.d) ** f.n * f.d * complex(p.w[0]) ** (f.d - 1)


def roots_of_unity(d: int) -> list[complex]:
    """exp(2 pi i k / d) for k = 0..d-1, exact at the quarter turns."""
    exact = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}
    out = []
    for k in range(d):
        if (4 * k) % d == 0:
            out.append(exact[4 * k // d])
        else:
            out.append(cmath.exp(2j * math.pi * k / d))
    return out


@dataclass(frozen=True)
class LocalInverse:
    point: Point
    jacobian: complex


def local_inverses(f: PowerProperMap, q: Point) -> list[LocalInverse]:
    """The d preimages of q with the Jacobian determinants of the inverse branches.

    Branches are labelled by k: preimage w-coordinate is the principal root
    times exp(2 pi i k / d).
    """
    _check(f, q)
    if not defining_function(f.domain, q) < 0:
        raise DomainError("q must be an interior point")
    w = complex(q.w[0])
    if w == 0:
        raise DomainError("q lies on the branch value set w = 0")
    root = cmath.exp(cmath.log(w) / f.d)
    z = q.z / math.sqrt(f.d)
    scale = (1 / math.sqrt(f.d)) ** f.n / (f.d * w)
    return [LocalInverse(Point(z, [root * om]), scale * root * om) for om in roots_of_unity(f.d)]


def transformation_rule_sides(
    f: PowerProperMap, p: Point, q: Point, ctl: SeriesControl = DEFAULT_CONTROL
) -> tuple[complex, complex]:
    """Both sides of sum_k K(p, F_k(q)) conj(U_k(q)) = u(p) K(f(p), q)."""
    dom = f.domain
    u = proper_jacobian_det(f, p)
    rhs = u * kernel_to_scale(dom, apply_proper(f, p), q, ctl).value
    branches = local_inverses(f, q)
    # the branch sum cancels down to |rhs|; truncate each term well below that
    weight = sum(abs(br.jacobian) for br in branches)
    scale = abs(rhs) / weight if rhs != 0 else None
    lhs = sum(kernel_to_scale(dom, p, br.point, ctl, scale).value * br.jacobian.conjugate() for br in branches)
    return complex(lhs), complex(rhs)


def transformation_rule_residual(
    f: PowerProperMap, p: Point, q: Point, ctl: SeriesControl = DEFAULT_CONTROL
) -> float:
    lhs, rhs = transformation_rule_sides(f, p, q, ctl)
    return abs(lhs - rhs) / (abs(rhs) + config.RESIDUAL_FLOOR)


@dataclass(frozen=True)
class BranchReport:
    locus_description: str
    min_boundary_gap: float
    closure_meets_boundary: bool
    probes: int
    justification: str = field(
        default="every point (z, 0) of the locus has rho = -exp(-mu |z|^2) < 0, "
        "so no finite limit point lies on the boundary"
    )


def branch_gap(f: PowerProperMap, z) -> float:
    """|rho(z, 0)|, the distance of the locus point (z, 0) from the boundary in rho."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    return -defining_function(f.domain, Point(z, [0]))


def branch_locus_report(
    f: PowerProperMap, probe_count: int, seed: int, radius: float = config.BRANCH_PROBE_RADIUS
) -> BranchReport:
    """Probe the Jacobian zero set {w = 0} at points with |z| <= radius."""
    if probe_count < 1:
        raise DomainError("probe_count must be at least 1")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((probe_count, f.n)) + 1j * rng.standard_normal((probe_count, f.n))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    r = radius * rng.random(probe_count) ** (1 / (2 * f.n))
    zs = g * r[:, None]
    gaps = [branch_gap(f, z) for z in zs]
    meets = not all(gap > 0 for gap in gaps)
    return BranchReport("w₁ = 0", float(min(gaps)), meets, probe_count)
