"""Verification batteries run by ``fbh suite``.

Each check measures a single number and compares it with a threshold from
:mod:`fbh.config`. Checks run in declaration order, or concurrently when
FBH_SUITE_THREADS > 1; the report order never depends on scheduling.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import config
from .automorphism import (
    LinearBiholomorphism,
    apply,
    compose,
    decompose_linear_biholomorphism,
    identity,
    inverse,
    jacobian_det,
    kernel_invariance_residual,
    rescaling_biholomorphism,
    rotate_w,
    rotate_z,
)
from .domain import FBHDomain, Point, boundary_point, defining_function, levi_form_restricted
from .kernel import (
    SeriesControl,
    fock_bargmann_base,
    kernel,
    kernel_extended,
    kernel_monomial_coefficient,
    kernel_scalar,
    kernel_to_scale,
    ligocka_assemble,
    t_matrix,
    t_matrix_fd,
)
from .proper_map import (
    PowerProperMap,
    apply_proper,
    branch_locus_report,
    local_inverses,
    proper_jacobian_det,
    transformation_rule_residual,
)
from .quadrature import MonomialFunction, inner_product_mc, monomial_norm, orthogonality_residual, reproducing_residual
from .quadrature import config_threads
from .sampling import (
    random_automorphism,
    random_boundary,
    random_cvec,
    random_interior,
    random_unit,
    random_unitary,
)

GRID = [FBHDomain(n, m, mu) for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] for mu in (0.5, 1.0, 2.0)]


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    measured: float
    threshold: float
    paper_anchor: str


@dataclass
class SuiteReport:
    suite_name: str
    seed: int
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "suite_name": self.suite_name,
            "seed": self.seed,
            "status": "pass" if self.passed else "fail",
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "measured": c.measured,
                    "threshold": c.threshold,
                    "paper_anchor": c.paper_anchor,
                }
                for c in self.checks
            ],
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


# a check body returns (measured, threshold); "ge" checks pass when measured >= threshold
CheckSpec = tuple[str, str, str, Callable[[np.random.Generator], tuple[float, float]]]


def _rng(seed: int, name: str) -> np.random.Generator:
    # per-check stream so results do not depend on execution order
    return np.random.default_rng([seed, *name.encode()])


def _max(values) -> float:
    return float(max(values, default=0.0))


# --- kernel -----------------------------------------------------------------


def _anchor_values(rng):
    worst = 0.0
    for d in (FBHDomain(1, 1, 1), FBHDomain(1, 2, 1), FBHDomain(1, 1, 2)):
        exact = math.factorial(d.m) * d.m**d.n * d.mu**d.n / math.pi ** (d.n + d.m)
        o = Point(np.zeros(d.n), np.zeros(d.m))
        worst = max(worst, abs(kernel(d, o, o).value - exact))
    return worst, config.ACC_ANCHOR_TOL


def _closed_form(rng):
    d = FBHDomain(1, 1, 1)
    return _max(
        abs(kernel_scalar(d, 0, x).value - (1 + x) / (1 - x) ** 3 / math.pi**2) for x in (0.1, -0.1, 0.5, -0.5, 0.9)
    ), config.ACC_CLOSED_FORM_TOL


def _hermitian(rng):
    out = []
    for d in GRID:
        for _ in range(10):
            p, q = random_interior(rng, d), random_interior(rng, d)
            k1, k2 = kernel_to_scale(d, p, q).value, kernel_to_scale(d, q, p).value
            out.append(abs(k1 - k2.conjugate()) / abs(k1))
    return _max(out), config.GROUP_LAW_TOL


def _unitary_invariance(rng):
    out = []
    for d in GRID:
        for _ in range(10):
            p, q = random_interior(rng, d), random_interior(rng, d)
            U, V = random_unitary(rng, d.n), random_unitary(rng, d.m)
            k1 = kernel_to_scale(d, p, q).value
            k2 = kernel_to_scale(d, Point(U @ p.z, V @ p.w), Point(U @ q.z, V @ q.w)).value
            out.append(abs(k1 - k2) / abs(k1))
    return _max(out), config.GROUP_LAW_TOL


def _rescaling_identity(rng):
    out = []
    for d in GRID:
        for _ in range(5):
            p, q = random_interior(rng, d, max_frac=0.45), random_interior(rng, d, max_frac=0.45)
            for r in (0.5, 2.0):
                k1 = kernel_extended(d, p, q).value
                k2 = kernel_extended(d, Point(p.z, r * p.w), Point(q.z, q.w / r)).value
                out.append(abs(k1 - k2))
    return _max(out), 0.0


def _mu_scaling(rng):
    out = []
    for n, m in [(1, 1), (2, 1), (1, 2)]:
        for mu, mu2 in [(2.0, 1.0), (1.0, 3.0)]:
            src, tgt = FBHDomain(n, m, mu), FBHDomain(n, m, mu2)
            phi = rescaling_biholomorphism(src, tgt)
            for _ in range(10):
                p, q = random_interior(rng, src), random_interior(rng, src)
                k1 = kernel_to_scale(src, p, q).value
                k2 = (mu / mu2) ** n * kernel_to_scale(tgt, phi(p), phi(q)).value
                out.append(abs(k1 - k2) / abs(k1))
    return _max(out), config.ACC_MU_SCALING_TOL


def _ligocka(rng):
    out = []
    for d in GRID:
        base = fock_bargmann_base(d)
        for _ in range(5):
            p, q = random_interior(rng, d), random_interior(rng, d)
            out.append(abs(ligocka_assemble(base, d.m, p, q).value - kernel(d, p, q).value))
    return _max(out), config.ACC_LIGOCKA_TOL


def _diagonal_positive(rng):
    worst = math.inf
    for d in GRID:
        for _ in range(10):
            p = random_interior(rng, d)
            v = kernel(d, p, p).value
            worst = min(worst, v.real - 1e6 * abs(v.imag))
    return worst, 0.0


def _tail_honesty(rng):
    fine = SeriesControl(config.SERIES_TOL / 100)
    out = []
    for d in GRID:
        for _ in range(5):
            p, q = random_interior(rng, d), random_interior(rng, d)
            coarse = kernel(d, p, q)
            # measured: how far inside the reported bound the change stays (<= 1 passes)
            out.append(abs(kernel(d, p, q, fine).value - coarse.value) / (coarse.tail_bound + 1e-16 * abs(coarse.value)))
    return _max(out), 1.0


def _t_positive(rng):
    worst = math.inf
    for d in GRID:
        o = Point(np.zeros(d.n), np.zeros(d.m))
        T = t_matrix(d, o, o)
        worst = min(worst, float(np.linalg.eigvalsh(0.5 * (T + T.conj().T)).min()))
    return worst, config.ACC_T_EIG_FLOOR


def _t_fd(rng):
    out = []
    for d in GRID:
        for _ in range(2):
            p, q = random_interior(rng, d), random_interior(rng, d)
            T = t_matrix(d, p, q)
            # entries grow to O(10^3) near the boundary; compare on the scale of the matrix
            out.append(float(np.abs(T - t_matrix_fd(d, p, q)).max()) / max(1.0, float(np.abs(T).max())))
    return _max(out), config.ACC_T_FD_TOL


def _extended_boundary(rng):
    d = FBHDomain(1, 1, 1)
    v = kernel_extended(d, Point([0], [1]), Point([0], [0.5])).value
    return abs(v - 1.5 / 0.5**3 / math.pi**2), config.ACC_CLOSED_FORM_TOL


KERNEL_CHECKS: list[CheckSpec] = [
    ("kernel anchor values at the origin", "le", "Bergman kernel series, single surviving term", _anchor_values),
    ("closed-form oracle (1+x)/(1-x)^3", "le", "Bergman kernel series", _closed_form),
    ("Hermitian symmetry", "le", "reproducing kernel symmetry", _hermitian),
    ("unitary invariance", "le", "circular symmetry of the kernel", _unitary_invariance),
    ("rescaling identity K((z,rw),(t,s/r))", "le", "holomorphic extension past the boundary", _rescaling_identity),
    ("mu-scaling identity", "le", "biholomorphisms between domains with different mu", _mu_scaling),
    ("Ligocka assembly with Fock-Bargmann bases", "le", "Hartogs kernel from weighted base kernels", _ligocka),
    ("diagonal positivity", "ge", "Bergman kernel series", _diagonal_positive),
    ("tail bound honesty", "le", "series truncation bound", _tail_honesty),
    ("T_D(0,0) minimum eigenvalue", "ge", "log-kernel Hessian positive definite at the origin", _t_positive),
    ("T_D analytic vs finite differences", "le", "log-kernel Hessian", _t_fd),
    ("extended kernel at a boundary point", "le", "holomorphic extension past the boundary", _extended_boundary),
]


# --- automorphism -------------------------------------------------------------


def _pt_dist(p: Point, q: Point) -> float:
    return float(np.abs(p.as_vector() - q.as_vector()).max())


def _group_laws(rng):
    out = []
    for d in GRID:
        probes = [random_interior(rng, d) for _ in range(3)]
        for _ in range(9):
            g1, g2, g3 = (random_automorphism(rng, d) for _ in range(3))
            e = identity(d)
            pairs = [
                (compose(g3, compose(g2, g1)), compose(compose(g3, g2), g1)),
                (compose(e, g1), g1),
                (compose(g1, e), g1),
                (compose(inverse(g1), g1), e),
                (compose(g1, inverse(g1)), e),
            ]
            for a, b in pairs:
                out.append(max(_pt_dist(apply(a, p), apply(b, p)) for p in probes))
    return _max(out), config.GROUP_LAW_TOL


def _homomorphism(rng):
    out = []
    for d in GRID:
        for _ in range(9):
            g1, g2 = random_automorphism(rng, d), random_automorphism(rng, d)
            p = random_interior(rng, d)
            out.append(_pt_dist(apply(compose(g2, g1), p), apply(g2, apply(g1, p))))
    return _max(out), config.GROUP_LAW_TOL


def _chain_rule(rng):
    out = []
    for d in GRID:
        for _ in range(5):
            g1, g2 = random_automorphism(rng, d), random_automorphism(rng, d)
            p = random_interior(rng, d)
            lhs = jacobian_det(compose(g2, g1), p)
            rhs = jacobian_det(g2, apply(g1, p)) * jacobian_det(g1, p)
            out.append(abs(lhs - rhs) / max(1.0, abs(rhs)))
    return _max(out), config.GROUP_LAW_TOL


def _boundary_preserved(rng):
    out = []
    for d in GRID:
        for _ in range(10):
            g = random_automorphism(rng, d)
            out.append(abs(defining_function(d, apply(g, random_boundary(rng, d)))))
            if not defining_function(d, apply(g, random_interior(rng, d))) < 0:
                out.append(math.inf)
    return _max(out), config.BOUNDARY_TOL


def _linear_stratum(rng):
    out = []
    for d in GRID:
        g = compose(rotate_w(d, random_unitary(rng, d.m)), rotate_z(d, random_unitary(rng, d.n)))
        p = random_interior(rng, d)
        out.append(float(np.abs(apply(g, p).as_vector() - g.matrix() @ p.as_vector()).max()))
    # matrix-vector products may round differently from the blockwise action
    return _max(out), config.GROUP_LAW_TOL


def _invariance(rng):
    out = []
    for _ in range(200):
        d = GRID[int(rng.integers(len(GRID)))]
        g = random_automorphism(rng, d)
        p, q = random_interior(rng, d), random_interior(rng, d)
        out.append(kernel_invariance_residual(d, g, p, q))
    return _max(out), config.ACC_INVARIANCE_TOL


def decomposition_fixtures() -> list[tuple[str, LinearBiholomorphism, str | None]]:
    """(label, map, expected violated block or None) for the normal-form test."""
    r2 = math.sqrt(2.0)
    rng = np.random.default_rng(20240601)
    out = []

    def add(label, n, m, mu, mu2, M, expect):
        out.append((label, LinearBiholomorphism(FBHDomain(n, m, mu), FBHDomain(n, m, mu2), M), expect))

    add("diag(sqrt2, 1), mu 2 -> 1", 1, 1, 2.0, 1.0, np.diag([r2, 1.0]), None)
    add("identity, mu = mu'", 2, 2, 1.0, 1.0, np.eye(4), None)
    U, B = random_unitary(rng, 2), random_unitary(rng, 2)
    M = np.zeros((4, 4), complex)
    M[:2, :2], M[2:, 2:] = math.sqrt(3.0 / 1.5) * U, B
    add("rescaled unitary blocks, mu 3 -> 1.5", 2, 2, 3.0, 1.5, M, None)
    M = np.zeros((3, 3), complex)
    M[:1, :1], M[1:, 1:] = np.exp(0.7j), random_unitary(rng, 2)
    add("phase and w-rotation, mu = mu'", 1, 2, 0.8, 0.8, M, None)

    eps = 1e-3
    base11 = np.diag([r2, 1.0]).astype(complex)
    for label, (i, j), expect in [("lower-left", (1, 0), "D"), ("upper-right", (0, 1), "C")]:
        M = base11.copy()
        M[i, j] = eps
        add(f"{label} perturbation", 1, 1, 2.0, 1.0, M, expect)
    M = base11.copy()
    M[1, 1] = 1 + eps
    add("B scaled", 1, 1, 2.0, 1.0, M, "B")
    M = base11.copy()
    M[0, 0] = r2 * (1 + eps)
    add("A scaled", 1, 1, 2.0, 1.0, M, "A")
    add("A uses the wrong mu ratio", 1, 1, 2.0, 1.0, np.eye(2), "A")
    M = np.eye(4, dtype=complex)
    M[3, 0] = 0.5
    M[0, 3] = 0.5
    add("D and C both nonzero (D reported first)", 2, 2, 1.0, 1.0, M, "D")
    M = np.eye(3, dtype=complex)
    M[1:, 1:] = [[1, 0.2], [0, 1]]
    add("non-unitary B block", 1, 2, 1.0, 1.0, M, "B")
    M = np.eye(3, dtype=complex)
    M[0, 0] = 2.0
    add("A stretched, mu = mu'", 2, 1, 1.0, 1.0, M, "A")
    return out


def _decompose_fixtures(rng):
    wrong = 0
    for _, L, expect in decomposition_fixtures():
        res = decompose_linear_biholomorphism(L)
        if (expect is None) != res.accepted or (expect is not None and res.violated != expect):
            wrong += 1
    return float(wrong), 0.0


def _rescaling_boundary(rng):
    out = []
    for mu, mu2 in [(2.0, 1.0), (1.0, 3.0), (0.5, 0.5)]:
        for n, m in [(1, 1), (2, 2)]:
            src, tgt = FBHDomain(n, m, mu), FBHDomain(n, m, mu2)
            phi = rescaling_biholomorphism(src, tgt)
            for _ in range(5):
                out.append(abs(defining_function(tgt, phi(random_boundary(rng, src)))))
    return _max(out), config.BOUNDARY_TOL


AUTOMORPHISM_CHECKS: list[CheckSpec] = [
    ("group axioms (associativity, identity, inverse)", "le", "automorphism group generators", _group_laws),
    ("action homomorphism", "le", "automorphism group generators", _homomorphism),
    ("Jacobian chain rule", "le", "automorphism group generators", _chain_rule),
    ("boundary preservation", "le", "automorphism group generators", _boundary_preserved),
    ("origin-fixing elements act linearly", "le", "Cartan linearity for circular domains", _linear_stratum),
    ("kernel invariance residual", "le", "Bergman kernel transformation rule, biholomorphic case", _invariance),
    ("normal-form decomposition fixtures (mismatches)", "le", "biholomorphisms are rescalings up to automorphisms", _decompose_fixtures),
    ("rescaling maps boundary to boundary", "le", "biholomorphisms are rescalings up to automorphisms", _rescaling_boundary),
]


# --- proper map -----------------------------------------------------------------


PHI = PowerProperMap(1, 1.0, 2)


def _off_branch_pair(rng, f: PowerProperMap, min_w: float = config.BRANCH_MARGIN):
    d = f.domain
    p = random_interior(rng, d)
    while True:
        q = random_interior(rng, d)
        if abs(q.w[0]) > min_w:
            return p, q


def _eq2_random(rng):
    out = []
    for _ in range(100):
        p, q = _off_branch_pair(rng, PHI)
        out.append(transformation_rule_residual(PHI, p, q))
    return _max(out), config.ACC_TRANSFORM_TOL


def _eq2_near_branch(rng):
    out = []
    for _ in range(10):
        p = random_interior(rng, PHI.domain)
        q = Point(random_cvec(rng, 1, 0.5), [1e-3 * random_unit(rng, 1)[0]])
        out.append(transformation_rule_residual(PHI, p, q))
    return _max(out), config.ACC_TRANSFORM_NEAR_BRANCH_TOL


def _eq2_cancellation(rng):
    out = []
    for _ in range(10):
        p = Point(random_cvec(rng, 1, 0.5), [0])
        _, q = _off_branch_pair(rng, PHI)
        out.append(transformation_rule_residual(PHI, p, q))
    return _max(out), config.ACC_TRANSFORM_TOL


def _eq2_higher_order(rng):
    # u(p) ~ w^(d-1) makes the branch sum cancel by a factor |w_p|^(1-d), so p also stays off the locus
    out = []
    for f in (PowerProperMap(1, 1.0, 3), PowerProperMap(2, 0.5, 4)):
        for _ in range(10):
            _, p = _off_branch_pair(rng, f)
            _, q = _off_branch_pair(rng, f)
            out.append(transformation_rule_residual(f, p, q))
    return _max(out), config.ACC_TRANSFORM_TOL


def _inverse_roundtrip(rng):
    out = []
    for f in (PHI, PowerProperMap(2, 0.5, 3)):
        for _ in range(20):
            _, q = _off_branch_pair(rng, f)
            for br in local_inverses(f, q):
                out.append(_pt_dist(apply_proper(f, br.point), q))
                out.append(abs(br.jacobian * proper_jacobian_det(f, br.point) - 1))
    return _max(out), config.GROUP_LAW_TOL


def _preimages_distinct(rng):
    worst = math.inf
    for f in (PHI, PowerProperMap(1, 1.0, 5)):
        for _ in range(20):
            _, q = _off_branch_pair(rng, f)
            pts = [br.point.as_vector() for br in local_inverses(f, q)]
            for a, b in itertools.combinations(pts, 2):
                worst = min(worst, float(np.abs(a - b).max()))
    return worst, 1e-12


def _properness_rays(rng):
    # rho(f(p_t)) must increase to 0 from below as p_t approaches the boundary
    worst = 0.0
    ts = 1 - np.logspace(-1, -8, 15)
    for _ in range(20):
        b = random_boundary(rng, PHI.domain)
        vals = [defining_function(PHI.domain, apply_proper(PHI, Point(b.z, t * b.w))) for t in ts]
        if any(v >= 0 for v in vals) or any(y < x for x, y in zip(vals, vals[1:])):
            return math.inf, 1e-6
        worst = max(worst, abs(vals[-1]))
    return worst, 1e-6


def _branch_report(rng):
    rep = branch_locus_report(PHI, 200, int(rng.integers(2**31)))
    floor = math.exp(-PHI.mu * config.BRANCH_PROBE_RADIUS**2)
    if rep.closure_meets_boundary:
        return 0.0, floor
    return rep.min_boundary_gap, floor


PROPER_MAP_CHECKS: list[CheckSpec] = [
    ("transformation rule residual, random pairs", "le", "Bergman kernel transformation rule under proper maps", _eq2_random),
    ("transformation rule residual near the branch locus", "le", "removable singularity across the branch locus", _eq2_near_branch),
    ("transformation rule residual with u(p) = 0", "le", "Bergman kernel transformation rule under proper maps", _eq2_cancellation),
    ("transformation rule residual, d = 3, 4", "le", "Bergman kernel transformation rule under proper maps", _eq2_higher_order),
    ("local inverses invert the map", "le", "local inverses of a branched covering", _inverse_roundtrip),
    ("preimages pairwise distinct", "ge", "local inverses of a branched covering", _preimages_distinct),
    ("boundary-approaching rays stay inside and reach the boundary", "le", "proper self-map with branching", _properness_rays),
    ("branch locus stays away from the boundary", "ge", "branch locus closure misses the boundary", _branch_report),
]


# --- oracle -------------------------------------------------------------------


def _duality(rng):
    worst = 0.0
    for n, m in [(1, 1), (2, 1), (1, 2)]:
        for mu in (1.0, 2.0):
            d = FBHDomain(n, m, mu)
            for e in itertools.product(range(5), repeat=n + m):
                if sum(e) <= 4:
                    alpha, beta = e[n:], e[:n]
                    c = kernel_monomial_coefficient(d, alpha, beta)
                    worst = max(worst, abs(c * monomial_norm(d, alpha, beta) - 1))
    return worst, config.ACC_DUALITY_TOL


def _volume_duality(rng):
    out = []
    for d in GRID:
        o = Point(np.zeros(d.n), np.zeros(d.m))
        vol = monomial_norm(d, (0,) * d.m, (0,) * d.n)
        for _ in range(5):
            out.append(abs(kernel(d, random_interior(rng, d), o).value * vol - 1))
    return _max(out), config.ACC_VOLUME_TOL


def _orthogonality(rng):
    out = []
    for d in (FBHDomain(1, 1, 1), FBHDomain(2, 1, 0.5), FBHDomain(1, 2, 2.0)):
        idx = [(e[d.n :], e[: d.n]) for e in itertools.product(range(3), repeat=d.dim) if sum(e) <= 2]
        for a, b in itertools.combinations(idx, 2):
            out.append(orthogonality_residual(d, a, b))
    return _max(out), 1e-12


def _mc_reproducing(rng):
    d = FBHDomain(1, 1, 1)
    q = Point([0.5 + 0.3j], [0.3 - 0.2j])
    fs = [((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,)), ((2,), (0,))]
    worst = 0.0
    for alpha, beta in fs:
        for seed in range(5):
            r = reproducing_residual(d, [MonomialFunction(alpha, beta)], q, seed=int(rng.integers(2**31)))
            worst = max(worst, r.residual / r.standard_error)
    return worst, config.MC_SIGMAS


def _mc_norms(rng):
    worst = 0.0
    for d in (FBHDomain(1, 1, 1), FBHDomain(2, 1, 0.5)):
        for alpha, beta in [((1,), (0,) * d.n), ((0,), (1,) + (0,) * (d.n - 1))]:
            f = [MonomialFunction(alpha, beta)]
            est = inner_product_mc(d, f, f, seed=int(rng.integers(2**31)))
            worst = max(worst, abs(est.estimate - monomial_norm(d, alpha, beta)) / est.standard_error)
    return worst, config.MC_SIGMAS


def _levi(rng):
    worst = math.inf
    for d in GRID:
        for _ in range(200):
            z = random_cvec(rng, d.n)
            z *= min(1.0, math.sqrt(config.LEVI_SAMPLE_MAX_EXPONENT / d.mu) / np.linalg.norm(z))
            p = boundary_point(d, z, random_unit(rng, d.m))
            worst = min(worst, float(levi_form_restricted(d, p).eigenvalues.min()))
    return worst, config.LEVI_EIG_TOL


def _boundary_param(rng):
    out = []
    for d in GRID:
        for _ in range(50):
            z = random_cvec(rng, d.n, 5.0)
            z *= min(1.0, 5.0 / np.linalg.norm(z))
            out.append(abs(defining_function(d, boundary_point(d, z, random_unit(rng, d.m)))))
    return _max(out), config.UNIT_VECTOR_TOL


ORACLE_CHECKS: list[CheckSpec] = [
    ("coefficient-norm duality", "le", "monomial expansion of the Bergman kernel", _duality),
    ("volume-kernel duality", "le", "Bergman kernel at the origin equals 1/volume", _volume_duality),
    ("monomial orthogonality", "le", "monomial expansion of the Bergman kernel", _orthogonality),
    ("Monte Carlo reproducing property (max residual / SE)", "le", "reproducing property of the Bergman kernel", _mc_reproducing),
    ("Monte Carlo monomial norms (max deviation / SE)", "le", "Bergman space inner product", _mc_norms),
    ("Levi form minimum eigenvalue", "ge", "strong pseudoconvexity of the domain", _levi),
    ("boundary parametrisation", "le", "domain definition", _boundary_param),
]


SUITES: dict[str, list[CheckSpec]] = {
    "kernel": KERNEL_CHECKS,
    "automorphism": AUTOMORPHISM_CHECKS,
    "proper-map": PROPER_MAP_CHECKS,
    "oracle": ORACLE_CHECKS,
}


def _run_check(spec: CheckSpec, seed: int) -> Check:
    name, kind, anchor, body = spec
    measured, threshold = body(_rng(seed, name))
    ok = measured >= threshold if kind == "ge" else measured <= threshold
    return Check(name, "pass" if ok else "fail", float(measured), float(threshold), anchor)


def run_suite(name: str, seed: int = 0) -> SuiteReport:
    if name == "all":
        specs = [s for suite in SUITES.values() for s in suite]
    elif name in SUITES:
        specs = SUITES[name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    start = time.perf_counter()
    workers = min(len(specs), config_threads())
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            checks = list(ex.map(lambda s: _run_check(s, seed), specs))
    else:
        checks = [_run_check(s, seed) for s in specs]
    return SuiteReport(name, seed, checks, time.perf_counter() - start)
