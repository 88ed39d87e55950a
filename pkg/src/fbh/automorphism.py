"""Automorphisms of D_{n,m}(mu) and linear biholomorphisms between such domains.

Every element is stored in the canonical form (U, Uw, v) acting by

    (z, w) -> (U z + v, exp(-mu <U z, v> - mu |v|^2 / 2) Uw w)

with U, Uw unitary. Products of the rotation and translation generators stay
in this form; the leftover unimodular constant is absorbed into Uw.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import config
from .domain import DomainError, FBHDomain, Point, check_point
from .kernel import DEFAULT_CONTROL, SeriesControl, inner, kernel, kernel_to_scale


def _unitary_defect(M: np.ndarray) -> float:
    return float(np.linalg.norm(M.conj().T @ M - np.eye(M.shape[0])))


def _as_matrix(M, size: int, name: str) -> np.ndarray:
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    if M.shape != (size, size):
        raise DomainError(f"{name} must be {size}x{size}, got {M.shape}")
    return M


@dataclass(frozen=True, eq=False)
class Automorphism:
    domain: FBHDomain
    U: np.ndarray
    Uw: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        d = self.domain
        U = _as_matrix(self.U, d.n, "U").copy()
        Uw = _as_matrix(self.Uw, d.m, "Uw").copy()
        v = np.atleast_1d(np.asarray(self.v, dtype=complex)).copy()
        if v.shape != (d.n,):
            raise DomainError(f"v must have length {d.n}")
        for name, M in (("U", U), ("Uw", Uw)):
            if _unitary_defect(M) > config.UNITARY_TOL:
                raise DomainError(f"{name} is not unitary (defect {_unitary_defect(M):.2e})")
            M.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "U", U)
        object.__setattr__(self, "Uw", Uw)
        object.__setattr__(self, "v", v)

    def __call__(self, p: Point) -> Point:
        return apply(self, p)

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        return compose(self, other)

    def is_linear(self) -> bool:
        return not np.any(self.v)

    def matrix(self) -> np.ndarray:
        """Block matrix of the action; only meaningful when v = 0."""
        if not self.is_linear():
            raise DomainError("translation part is nonzero; action is not linear")
        d = self.domain
        M = np.zeros((d.dim, d.dim), dtype=complex)
        M[: d.n, : d.n] = self.U
        M[d.n :, d.n :] = self.Uw
        return M


def identity(d: FBHDomain) -> Automorphism:
    return Automorphism(d, np.eye(d.n), np.eye(d.m), np.zeros(d.n))


def rotate_z(d: FBHDomain, U) -> Automorphism:
    return Automorphism(d, U, np.eye(d.m), np.zeros(d.n))


def rotate_w(d: FBHDomain, Uw) -> Automorphism:
    return Automorphism(d, np.eye(d.n), Uw, np.zeros(d.n))


def translate(d: FBHDomain, v) -> Automorphism:
    return Automorphism(d, np.eye(d.n), np.eye(d.m), v)


def generator(kind: str, d: FBHDomain, arg) -> Automorphism:
    """Build a generator by name: ``rotate_z``, ``rotate_w`` or ``translate``."""
    makers = {"rotate_z": rotate_z, "rotate_w": rotate_w, "translate": translate}
    try:
        return makers[kind](d, arg)
    except KeyError:
        raise ValueError(f"unknown generator kind {kind!r}") from None


def _check_same(g2: Automorphism, g1: Automorphism) -> None:
    if g2.domain != g1.domain:
        raise DomainError("automorphisms belong to different domains")


def compose(g2: Automorphism, g1: Automorphism) -> Automorphism:
    """g2 o g1."""
    _check_same(g2, g1)
    mu = g2.domain.mu
    U2v1 = g2.U @ g1.v
    # the constant term picks up exp(-mu <U2 v1, v2>); only its real part is
    # accounted for by |v|^2, the imaginary part becomes a phase on Uw
    phase = cmath.exp(-1j * mu * inner(U2v1, g2.v).imag)
    return Automorphism(g2.domain, g2.U @ g1.U, phase * (g2.Uw @ g1.Uw), U2v1 + g2.v)


def inverse(g: Automorphism) -> Automorphism:
    # <U^H v, -U^H v> is real, so no phase correction is needed
    Uh = g.U.conj().T
    return Automorphism(g.domain, Uh, g.Uw.conj().T, -(Uh @ g.v))


def _factor(g: Automorphism, z: np.ndarray) -> complex:
    mu = g.domain.mu
    Uz = g.U @ z
    return cmath.exp(-mu * inner(Uz, g.v) - 0.5 * mu * inner(g.v, g.v).real)


def apply(g: Automorphism, p: Point) -> Point:
    check_point(g.domain, p)
    return Point(g.U @ p.z + g.v, _factor(g, p.z) * (g.Uw @ p.w))


def jacobian_det(g: Automorphism, p: Point) -> complex:
    """Holomorphic Jacobian determinant; the derivative is block lower triangular."""
    check_point(g.domain, p)
    return complex(np.linalg.det(g.U) * np.linalg.det(g.Uw)) * _factor(g, p.z) ** g.domain.m


def same_action(g1: Automorphism, g2: Automorphism, probes: list[Point], tol: float = config.GROUP_LAW_TOL) -> bool:
    """Elements are treated as equal when their actions agree on a probe set."""
    for p in probes:
        a, b = apply(g1, p), apply(g2, p)
        if not (np.allclose(a.z, b.z, rtol=0, atol=tol) and np.allclose(a.w, b.w, rtol=0, atol=tol)):
            return False
    return True


def kernel_invariance_residual(
    d: FBHDomain, g: Automorphism, p: Point, q: Point, ctl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Relative defect of K(g p, g q) J_g(p) conj(J_g(q)) = K(p, q)."""
    if g.domain != d:
        raise DomainError("automorphism belongs to a different domain")
    base = kernel_to_scale(d, p, q, ctl).value
    moved = kernel_to_scale(d, apply(g, p), apply(g, q), ctl).value
    lhs = moved * jacobian_det(g, p) * jacobian_det(g, q).conjugate()
    return abs(lhs - base) / abs(base)


# --- linear biholomorphisms between two domains ----------------------------


@dataclass(frozen=True, eq=False)
class LinearBiholomorphism:
    source: FBHDomain
    target: FBHDomain
    matrix: np.ndarray

    def __post_init__(self):
        M = np.atleast_2d(np.asarray(self.matrix, dtype=complex)).copy()
        N = self.source.dim
        if M.shape != (N, N):
            raise DomainError(f"matrix must be {N}x{N}, got {M.shape}")
        if self.target.dim != N:
            raise DomainError("source and target must be equidimensional")
        M.flags.writeable = False
        object.__setattr__(self, "matrix", M)

    def __call__(self, p: Point) -> Point:
        check_point(self.source, p)
        return Point.from_vector(self.matrix @ p.as_vector(), self.target.n)


def rescaling_biholomorphism(source: FBHDomain, target: FBHDomain) -> LinearBiholomorphism:
    """(z, w) -> (sqrt(mu / mu') z, w)."""
    if (source.n, source.m) != (target.n, target.m):
        raise DomainError("rescaling needs matching (n, m)")
    diag = np.concatenate([np.full(source.n, math.sqrt(source.mu / target.mu)), np.ones(source.m)])
    return LinearBiholomorphism(source, target, np.diag(diag))


@dataclass(frozen=True, eq=False)
class Decomposition:
    accepted: bool
    U: np.ndarray | None = None
    B: np.ndarray | None = None
    violated: str | None = None
    reason: str | None = None


_REASONS = {
    "D": "D ≠ 0",
    "C": "C ≠ 0",
    "B": "B not unitary",
    "A": "A not sqrt(mu/mu')·unitary",
}


def decompose_linear_biholomorphism(L: LinearBiholomorphism, tol: float = config.DECOMPOSE_TOL) -> Decomposition:
    """Split L = (A C; D B) and test the normal form A = sqrt(mu/mu') U, C = D = 0, B unitary.

    Conditions are tested in the order D, C, B, A; the first failure is reported.
    """
    src, tgt = L.source, L.target
    if (src.n, src.m) != (tgt.n, tgt.m):
        raise DomainError("source and target must have the same (n, m)")
    n = src.n
    M = L.matrix
    A, C, D, B = M[:n, :n], M[:n, n:], M[n:, :n], M[n:, n:]
    scale = math.sqrt(tgt.mu / src.mu)
    checks = (
        ("D", np.linalg.norm(D)),
        ("C", np.linalg.norm(C)),
        ("B", _unitary_defect(B)),
        ("A", _unitary_defect(scale * A)),
    )
    for key, defect in checks:
        if defect > tol:
            return Decomposition(False, violated=key, reason=_REASONS[key])
    return Decomposition(True, U=scale * A, B=B.copy())


def as_linear_biholomorphism(g: Automorphism) -> LinearBiholomorphism:
    return LinearBiholomorphism(g.domain, g.domain, g.matrix())
