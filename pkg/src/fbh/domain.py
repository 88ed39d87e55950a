"""Geometry of the Fock-Bargmann-Hartogs domain

    D_{n,m}(mu) = {(z, w) in C^n x C^m : |w|^2 < exp(-mu |z|^2)}.

The defining function used throughout is rho(z, w) = |w|^2 - exp(-mu |z|^2).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from . import config


class DomainError(ValueError):
    """Raised for inputs outside an operation's domain (bad dimensions,
    points on the wrong side of the boundary, non-unit vectors, ...)."""


@dataclass(frozen=True)
class FBHDomain:
    n: int
    m: int
    mu: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"m must be a positive integer, got {self.m!r}")
        if not (self.mu > 0 and math.isfinite(self.mu)):
            raise DomainError(f"mu must be positive and finite, got {self.mu!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "mu", float(self.mu))

    @property
    def dim(self) -> int:
        return self.n + self.m


def _as_cvec(x) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(x, dtype=complex))
    if arr.ndim != 1:
        raise DomainError(f"expected a vector, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class Point:
    """A point (z, w) of C^n x C^m. Arrays are copied and made read-only."""

    z: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        z = _as_cvec(self.z).copy()
        w = _as_cvec(self.w).copy()
        z.flags.writeable = False
        w.flags.writeable = False
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_vector(cls, vec, n: int) -> "Point":
        vec = _as_cvec(vec)
        return cls(vec[:n], vec[n:])

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.z, self.w])

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return np.array_equal(self.z, other.z) and np.array_equal(self.w, other.w)

    def __repr__(self):
        return f"Point(z={self.z.tolist()}, w={self.w.tolist()})"


def check_point(d: FBHDomain, p: Point) -> None:
    if p.z.shape != (d.n,) or p.w.shape != (d.m,):
        raise DomainError(
            f"point has dimensions ({p.z.size}, {p.w.size}), domain expects ({d.n}, {d.m})"
        )


class Region(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    EXTERIOR = "Exterior"


@dataclass(frozen=True)
class PointClass:
    tag: Region
    rho: float


def _sqnorm(v: np.ndarray) -> float:
    return float(np.vdot(v, v).real)


def defining_function(d: FBHDomain, p: Point) -> float:
    check_point(d, p)
    return _sqnorm(p.w) - math.exp(-d.mu * _sqnorm(p.z))


def classify_point(d: FBHDomain, p: Point, tol: float = config.BOUNDARY_TOL) -> PointClass:
    if tol < 0:
        raise DomainError("tol must be nonnegative")
    rho = defining_function(d, p)
    if rho < -tol:
        tag = Region.INTERIOR
    elif abs(rho) <= tol:
        tag = Region.BOUNDARY
    else:
        tag = Region.EXTERIOR
    return PointClass(tag, rho)


def is_interior(d: FBHDomain, p: Point) -> bool:
    return defining_function(d, p) < 0


def boundary_point(d: FBHDomain, z, u) -> Point:
    """Return the boundary point over ``z`` in the unit direction ``u``."""
    z = _as_cvec(z)
    u = _as_cvec(u)
    if z.shape != (d.n,) or u.shape != (d.m,):
        raise DomainError("dimension mismatch")
    if abs(np.linalg.norm(u) - 1.0) > config.UNIT_VECTOR_TOL:
        raise DomainError(f"u must be a unit vector, |u| = {np.linalg.norm(u)!r}")
    return Point(z, math.exp(-0.5 * d.mu * _sqnorm(z)) * u)


def complex_hessian(d: FBHDomain, p: Point) -> np.ndarray:
    """Hermitian matrix H with Levi form L(v) = v^H H v for the defining function."""
    check_point(d, p)
    z = p.z
    e = math.exp(-d.mu * _sqnorm(z))
    H = np.zeros((d.dim, d.dim), dtype=complex)
    H[: d.n, : d.n] = d.mu * e * (np.eye(d.n) - d.mu * np.outer(z, z.conj()))
    H[d.n :, d.n :] = np.eye(d.m)
    return H


@dataclass(frozen=True)
class LeviForm:
    matrix: np.ndarray
    eigenvalues: np.ndarray
    positive_definite: bool


def levi_form_restricted(
    d: FBHDomain, p: Point, tol: float = config.BOUNDARY_TOL, eig_tol: float = config.LEVI_EIG_TOL
) -> LeviForm:
    """Levi form of the defining function at a boundary point, written in an
    orthonormal basis of the complex tangent space {v : d rho(p) v = 0}."""
    cls = classify_point(d, p, tol)
    if cls.tag is not Region.BOUNDARY:
        raise DomainError(f"point is not on the boundary (rho = {cls.rho:.3e})")
    # holomorphic gradient is (mu e z-bar, w-bar); tangent vectors are orthogonal to its conjugate
    assert np.any(p.w != 0), "w-gradient vanishes on the boundary"
    g = np.concatenate([d.mu * math.exp(-d.mu * _sqnorm(p.z)) * p.z, p.w])
    E = null_space(g.conj()[None, :])
    M = E.conj().T @ complex_hessian(d, p) @ E
    M = 0.5 * (M + M.conj().T)
    eig = np.linalg.eigvalsh(M)
    return LeviForm(M, eig, bool(np.all(eig > eig_tol)))


def volume_closed_form(d: FBHDomain) -> float:
    # fibre ball volume pi^m e^{-m mu |z|^2} / m!, then a Gaussian integral over C^n
    return math.pi ** (d.n + d.m) / (math.factorial(d.m) * (d.m * d.mu) ** d.n)


@dataclass(frozen=True, eq=False)
class InteriorSample:
    """Importance sample of D: ``sum(weights * f(z, w))`` estimates the
    Lebesgue integral of f over D."""

    z: np.ndarray  # (count, n)
    w: np.ndarray  # (count, m)
    weights: np.ndarray  # (count,)

    def __len__(self):
        return self.weights.size

    def points(self) -> list[Point]:
        return [Point(zi, wi) for zi, wi in zip(self.z, self.w)]


def _draw(d: FBHDomain, rng: np.random.Generator, count: int):
    # z has density (m mu / pi)^n exp(-m mu |z|^2): each real coordinate N(0, 1/(2 m mu))
    sigma = math.sqrt(0.5 / (d.m * d.mu))
    z = sigma * (rng.standard_normal((count, d.n)) + 1j * rng.standard_normal((count, d.n)))
    g = rng.standard_normal((count, d.m)) + 1j * rng.standard_normal((count, d.m))
    u = g / np.linalg.norm(g, axis=1, keepdims=True)
    zsq = np.sum(np.abs(z) ** 2, axis=1)
    radius = np.exp(-0.5 * d.mu * zsq)
    frac = rng.random(count) ** (1.0 / (2 * d.m))
    w = (radius * frac)[:, None] * u
    rho = np.sum(np.abs(w) ** 2, axis=1) - np.exp(-d.mu * zsq)
    bad = rho >= 0
    if np.any(bad):
        # fraction rounded to 1; pull those points inward
        w[bad] *= 0.5
    return z, w


def sample_shards(d: FBHDomain, seed: int, count: int, shards: int) -> list[InteriorSample]:
    """Split a sample of ``count`` points into ``shards`` independent streams.

    Shard i draws from the i-th child of ``SeedSequence(seed)``. Weights are
    vol(D) / count, so the concatenated shards form one unbiased sample.
    """
    if count < 1:
        raise DomainError("count must be at least 1")
    if shards < 1:
        raise DomainError("shards must be at least 1")
    vol = volume_closed_form(d)
    if shards == 1:
        streams = [(np.random.default_rng(seed), count)]
    else:
        sizes = [count // shards + (1 if i < count % shards else 0) for i in range(shards)]
        children = np.random.SeedSequence(seed).spawn(shards)
        streams = [(np.random.default_rng(c), size) for c, size in zip(children, sizes) if size]
    out = []
    for rng, size in streams:
        z, w = _draw(d, rng, size)
        out.append(InteriorSample(z, w, np.full(size, vol / count)))
    return out


def sample_interior(d: FBHDomain, seed: int, count: int, shards: int = 1) -> InteriorSample:
    """Importance sample of ``count`` interior points.

    With the Gaussian z-density matched to the fibre volume, every weight is
    vol(D) / count. The result depends only on (seed, count, shards).
    """
    parts = sample_shards(d, seed, count, shards)
    if len(parts) == 1:
        return parts[0]
    return InteriorSample(
        np.concatenate([p.z for p in parts]),
        np.concatenate([p.w for p in parts]),
        np.concatenate([p.weights for p in parts]),
    )


def mc_volume(d: FBHDomain, seed: int, count: int) -> tuple[float, float]:
    """Volume estimate and its standard error from :func:`sample_interior`."""
    s = sample_interior(d, seed, count)
    contrib = s.weights * count
    se = float(np.std(contrib, ddof=1) / math.sqrt(count)) if count > 1 else float("inf")
    return float(np.sum(s.weights)), se
