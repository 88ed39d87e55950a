"""Random test instances: unitaries, interior and boundary points, group elements."""

from __future__ import annotations

import math

import numpy as np

from .automorphism import Automorphism, compose, identity, rotate_w, rotate_z, translate
from .domain import FBHDomain, Point, boundary_point


def random_unitary(rng: np.random.Generator, k: int) -> np.ndarray:
    """Haar-distributed k x k unitary (QR with the phase of R's diagonal removed)."""
    Z = (rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))) / math.sqrt(2)
    Q, R = np.linalg.qr(Z)
    ph = np.diag(R) / np.abs(np.diag(R))
    return Q * ph


def random_cvec(rng: np.random.Generator, k: int, scale: float = 1.0) -> np.ndarray:
    return scale * (rng.standard_normal(k) + 1j * rng.standard_normal(k)) / math.sqrt(2)


def random_unit(rng: np.random.Generator, k: int) -> np.ndarray:
    v = random_cvec(rng, k)
    return v / np.linalg.norm(v)


def random_interior(
    rng: np.random.Generator, d: FBHDomain, z_scale: float = 0.7, max_frac: float = 0.9
) -> Point:
    """Interior point with |w| at most ``max_frac`` of the fibre radius."""
    z = random_cvec(rng, d.n, z_scale)
    radius = math.exp(-0.5 * d.mu * float(np.vdot(z, z).real))
    return Point(z, radius * max_frac * rng.random() * random_unit(rng, d.m))


def random_boundary(rng: np.random.Generator, d: FBHDomain, z_scale: float = 1.0) -> Point:
    return boundary_point(d, random_cvec(rng, d.n, z_scale), random_unit(rng, d.m))


def random_generator(rng: np.random.Generator, d: FBHDomain, v_scale: float = 0.8) -> Automorphism:
    kind = rng.integers(3)
    if kind == 0:
        return rotate_z(d, random_unitary(rng, d.n))
    if kind == 1:
        return rotate_w(d, random_unitary(rng, d.m))
    return translate(d, random_cvec(rng, d.n, v_scale))


def random_automorphism(rng: np.random.Generator, d: FBHDomain, max_length: int = 3) -> Automorphism:
    """Product of 1..max_length random generators."""
    g = identity(d)
    for _ in range(int(rng.integers(1, max_length + 1))):
        g = compose(random_generator(rng, d), g)
    return g
