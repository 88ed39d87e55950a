"""First-principles integration over D_{n,m}(mu), independent of the kernel series.

Monomial norms reduce to one-dimensional radial integrals:

* in polar coordinates each |w_j|^2 = r_j contributes pi dr_j, so the w-ball
  integral is pi^m times a Dirichlet integral over a simplex, which is peeled
  one coordinate at a time into Beta integrals on [0, 1];
* the remaining z-integral factorises into integrals of r^k exp(-c r) over
  [0, inf).

Both families are evaluated with Gauss rules (Legendre on [0, 1], Laguerre on
[0, inf)); for the polynomial integrands that occur they are exact once
``quad_points`` exceeds half the degree.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import config
from .domain import DomainError, FBHDomain, Point, check_point, defining_function, sample_shards
from .kernel import DEFAULT_CONTROL, SeriesControl, kernel_scalar_batch


@dataclass(frozen=True)
class MonomialFunction:
    """coeff * z^beta * w^alpha."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    coeff: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        if any(a < 0 for a in self.alpha + self.beta):
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def __call__(self, z: np.ndarray, w: np.ndarray) -> np.ndarray:
        z = np.atleast_2d(z)
        w = np.atleast_2d(w)
        return self.coeff * np.prod(z ** np.array(self.beta), axis=-1) * np.prod(w ** np.array(self.alpha), axis=-1)


Polynomial = Sequence[MonomialFunction]


def evaluate(f: Polynomial, z, w) -> np.ndarray:
    return sum(term(z, w) for term in f)


def _check_shape(d: FBHDomain, f: Polynomial) -> None:
    for term in f:
        if len(term.alpha) != d.m or len(term.beta) != d.n:
            raise DomainError("monomial exponents do not match the domain dimensions")


@lru_cache(maxsize=None)
def _legendre01(npts: int):
    x, wts = np.polynomial.legendre.leggauss(npts)
    return 0.5 * (x + 1), 0.5 * wts


@lru_cache(maxsize=None)
def _laguerre(npts: int):
    return np.polynomial.laguerre.laggauss(npts)


def _beta_integral(a: int, b: int, npts: int) -> float:
    # integral_0^1 x^a (1 - x)^b dx
    x, wts = _legendre01(npts)
    return float(np.sum(wts * x**a * (1 - x) ** b))


def _gamma_integral(k: float, c: float, npts: int) -> float:
    # integral_0^inf r^k exp(-c r) dr
    u, wts = _laguerre(npts)
    return float(np.sum(wts * u**k)) / c ** (k + 1)


def _simplex_integral(alpha: Sequence[int], npts: int) -> float:
    """integral of prod r_j^alpha_j over {r_j >= 0, sum r_j < 1}.

    Peels off the first coordinate: the inner integral over sum r_j < 1 - r_1
    scales as (1 - r_1)^(|alpha'| + m - 1).
    """
    if len(alpha) == 0:
        return 1.0
    rest = alpha[1:]
    inner = _simplex_integral(rest, npts)
    return inner * _beta_integral(alpha[0], sum(rest) + len(rest), npts)


def monomial_norm(
    d: FBHDomain, alpha: Sequence[int], beta: Sequence[int], quad_points: int = config.QUAD_POINTS
) -> float:
    """||z^beta w^alpha||^2 in the unweighted Bergman space of D."""
    if quad_points < 16:
        raise ValueError("quad_points must be at least 16")
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != d.m or len(beta) != d.n:
        raise DomainError("alpha must have length m and beta length n")
    # w over the ball of radius^2 R2 = exp(-mu |z|^2): pi^m * simplex * R2^(|alpha| + m)
    w_part = math.pi**d.m * _simplex_integral(alpha, quad_points)
    c = d.mu * (sum(alpha) + d.m)
    z_part = math.prod(math.pi * _gamma_integral(b, c, quad_points) for b in beta)
    out = w_part * z_part
    if not (math.isfinite(out) and out > 0):
        raise ArithmeticError("quadrature did not produce a finite positive norm")
    return out


def _angular_integral(k: int, npts: int) -> complex:
    # trapezoid rule for integral_0^{2 pi} exp(i k theta) d theta
    theta = 2 * math.pi * np.arange(npts) / npts
    return complex(np.sum(np.exp(1j * k * theta)) * 2 * math.pi / npts)


def inner_product_monomials(
    d: FBHDomain,
    first: tuple[Sequence[int], Sequence[int]],
    second: tuple[Sequence[int], Sequence[int]],
    quad_points: int = config.QUAD_POINTS,
) -> complex:
    """<z^b w^a, z^b' w^a'> by polar coordinates in every variable."""
    (a1, b1), (a2, b2) = first, second
    a1, a2, b1, b2 = map(tuple, (a1, a2, b1, b2))
    if len(a1) != d.m or len(a2) != d.m or len(b1) != d.n or len(b2) != d.n:
        raise DomainError("exponent lengths do not match the domain")
    npts = max(quad_points, 2 * (sum(a1) + sum(a2) + sum(b1) + sum(b2)) + 1)
    angular = 1 + 0j
    for x, y in zip(a1 + b1, a2 + b2):
        angular *= _angular_integral(x - y, npts) / (2 * math.pi)
    # radial part with half-integer exponents r^((x+y)/2); the angular
    # normalisation above is folded back in through the pi factors
    half_a = [(x + y) / 2 for x, y in zip(a1, a2)]
    half_b = [(x + y) / 2 for x, y in zip(b1, b2)]
    w_part = math.pi**d.m * _simplex_integral_real(half_a, quad_points)
    c = d.mu * (sum(half_a) + d.m)
    z_part = math.prod(math.pi * _gamma_integral(b, c, quad_points) for b in half_b)
    return angular * w_part * z_part


def _simplex_integral_real(alpha: Sequence[float], npts: int) -> float:
    if len(alpha) == 0:
        return 1.0
    rest = alpha[1:]
    x, wts = _legendre01(npts)
    inner = _simplex_integral_real(rest, npts)
    return inner * float(np.sum(wts * x ** alpha[0] * (1 - x) ** (sum(rest) + len(rest))))


def orthogonality_residual(
    d: FBHDomain,
    first: tuple[Sequence[int], Sequence[int]],
    second: tuple[Sequence[int], Sequence[int]],
    quad_points: int = config.QUAD_POINTS,
) -> float:
    """|<z^b w^a, z^b' w^a'>| for distinct index pairs (alpha, beta)."""
    if tuple(map(tuple, first)) == tuple(map(tuple, second)):
        raise ValueError("index pairs must differ")
    return abs(inner_product_monomials(d, first, second, quad_points))


# --- Monte Carlo ------------------------------------------------------------


@dataclass(frozen=True)
class MCEstimate:
    estimate: complex
    standard_error: float
    samples: int
    seed: int


def _sharded(d: FBHDomain, samples: int, seed: int, shards: int, body):
    """Apply ``body`` to each shard of the sample and concatenate the
    per-point contributions in shard order."""
    parts = sample_shards(d, seed, samples, shards)
    workers = min(len(parts), config_threads())
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            return np.concatenate(list(ex.map(body, parts)))
    return np.concatenate([body(p) for p in parts])


def config_threads() -> int:
    try:
        return max(1, int(os.environ.get("FBH_SUITE_THREADS", "1")))
    except ValueError:
        return 1


def _summarise(contrib: np.ndarray, samples: int, seed: int) -> MCEstimate:
    # contributions are per-point weight * integrand, scaled so that their sum is the estimate
    n = contrib.size
    scaled = contrib * n
    est = complex(np.sum(contrib))
    var = np.var(scaled.real, ddof=1) + np.var(scaled.imag, ddof=1)
    return MCEstimate(est, float(math.sqrt(var / n)), samples, seed)


def inner_product_mc(
    d: FBHDomain, f: Polynomial, g: Polynomial, samples: int = config.MC_SAMPLES, seed: int = 0, shards: int = 1
) -> MCEstimate:
    """Monte Carlo estimate of integral_D f conj(g) dV."""
    if samples < 100:
        raise ValueError("samples must be at least 100")
    _check_shape(d, f)
    _check_shape(d, g)

    def body(s):
        return s.weights * evaluate(f, s.z, s.w) * np.conj(evaluate(g, s.z, s.w))

    return _summarise(_sharded(d, samples, seed, shards, body), samples, seed)


@dataclass(frozen=True)
class ReproducingResult:
    residual: float
    standard_error: float
    estimate: complex
    exact: complex


def reproducing_residual(
    d: FBHDomain,
    f: Polynomial,
    q: Point,
    samples: int = config.MC_SAMPLES,
    seed: int = 0,
    ctl: SeriesControl = DEFAULT_CONTROL,
    shards: int = 1,
) -> ReproducingResult:
    """|integral_D f(p) K(q, p) dV(p) - f(q)| estimated by Monte Carlo."""
    check_point(d, q)
    if not defining_function(d, q) < 0:
        raise DomainError("q must be an interior point")
    _check_shape(d, f)
    if max((t.degree for t in f), default=0) > config.REPRODUCING_MAX_DEGREE:
        raise ValueError(f"degree above {config.REPRODUCING_MAX_DEGREE} is not supported")

    def body(s):
        a = np.sum(q.z[None, :] * s.z.conj(), axis=1)
        b = np.sum(q.w[None, :] * s.w.conj(), axis=1)
        K, _ = kernel_scalar_batch(d, a, b, ctl)
        return s.weights * evaluate(f, s.z, s.w) * K

    est = _summarise(_sharded(d, samples, seed, shards, body), samples, seed)
    exact = complex(evaluate(f, q.z, q.w)[0])
    return ReproducingResult(abs(est.estimate - exact), est.standard_error, est.estimate, exact)
