"""Bergman kernel of D_{n,m}(mu).

The kernel depends on the two points only through the scalars
a = <z, t> and b = <w, s>:

    K = m! mu^n / pi^(n+m) * sum_k (m+1)_k (k+m)^n / k! * exp(mu (k+m) a) * b^k

The series converges iff q = |b| exp(mu Re a) < 1 and is summed with a
rigorous geometric tail bound.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import config
from .domain import DomainError, FBHDomain, Point, check_point, defining_function


class DivergentSeriesError(ArithmeticError):
    """Convergence ratio |b| exp(mu Re a) is >= 1."""


class SeriesBudgetError(ArithmeticError):
    """The tail tolerance was not met within ``max_terms`` terms."""


@dataclass(frozen=True)
class SeriesControl:
    tol: float = config.SERIES_TOL
    max_terms: int = config.SERIES_MAX_TERMS

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class KernelValue:
    value: complex
    tail_bound: float
    terms_used: int


def pochhammer(a: float, k: int) -> float:
    """Rising factorial a (a+1) ... (a+k-1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def inner(x, y) -> complex:
    """Hermitian product <x, y> = sum x_j conj(y_j)."""
    return complex(np.vdot(y, x))


def fock_bargmann_kernel(n: int, nu: float, z, t) -> complex:
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    t = np.atleast_1d(np.asarray(t, dtype=complex))
    if z.shape != (n,) or t.shape != (n,):
        raise DomainError("vectors must have length n")
    return (nu / math.pi) ** n * cmath.exp(nu * inner(z, t))


def prefactor(d: FBHDomain) -> float:
    return math.factorial(d.m) * d.mu**d.n / math.pi ** (d.n + d.m)


def convergence_ratio(d: FBHDomain, a: complex, b: complex) -> float:
    return abs(b) * math.exp(d.mu * complex(a).real)


def _ratio_coeff(d: FBHDomain, k: int) -> float:
    # |t_{k+1} / t_k| / q
    return (d.m + 1 + k) / (k + 1) * ((k + 1 + d.m) / (k + d.m)) ** d.n


def kernel_scalar(
    d: FBHDomain, a: complex, b: complex, ctl: SeriesControl = DEFAULT_CONTROL
) -> KernelValue:
    """Sum the reduced series in (a, b) to absolute tail tolerance ``ctl.tol``."""
    a = complex(a)
    b = complex(b)
    q = convergence_ratio(d, a, b)
    if not q < 1:
        raise DivergentSeriesError(f"convergence ratio {q:.6g} >= 1")
    step = cmath.exp(d.mu * a) * b
    term = d.m**d.n * cmath.exp(d.mu * d.m * a)
    c = prefactor(d)
    total = 0j
    for k in range(ctl.max_terms):
        total += term
        rho = _ratio_coeff(d, k) * q
        if rho < 1:
            tail = c * abs(term) * rho / (1 - rho)
            if tail < ctl.tol:
                return KernelValue(c * total, tail, k + 1)
        term *= _ratio_coeff(d, k) * step
    raise SeriesBudgetError(f"tolerance {ctl.tol:g} not reached in {ctl.max_terms} terms")


def kernel_scalar_batch(
    d: FBHDomain, a, b, ctl: SeriesControl = DEFAULT_CONTROL
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`kernel_scalar`; returns (values, tail_bounds)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    a, b = np.broadcast_arrays(a, b)
    q = np.abs(b) * np.exp(d.mu * a.real)
    if np.any(~(q < 1)):
        raise DivergentSeriesError(f"convergence ratio {q.max():.6g} >= 1")
    step = np.exp(d.mu * a) * b
    term = d.m**d.n * np.exp(d.mu * d.m * a)
    c = prefactor(d)
    total = np.zeros(a.shape, dtype=complex)
    tail = np.full(a.shape, np.inf)
    active = np.ones(a.shape, dtype=bool)
    for k in range(ctl.max_terms):
        total = np.where(active, total + term, total)
        rho = _ratio_coeff(d, k) * q
        with np.errstate(divide="ignore", invalid="ignore"):
            t = np.where(rho < 1, c * np.abs(term) * rho / (1 - rho), np.inf)
        done = active & (t < ctl.tol)
        tail = np.where(done, t, tail)
        active &= ~done
        if not active.any():
            return c * total, tail
        term = term * (_ratio_coeff(d, k) * step)
    raise SeriesBudgetError(f"tolerance {ctl.tol:g} not reached in {ctl.max_terms} terms")


def reduced_scalars(p: Point, q: Point) -> tuple[complex, complex]:
    return inner(p.z, q.z), inner(p.w, q.w)


def kernel(d: FBHDomain, p: Point, q: Point, ctl: SeriesControl = DEFAULT_CONTROL) -> KernelValue:
    """K(p, q) for interior points p, q."""
    for name, pt in (("p", p), ("q", q)):
        if not defining_function(d, pt) < 0:
            raise DomainError(f"{name} is not an interior point")
    a, b = reduced_scalars(p, q)
    return kernel_scalar(d, a, b, ctl)


def kernel_to_scale(
    d: FBHDomain, p: Point, q: Point, ctl: SeriesControl = DEFAULT_CONTROL, scale: float | None = None
) -> KernelValue:
    """K(p, q) with tail bound at most ``ctl.tol * min(1, scale)``.

    The stopping rule of :func:`kernel` is absolute, which is loose for small
    kernel values. ``scale`` defaults to |K(p, q)| itself.
    """
    first = kernel(d, p, q, ctl)
    if scale is None:
        scale = abs(first.value)
    target = ctl.tol * min(1.0, scale)
    if target <= 0 or first.tail_bound <= target:
        return first
    return kernel(d, p, q, SeriesControl(target, ctl.max_terms))


def kernel_batch(d: FBHDomain, z, w, t, s, ctl: SeriesControl = DEFAULT_CONTROL) -> np.ndarray:
    """K((z_i, w_i), (t_i, s_i)) for stacked coordinates, rows broadcast."""
    z, t = np.atleast_2d(z), np.atleast_2d(t)
    w, s = np.atleast_2d(w), np.atleast_2d(s)
    a = np.sum(z * t.conj(), axis=-1)
    b = np.sum(w * s.conj(), axis=-1)
    return kernel_scalar_batch(d, a, b, ctl)[0]


def kernel_extended(
    d: FBHDomain, p: Point, q: Point, ctl: SeriesControl = DEFAULT_CONTROL
) -> KernelValue:
    """K(., q) continued to the set where the series still converges.

    p may lie on or beyond the boundary. When some r puts both (z, r w) and
    (t, s / r) inside D the value is checked against the interior kernel at
    those rescaled points.
    """
    check_point(d, p)
    check_point(d, q)
    if not defining_function(d, q) < 0:
        raise DomainError("q must be an interior point")
    a, b = reduced_scalars(p, q)
    out = kernel_scalar(d, a, b, ctl)
    r = _interior_rescaling(d, p, q)
    if r is not None:
        inside = kernel(d, Point(p.z, r * p.w), Point(q.z, q.w / r), ctl)
        slack = 2 * (out.tail_bound + inside.tail_bound) + 1e-13 * abs(out.value)
        assert abs(inside.value - out.value) <= slack, "rescaling identity violated"
    return out


def _interior_rescaling(d: FBHDomain, p: Point, q: Point) -> float | None:
    wn = float(np.linalg.norm(p.w))
    sn = float(np.linalg.norm(q.w))
    if wn == 0 or sn == 0:
        return None
    lo = sn * math.exp(0.5 * d.mu * float(np.vdot(q.z, q.z).real))
    hi = math.exp(-0.5 * d.mu * float(np.vdot(p.z, p.z).real)) / wn
    if not lo < hi:
        return None
    return math.sqrt(lo * hi)


BaseKernel = Callable[[int, np.ndarray, np.ndarray], complex]


def ligocka_assemble(
    base_kernel: BaseKernel,
    m: int,
    p: Point,
    q: Point,
    ctl: SeriesControl = DEFAULT_CONTROL,
    stable_terms: int = 3,
) -> KernelValue:
    """Hartogs-domain kernel from the weighted kernels of its base.

    ``base_kernel(k, z, t)`` must return the reproducing kernel of the base
    weighted by p^(k+m). Nothing is known about its growth in k, so the tail
    bound is geometric in the observed term ratio and is accepted only after
    the ratio has been below 1 and non-increasing for ``stable_terms`` terms.
    """
    b = inner(p.w, q.w)
    c = math.factorial(m) / math.pi**m
    total = 0j
    coeff = 1.0  # (m+1)_k / k!
    bk = 1 + 0j
    prev = None
    prev_ratio = math.inf
    stable = 0
    for k in range(ctl.max_terms):
        term = coeff * base_kernel(k, p.z, q.z) * bk
        total += term
        if b == 0:
            return KernelValue(c * total, 0.0, k + 1)
        if prev is not None and prev != 0:
            ratio = abs(term) / abs(prev)
            stable = stable + 1 if ratio < 1 and ratio <= prev_ratio * (1 + 1e-12) else 0
            prev_ratio = ratio
            if stable >= stable_terms:
                tail = c * abs(term) * ratio / (1 - ratio)
                if tail < ctl.tol:
                    return KernelValue(c * total, tail, k + 1)
        prev = term
        coeff *= (m + 1 + k) / (k + 1)
        bk *= b
    raise SeriesBudgetError(f"tolerance {ctl.tol:g} not reached in {ctl.max_terms} terms")


def fock_bargmann_base(d: FBHDomain) -> BaseKernel:
    """Weighted kernels of C^n with weight exp(-mu (k+m) |z|^2)."""

    def base(k, z, t):
        return fock_bargmann_kernel(d.n, d.mu * (k + d.m), z, t)

    return base


def _multi(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(x) for x in alpha)
    if any(x < 0 for x in alpha):
        raise ValueError("multi-index entries must be nonnegative")
    return alpha


def multi_factorial(alpha: Sequence[int]) -> int:
    return math.prod(math.factorial(x) for x in alpha)


def kernel_monomial_coefficient(d: FBHDomain, alpha: Sequence[int], beta: Sequence[int]) -> float:
    """Coefficient of z^beta conj(t)^beta w^alpha conj(s)^alpha in K."""
    alpha, beta = _multi(alpha), _multi(beta)
    if len(alpha) != d.m or len(beta) != d.n:
        raise DomainError("alpha must have length m and beta length n")
    ka, kb = sum(alpha), sum(beta)
    w_part = pochhammer(d.m + 1, ka) * (ka + d.m) ** d.n / multi_factorial(alpha)
    z_part = (d.mu * (ka + d.m)) ** kb / multi_factorial(beta)
    return prefactor(d) * w_part * z_part


# --- log-Hessian -----------------------------------------------------------


@dataclass(frozen=True)
class ScalarDerivatives:
    K: complex
    Ka: complex
    Kb: complex
    Kaa: complex
    Kab: complex
    Kbb: complex
    terms_used: int


def kernel_scalar_derivatives(
    d: FBHDomain, a: complex, b: complex, ctl: SeriesControl = DEFAULT_CONTROL
) -> ScalarDerivatives:
    """K and its first and second partials in (a, b), summed term by term.

    With g_k = coefficient * exp(mu (k+m) a), the series are
    sum w(k) g_k b^(k-s) for polynomial weights w and shifts s in {0, 1, 2}.
    Each weight ratio w(k+1)/w(k) decreases once k >= s, so the same
    geometric tail argument applies to every series.
    """
    a = complex(a)
    b = complex(b)
    q = convergence_ratio(d, a, b)
    if not q < 1:
        raise DivergentSeriesError(f"convergence ratio {q:.6g} >= 1")
    mu, m = d.mu, d.m
    weights = (
        (lambda k: 1.0, 0),
        (lambda k: mu * (k + m), 0),
        (lambda k: float(k), 1),
        (lambda k: (mu * (k + m)) ** 2, 0),
        (lambda k: mu * (k + m) * k, 1),
        (lambda k: float(k * (k - 1)), 2),
    )
    e = cmath.exp(mu * a)
    g = m**d.n * cmath.exp(mu * m * a)
    bpow = {0: 1 + 0j, -1: 0j, -2: 0j}  # b^k, b^(k-1), b^(k-2)
    c = prefactor(d)
    sums = [0j] * len(weights)
    for k in range(ctl.max_terms):
        cur = {0: bpow[0], 1: bpow[-1], 2: bpow[-2]}
        done = k >= 2
        rc = _ratio_coeff(d, k)
        for i, (wf, s) in enumerate(weights):
            wk = wf(k)
            term = wk * g * cur[s]
            sums[i] += term
            if k >= s and wk > 0:
                rho = rc * q * wf(k + 1) / wk
                if not (rho < 1 and c * abs(term) * rho / (1 - rho) < ctl.tol):
                    done = False
            elif k < s:
                done = False
        if done:
            K, Ka, Kb, Kaa, Kab, Kbb = (c * x for x in sums)
            return ScalarDerivatives(K, Ka, Kb, Kaa, Kab, Kbb, k + 1)
        g *= rc * e
        bpow = {0: bpow[0] * b, -1: bpow[0], -2: bpow[-1]}
    raise SeriesBudgetError(f"tolerance {ctl.tol:g} not reached in {ctl.max_terms} terms")


def t_matrix(
    d: FBHDomain, p: Point, q: Point, ctl: SeriesControl = DEFAULT_CONTROL
) -> np.ndarray:
    """Matrix of d^2 log K / d conj(q_j) d p_k, rows indexed by q, columns by p."""
    check_point(d, p)
    check_point(d, q)
    a, b = reduced_scalars(p, q)
    s = kernel_scalar_derivatives(d, a, b, ctl)
    if s.K == 0:
        raise ArithmeticError("kernel vanishes; log K is undefined")
    La, Lb = s.Ka / s.K, s.Kb / s.K
    Laa = s.Kaa / s.K - La * La
    Lab = s.Kab / s.K - La * Lb
    Lbb = s.Kbb / s.K - Lb * Lb
    P = p.as_vector()
    Qc = q.as_vector().conj()
    n = d.n
    # da/dconj(q_j) = z_j, db/dconj(q_j) = w_j; da/dp_k = conj(t_k), db/dp_k = conj(s_k)
    T = np.empty((d.dim, d.dim), dtype=complex)
    T[:n, :n] = Laa * np.outer(P[:n], Qc[:n]) + La * np.eye(n)
    T[:n, n:] = Lab * np.outer(P[:n], Qc[n:])
    T[n:, :n] = Lab * np.outer(P[n:], Qc[:n])
    T[n:, n:] = Lbb * np.outer(P[n:], Qc[n:]) + Lb * np.eye(d.m)
    return T


def t_matrix_fd(
    d: FBHDomain,
    p: Point,
    q: Point,
    ctl: SeriesControl = DEFAULT_CONTROL,
    fd_step: float = config.FD_STEP,
    richardson: bool = True,
) -> np.ndarray:
    """Central-difference estimate of :func:`t_matrix`.

    log K is holomorphic in p and antiholomorphic in q, so both derivatives
    can be taken along real coordinate directions. With ``richardson`` the
    steps h and 2h are combined to cancel the O(h^2) error term; h stays the
    finest step so roundoff is no worse than plain central differences.
    """
    check_point(d, p)
    check_point(d, q)
    fine = SeriesControl(ctl.tol * config.FD_SERIES_TOL_FACTOR, ctl.max_terms)
    P, Q = p.as_vector(), q.as_vector()
    a0, b0 = reduced_scalars(p, q)
    K0 = kernel_scalar(d, a0, b0, fine).value

    def logk(PP, QQ):
        a = inner(PP[: d.n], QQ[: d.n])
        b = inner(PP[d.n :], QQ[d.n :])
        return cmath.log(kernel_scalar(d, a, b, fine).value / K0)

    def central(h):
        N = d.dim
        T = np.empty((N, N), dtype=complex)
        eye = np.eye(N)
        for j in range(N):
            for k in range(N):
                ep, eq = h * eye[k], h * eye[j]
                T[j, k] = (
                    logk(P + ep, Q + eq) - logk(P + ep, Q - eq) - logk(P - ep, Q + eq) + logk(P - ep, Q - eq)
                ) / (4 * h * h)
        return T

    if not richardson:
        return central(fd_step)
    return (4 * central(fd_step) - central(2 * fd_step)) / 3
