"""Independent numerical checks of the spectrum.

None of the routines here touch the Gamma closed forms.  Each one integrates
the transform directly, either by quadrature on the maximal torus against the
KAK density or by seeded Monte Carlo.  On complex projective space the
eigenfunctions are explicit polynomials and both approaches apply.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Callable

import numpy as np
from scipy.special import eval_jacobi, roots_jacobi, roots_legendre

from .errors import ConventionMismatch, DomainError, ExcessiveRejection, NotASection
from .groupops import (
    DEFAULT_PHASE_SIGN,
    delta_density,
    chi_L,
    haar_sample,
    kernel_from_det,
    kp_leading,
    pi_action,
    random_l,
    section_smallest,
    theta,
)
from .rootdata import CaseParams
from .spectrum import eta_initial

__all__ = [
    "OracleResult",
    "EquivarianceResult",
    "BATCH",
    "torus_integral",
    "torus_eta_initial",
    "mc_integrate",
    "mc_transform_at",
    "check_section",
    "projective_eigen_oracle",
    "equivariance_check",
]

BATCH = 2**14
MAX_REJECT_RATE = 1e-3


@dataclass
class OracleResult:
    estimate: complex
    std_error: float | None = None
    error_bound: float | None = None
    n_samples: int = 0
    seed: int | None = None
    rejected: int = 0

    @property
    def sigma(self) -> float:
        return self.std_error if self.std_error is not None else float(self.error_bound or 0.0)


def _check_domain(case: CaseParams, lam: float) -> None:
    if complex(lam).imag != 0:
        raise DomainError("oracles take real lambda only")
    if float(np.real(lam)) < case.rho - case.k - 1e-12:
        raise DomainError(f"lambda = {lam} below rho - k = {case.rho - case.k}")


# ---------------------------------------------------------------- torus


def _chamber_nodes(p: int, n: int):
    """Nodes/weights on the chamber pi/2 >= t_1 >= ... >= t_p >= 0.

    The chamber is the image of the unit cube under t_1 = (pi/2) u_1,
    t_{j+1} = t_j u_{j+1}; Gauss-Legendre is applied on the cube.
    """
    x, w = roots_legendre(n)
    x = 0.5 * (x + 1.0)
    w = 0.5 * w
    grids = np.meshgrid(*([x] * p), indexing="ij")
    wgrid = reduce(np.multiply.outer, [w] * p) if p > 1 else w
    u = np.stack([g.ravel() for g in grids], axis=-1)
    wt = np.asarray(wgrid).ravel()
    t = np.empty_like(u)
    t[:, 0] = 0.5 * np.pi * u[:, 0]
    jac = np.full(len(u), 0.5 * np.pi)
    for j in range(1, p):
        t[:, j] = t[:, j - 1] * u[:, j]
        jac = jac * t[:, j - 1]
    return t, wt * jac


def torus_integral(case: CaseParams, exponent: float, n: int) -> float:
    """``int prod_j |cos t_j|^exponent delta(t) dt`` over one Weyl chamber."""
    t, w = _chamber_nodes(case.p, n)
    vals = np.prod(np.abs(np.cos(t)) ** exponent, axis=-1) * delta_density(case, t)
    return float(np.sum(w * vals))


def torus_eta_initial(case: CaseParams, lam: float, n_points: int = 100) -> OracleResult:
    """Torus-quadrature estimate of the eigenvalue on the smallest K-type.

    ``n_points`` nodes per coordinate; the error bound is the change between
    ``n_points // 2`` and ``n_points`` nodes.
    """
    _check_domain(case, lam)
    shift = case.k - case.rho

    def ratio(n):
        return torus_integral(case, lam + shift, n) / torus_integral(case, 0.0, n)

    fine = ratio(n_points)
    coarse = ratio(max(n_points // 2, 2))
    return OracleResult(fine, error_bound=abs(fine - coarse), n_samples=n_points**case.p)


# ---------------------------------------------------------------- Monte Carlo


def _merge(a, b):
    """Chan-style merge of (count, mean, M2) for complex vectors."""
    na, ma, sa = a
    nb, mb, sb = b
    n = na + nb
    delta = mb - ma
    mean = ma + delta * (nb / n)
    m2 = sa + sb + np.abs(delta) ** 2 * (na * nb / n)
    return n, mean, m2


def _tree_reduce(stats):
    while len(stats) > 1:
        nxt = [_merge(stats[i], stats[i + 1]) for i in range(0, len(stats) - 1, 2)]
        if len(stats) % 2:
            nxt.append(stats[-1])
        stats = nxt
    return stats[0]


def mc_integrate(integrand: Callable, sampler: Callable, n_samples: int, seed: int, batch: int = BATCH):
    """Mean and standard error of ``integrand(sampler(rng, size))``.

    One child seed per batch, batch statistics merged along a fixed pairwise
    tree, so the result only depends on ``seed`` and ``n_samples``.  The
    integrand returns shape ``(size,)`` or ``(size, m)``; non-finite values
    are rejected and counted.
    """
    n_batches = -(-n_samples // batch)
    children = np.random.SeedSequence(seed).spawn(n_batches)
    stats = []
    rejected = 0
    for i, child in enumerate(children):
        size = min(batch, n_samples - i * batch)
        rng = np.random.default_rng(child)
        vals = np.asarray(integrand(sampler(rng, size)))
        vals = vals.reshape(size, -1)
        ok = np.all(np.isfinite(vals), axis=1)
        rejected += int(size - ok.sum())
        vals = vals[ok]
        m = vals.mean(axis=0)
        stats.append((len(vals), m, np.sum(np.abs(vals - m) ** 2, axis=0)))
    n, mean, m2 = _tree_reduce(stats)
    if rejected > MAX_REJECT_RATE * n_samples:
        raise ExcessiveRejection(f"{rejected} of {n_samples} samples rejected")
    std = np.sqrt(m2 / (n - 1) / n)
    return mean, std, n, rejected


def mc_transform_at(
    case: CaseParams,
    lam: float,
    f: Callable,
    k,
    n_samples: int,
    seed: int,
    phase_sign: int = DEFAULT_PHASE_SIGN,
) -> OracleResult:
    """Haar Monte Carlo estimate of the transform of ``f`` at ``k``.

    ``f`` must be a section; this is spot-checked before sampling and a
    violation raises :class:`NotASection`.
    """
    _check_domain(case, lam)
    check_section(case, f, seed)
    p = case.p
    k = np.asarray(k)
    kp = np.conj(k[:, :p]).T

    def integrand(h):
        det_x = np.linalg.det(kp @ h[:, :, :p])
        return kernel_from_det(case, det_x, lam, phase_sign) * f(h)

    mean, std, n, rej = mc_integrate(integrand, lambda rng, s: haar_sample(case, rng, s), n_samples, seed)
    return OracleResult(complex(mean[0]), std_error=float(std[0]), n_samples=n_samples, seed=seed, rejected=rej)


def check_section(case: CaseParams, f: Callable, seed: int, count: int = 8, rtol: float = 1e-8) -> None:
    """Spot-check ``f(k m) = chi(m)^{-1} f(k)`` on random ``k`` in K, ``m`` in L."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, 3]))
    k = haar_sample(case, rng, count)
    m = random_l(case, rng, count)
    lhs = np.asarray(f(k @ m))
    rhs = np.asarray(f(k)) / chi_L(case, m)
    scale = max(float(np.max(np.abs(rhs))), 1e-300)
    if np.max(np.abs(lhs - rhs)) > rtol * scale:
        raise NotASection("callback does not transform by chi^{-1} under right L-translation")


# ---------------------------------------------------------------- projective space


def _sphere(q: int):
    def sample(rng, size):
        z = rng.standard_normal((size, q + 1)) + 1j * rng.standard_normal((size, q + 1))
        return z / np.linalg.norm(z, axis=1, keepdims=True)

    return sample


def projective_eigen_oracle(
    case: CaseParams,
    a: int,
    b: int,
    lam: float,
    method: str = "mc",
    budget: int = 1_000_000,
    seed: int = 0,
) -> OracleResult:
    """Eigenvalue on the K-type ``mu = (a + b,)`` over CP^q, ``l = a - b``.

    ``method="mc"`` averages ``|<u0,v>|^{lam-rho} (<u0,v>/|.|)^l conj(v_1)^a v_2^b``
    over the unit sphere and divides by the section at ``u0 = (e_1 + e_2)/sqrt 2``.
    ``method="quadrature"`` integrates the zonal eigenfunction
    ``conj(z)^l P_b^{(l, q-1)}(1 - 2|z|^2)`` against the law of ``|<e_1,v>|^2``
    by Gauss-Jacobi; ``budget`` is then the node count.
    """
    if case.field != "C" or case.p != 1:
        raise ValueError("projective oracle needs a complex case with p = 1")
    if a - b != case.l or b < 0 or case.l < 0:
        raise ValueError(f"need a - b = l = {case.l} >= 0 and b >= 0")
    _check_domain(case, lam)
    q, l, rho = case.q, case.l, case.rho
    method = method.lower()
    if method == "quadrature":
        return _projective_quadrature(q, l, b, lam, rho, budget)
    if method != "mc":
        raise ValueError(f"unknown method {method!r}")

    u0 = np.zeros(q + 1, dtype=complex)
    u0[:2] = 1 / np.sqrt(2.0)
    f_u0 = 2.0 ** (-(a + b) / 2)

    def integrand(v):
        z = v @ np.conj(u0)
        absz = np.abs(z)
        with np.errstate(divide="ignore", invalid="ignore"):
            kern = absz ** (lam - rho) * (z / absz) ** l
        return kern * np.conj(v[:, 0]) ** a * v[:, 1] ** b

    sample = _sphere(q)
    _projective_self_check(integrand, sample, seed)
    mean, std, n, rej = mc_integrate(integrand, sample, budget, seed)
    return OracleResult(complex(mean[0]) / f_u0, std_error=float(std[0]) / f_u0,
                        n_samples=budget, seed=seed, rejected=rej)


def _projective_self_check(integrand, sample, seed):
    rng = np.random.default_rng(np.random.SeedSequence([seed, 1]))
    v = sample(rng, 64)
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi, size=(64, 1)))
    lhs, rhs = integrand(v), integrand(v * phase)
    if not np.allclose(lhs, rhs, rtol=1e-10, atol=1e-14):
        raise ConventionMismatch("integrand is not invariant under v -> v e^{i theta}")


def _projective_quadrature(q, l, b, lam, rho, n_nodes):
    # weight (1 - r)^{q-1} r^s on [0, 1], s = (lam - rho + l) / 2
    s = (lam - rho + l) / 2

    def integral(n):
        x, w = roots_jacobi(n, q - 1, s)
        r = 0.5 * (x + 1.0)
        vals = eval_jacobi(b, l, q - 1, 1.0 - 2.0 * r)
        return q * np.sum(w * vals) / 2.0 ** (q + s)

    norm = eval_jacobi(b, l, q - 1, -1.0)
    n_nodes = max(int(n_nodes), b + 2)
    fine = integral(n_nodes) / norm
    coarse = integral(max(n_nodes // 2, b // 2 + 1)) / norm
    return OracleResult(complex(fine), error_bound=abs(fine - coarse), n_samples=n_nodes)


# ---------------------------------------------------------------- intertwining


@dataclass
class EquivarianceResult:
    residual: float
    sigma: float
    lhs: np.ndarray = field(repr=False)
    rhs: np.ndarray = field(repr=False)
    std_errors: np.ndarray = field(repr=False)
    n_samples: int = 0
    seed: int | None = None

    @property
    def z_score(self) -> float:
        return self.residual / self.sigma if self.sigma > 0 else float("inf")


def _test_points(case: CaseParams, seed: int, count: int, floor: float = 0.2):
    rng = np.random.default_rng(np.random.SeedSequence([seed, 2]))
    pts = []
    while len(pts) < count:
        k = haar_sample(case, rng)
        if abs(section_smallest(case, k)) >= floor:
            pts.append(k)
    return np.stack(pts)


def equivariance_check(
    case: CaseParams,
    lam: float,
    g,
    n_samples: int,
    seed: int,
    n_points: int = 5,
    phase_sign: int = DEFAULT_PHASE_SIGN,
) -> EquivarianceResult:
    """Compare ``C(pi_lam(g) f)`` with ``eta_mu0 * pi_{-lam}(theta g) f`` at test points.

    ``f`` is the smallest section, an eigenfunction of the transform.  The
    left side is Monte Carlo, the right side exact.  ``residual`` and
    ``sigma`` are the mean absolute difference and mean standard error,
    both relative to the mean ``|rhs|``.
    """
    _check_domain(case, lam)
    p = case.p
    g = np.asarray(g)
    ginv = np.linalg.inv(g)
    ks = _test_points(case, seed, n_points)
    kps = np.conj(np.swapaxes(ks[:, :, :p], -1, -2))  # (m, p, N)
    f = lambda k: section_smallest(case, k)

    def integrand(h):
        # chi_phase is 1 in the QR gauge, and f only reads the first p columns
        kappa, log_a = kp_leading(case, ginv @ h)
        moved = np.exp((-lam - case.rho) * log_a) * f(kappa)
        det_x = np.linalg.det(kps[None] @ h[:, None, :, :p])  # (size, m)
        return kernel_from_det(case, det_x, lam, phase_sign) * moved[:, None]

    sampler = lambda rng, s: haar_sample(case, rng, s)
    mean, std, n, _ = mc_integrate(integrand, sampler, n_samples, seed)
    eta0 = eta_initial(case, lam).eta
    rhs = eta0 * np.array([pi_action(case, -lam, theta(case, g), f, k) for k in ks])
    scale = float(np.mean(np.abs(rhs)))
    resid = float(np.mean(np.abs(mean - rhs))) / scale
    sigma = float(np.mean(std)) / scale
    return EquivarianceResult(resid, sigma, mean, rhs, std, n_samples, seed)
