"""Verification suites behind ``cosgrass verify``.

Each suite returns a list of :class:`Check` records.  Nothing here reads the
clock or global random state, so a report depends only on its arguments.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.special import loggamma

from .groupops import chi_L, haar_sample, random_g_near_identity, random_l, section_smallest
from .oracle import equivariance_check, mc_transform_at, projective_eigen_oracle, torus_eta_initial
from .rootdata import CaseParams, make_case, reference_cases
from .specialfn import log_gamma, siegel_log_gamma
from .spectrum import eta_closed, eta_initial, eta_recursive, sg_ratio, step_ratio
from .weights import all_paths, enumerate_weights, mu0, s_set

__all__ = [
    "Check",
    "SUITES",
    "MC_SUITES",
    "DEFAULT_SAMPLES",
    "run_suite",
    "lambda_probe_points",
]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    measured: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.measured < self.tolerance)


MC_SUITES = ("transform", "sphere", "equivariance")
SUITES = ("gamma", "recursion", "torus", "transform", "sphere", "equivariance")
DEFAULT_SAMPLES = {"transform": 1_000_000, "sphere": 5_000_000, "equivariance": 1_000_000}


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


# ---------------------------------------------------------------- gamma


def suite_gamma(seed: int = 0) -> list[Check]:
    out = []
    g = lambda z: log_gamma(z).exp()
    refs = [
        ("gamma(0.5)", g(0.5), math.sqrt(math.pi)),
        ("gamma(3)", g(3), 2.0),
        ("siegel_2_1(3)", cmath.exp(siegel_log_gamma(2, 1, 3).value), 2.0 * 0.75 * math.sqrt(math.pi)),
    ]
    for name, got, want in refs:
        out.append(Check("gamma", name, _rel(got, want), 1e-13))

    rng = np.random.default_rng(np.random.SeedSequence([seed, 11]))
    zs = rng.uniform(-20, 20, 200) + 1j * rng.uniform(-20, 20, 200)
    fe = max(_rel(g(z + 1), z * g(z)) for z in zs)
    out.append(Check("gamma", "functional_equation", fe, 1e-13))
    refl = max(_rel(g(z) * g(1 - z), math.pi / cmath.sin(math.pi * z)) for z in zs if abs(z.imag) < 15)
    out.append(Check("gamma", "reflection", refl, 1e-12))
    ref = max(abs(cmath.exp(log_gamma(z).value - complex(loggamma(z))) - 1) for z in zs)
    out.append(Check("gamma", "scipy_loggamma", ref, 1e-13))
    return out


# ---------------------------------------------------------------- recursion


def lambda_probe_points(case: CaseParams, count: int = 50) -> list[complex]:
    """Half real, half complex, none on a pole hyperplane.

    Real points sit at irrational offsets from ``rho - k`` so that no Gamma
    argument can land on a nonpositive integer.
    """
    base = case.rho - case.k
    half = count // 2
    real = [complex(base + 0.1 + i * math.pi / 4) for i in range(half)]
    cplx = [complex(-6 + 0.9 * i, 0.25 + 0.35 * i) for i in range(count - half)]
    return real + cplx


def closed_vs_recursive(case: CaseParams, max_degree: int = 20, count: int = 50) -> tuple[float, int]:
    worst, n = 0.0, 0
    lams = lambda_probe_points(case, count)
    for mu in enumerate_weights(case, max_degree):
        for lam in lams:
            a = eta_closed(case, mu, lam)
            b = eta_recursive(case, mu, lam)
            if not (a.finite and b.finite):
                return math.inf, n
            if a.eta == 0 and b.eta == 0:
                continue
            worst = max(worst, _rel(b.eta, a.eta))
            n += 1
    return worst, n


def path_spread(case: CaseParams, max_degree: int = 20, count: int = 6) -> float:
    worst = 0.0
    lams = lambda_probe_points(case, count)
    for mu in enumerate_weights(case, max_degree):
        for lam in lams:
            vals = [eta_recursive(case, mu, lam, path).eta for path in all_paths(case, mu, limit=16)]
            ref = vals[0]
            if ref == 0:
                continue
            worst = max(worst, max(_rel(v, ref) for v in vals))
    return worst


def sg_vs_step(cases: Sequence[CaseParams], seed: int, count: int = 100) -> float:
    rng = np.random.default_rng(np.random.SeedSequence([seed, 13]))
    worst = 0.0
    for _ in range(count):
        case = cases[rng.integers(len(cases))]
        mus = enumerate_weights(case, 16)
        mu = mus[rng.integers(len(mus))]
        ups = [nu for nu in s_set(case, mu) if sum(nu) == sum(mu) + 2]
        nu = ups[rng.integers(len(ups))]
        j = next(i for i in range(case.p) if nu[i] != mu[i]) + 1
        lam = complex(rng.uniform(-10, 10), rng.uniform(0.1, 10))
        worst = max(worst, abs(sg_ratio(case, mu, nu, lam) - step_ratio(case, mu, j, lam)))
    return worst


def suite_recursion(cases: Sequence[CaseParams], seed: int = 0) -> list[Check]:
    out = []
    for case in cases:
        tag = case.label()
        out.append(Check("recursion", f"normalization {tag}", abs(eta_initial(case, case.rho - case.k).eta - 1), 1e-10))
        worst, _ = closed_vs_recursive(case)
        out.append(Check("recursion", f"closed_vs_recursive {tag}", worst, 1e-9))
        out.append(Check("recursion", f"path_independence {tag}", path_spread(case, 20), 1e-10))
    out.append(Check("recursion", "sg_ratio_vs_step_ratio", sg_vs_step(cases, seed), 1e-12))
    return out


# ---------------------------------------------------------------- torus


def suite_torus(cases: Sequence[CaseParams], n_points: int = 100) -> list[Check]:
    out = []
    for case in cases:
        base = case.rho - case.k
        worst = 0.0
        for i in range(6):
            lam = base + i
            est = torus_eta_initial(case, lam, n_points).estimate
            worst = max(worst, _rel(est, eta_initial(case, lam).eta))
        out.append(Check("torus", f"eta_initial {case.label()}", worst, 1e-6))
    return out


# ---------------------------------------------------------------- Monte Carlo suites


def suite_transform(case: CaseParams, samples: int, seed: int, lam: float = 4.0) -> list[Check]:
    """Section on the smallest K-type against its eigenvalue, at two points."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, 17]))
    f = lambda k: section_smallest(case, k)
    eta = eta_closed(case, mu0(case), lam).eta
    out = []
    points = [np.eye(case.dim, dtype=case.dtype)]
    while len(points) < 2:
        k = haar_sample(case, rng)
        if abs(f(k)) >= 0.3:
            points.append(k)
    for i, k in enumerate(points):
        res = mc_transform_at(case, lam, f, k, samples, seed + i)
        fk = complex(f(k))
        z = abs(res.estimate - eta * fk) / res.std_error
        out.append(Check("transform", f"point{i} {case.label()} lam={lam:g}", z, 3.0))
    return out


def suite_sphere(case: CaseParams, samples: int, seed: int) -> list[Check]:
    """Projective-space eigenfunctions for mu in {l, l+2, l+4}."""
    out = []
    base = case.rho - case.k
    for b in range(3):
        mu = (case.l + 2 * b,)
        for i, lam in enumerate((base, base + 2, base + 4)):
            res = projective_eigen_oracle(case, case.l + b, b, lam, "mc", samples, seed + 10 * b + i)
            want = eta_closed(case, mu, lam).eta
            z = abs(res.estimate - want) / res.std_error
            out.append(Check("sphere", f"mu={mu[0]} lam={lam:g} {case.label()}", z, 3.0))
    return out


def suite_equivariance(cases: Sequence[CaseParams], samples: int, seed: int, count: int = 5, lam: float = 4.0) -> list[Check]:
    out = []
    for case in cases:
        out.append(Check("equivariance", f"section_contract {case.label()}", section_contract(case, seed), 1e-12))
        rng = np.random.default_rng(np.random.SeedSequence([seed, 19]))
        for i in range(count):
            g = random_g_near_identity(case, rng)
            res = equivariance_check(case, lam, g, samples, seed + i)
            out.append(Check("equivariance", f"g{i} {case.label()} lam={lam:g}", res.z_score, 3.0))
    return out


def section_contract(case: CaseParams, seed: int, count: int = 100) -> float:
    """max |f(k m) - chi(m)^{-1} f(k)| over random k in K and m in L."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, 23]))
    k = haar_sample(case, rng, count)
    m = random_l(case, rng, count)
    lhs = section_smallest(case, k @ m)
    rhs = section_smallest(case, k) / chi_L(case, m)
    return float(np.max(np.abs(lhs - rhs)))


# ---------------------------------------------------------------- dispatch


def run_suite(
    suite: str,
    case: CaseParams | None,
    seed: int,
    samples: int | None = None,
) -> list[Check]:
    """Run one suite.  ``case=None`` selects the default cases of the suite."""
    matrix = reference_cases()
    cases = [case] if case is not None else matrix
    n = samples if samples is not None else DEFAULT_SAMPLES.get(suite)
    runners: dict[str, Callable[[], list[Check]]] = {
        "gamma": lambda: suite_gamma(seed),
        "recursion": lambda: suite_recursion(cases, seed),
        "torus": lambda: suite_torus(cases),
        "transform": lambda: suite_transform(case or make_case("R", 2, 3), n, seed),
        "sphere": lambda: suite_sphere(case or make_case("C", 1, 2, 1), n, seed),
        "equivariance": lambda: suite_equivariance(
            [case] if case is not None else [make_case("R", 2, 3), make_case("C", 1, 2, 1)], n, seed
        ),
    }
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}")
    return runners[suite]()
