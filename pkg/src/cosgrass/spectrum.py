"""Closed forms and recursions for the K-spectrum eta_mu(lambda).

``lambda`` is always the complex scalar spectral parameter, with ``rho =
d(n+1)/2``.  Three routes are provided and are meant to be checked against
each other:

* :func:`eta_initial` -- the smallest K-type ``mu0 = (k, ..., k)``;
* :func:`eta_closed`  -- Siegel Gamma closed form for every lattice weight;
* :func:`eta_recursive` -- ``eta_initial`` times step ratios along a lattice
  path ``mu0 -> mu``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotInLattice, NotNeighbors
from .rootdata import CaseParams, omega
from .specialfn import RatioValue, Status, siegel_ratio
from .weights import canonical_path, is_member, mu0, s_set, total

__all__ = [
    "SpectralValue",
    "eta_initial",
    "big_g",
    "sign_c",
    "eta_closed",
    "step_ratio",
    "eta_recursive",
    "sg_ratio",
    "evaluate_grid",
]

_NAN = complex(math.nan, math.nan)


@dataclass(frozen=True)
class SpectralValue:
    eta: complex
    status: Status
    path: tuple[int, ...] | None = None

    @property
    def finite(self) -> bool:
        return self.status is not Status.POLE


def _from_ratio(r: RatioValue, factor: complex = 1.0) -> SpectralValue:
    if r.status is Status.POLE:
        return SpectralValue(_NAN, Status.POLE)
    return SpectralValue(complex(factor) * r.value, r.status)


def _check_member(case: CaseParams, mu: Sequence[int]) -> tuple[int, ...]:
    if len(mu) != case.p:
        raise DimensionMismatch(f"weight has length {len(mu)}, case has rank {case.p}")
    mu = tuple(int(m) for m in mu)
    if not is_member(case, mu):
        raise NotInLattice(f"{mu} is not in the lattice for {case.label()}")
    return mu


def eta_initial(case: CaseParams, lam) -> SpectralValue:
    """Eigenvalue on the smallest K-type ``mu0``."""
    lam = complex(lam)
    d, p, rho, k = case.d, case.p, case.rho, case.k
    r = siegel_ratio(
        p, d,
        [d * (case.n + 1) / 2, (lam - rho + k + d * p) / 2],
        [d * p / 2, (lam + rho + k) / 2],
        num_directions=[0.0, 0.5],
        den_directions=[0.0, 0.5],
    )
    return _from_ratio(r)


def sign_c(case: CaseParams, mu: Sequence[int]) -> int:
    """``(-1)^((|mu| - p k) / 2)``; the exponent is an integer on the lattice."""
    e = total(mu) - case.p * case.k
    if e % 2:
        raise NotInLattice(f"|mu| - pk is odd for {tuple(mu)}")
    return -1 if (e // 2) % 2 else 1


def big_g(case: CaseParams, lam) -> SpectralValue:
    """The mu-independent factor of the spectrum, without its sign.

    The textbook form carries ``(-1)^{-pk/2}``, which is not a real sign when
    ``pk`` is odd; that factor is folded into :func:`sign_c` instead, so
    ``eta_closed(mu) = sign_c(mu) * big_g * Gamma ratio in mu``.
    """
    lam = complex(lam)
    d, p, rho, k = case.d, case.p, case.rho, case.k
    r = siegel_ratio(
        p, d,
        [d * (case.n + 1) / 2, (lam - rho + k + d * p) / 2],
        [d * p / 2, (-lam + rho + k) / 2],
        num_directions=[0.0, 0.5],
        den_directions=[0.0, -0.5],
    )
    return _from_ratio(r)


def mu_factor(case: CaseParams, mu: Sequence[int], lam) -> SpectralValue:
    """``Gamma_{p,d}((-lam + rho + mu)/2) / Gamma_{p,d}((lam + rho + mu)/2)``."""
    lam = complex(lam)
    rho = case.rho
    r = siegel_ratio(
        case.p, case.d,
        [[(-lam + rho + m) / 2 for m in mu]],
        [[(lam + rho + m) / 2 for m in mu]],
        num_directions=[-0.5],
        den_directions=[0.5],
    )
    return _from_ratio(r)


def eta_closed(case: CaseParams, mu: Sequence[int], lam, *, method: str = "residue") -> SpectralValue:
    """Closed-form eigenvalue on the K-type ``mu``, evaluated in log space.

    All Siegel Gamma factors go through one ratio so that poles shared by
    numerator and denominator are resolved as a limit in ``lam``.
    """
    mu = _check_member(case, mu)
    lam = complex(lam)
    d, p, rho, k = case.d, case.p, case.rho, case.k
    r = siegel_ratio(
        p, d,
        [
            d * (case.n + 1) / 2,
            (lam - rho + k + d * p) / 2,
            [(-lam + rho + m) / 2 for m in mu],
        ],
        [
            d * p / 2,
            (-lam + rho + k) / 2,
            [(lam + rho + m) / 2 for m in mu],
        ],
        num_directions=[0.0, 0.5, -0.5],
        den_directions=[0.0, -0.5, 0.5],
        method=method,
    )
    return _from_ratio(r, sign_c(case, mu))


def step_ratio(case: CaseParams, mu: Sequence[int], j: int, lam) -> complex:
    """``eta_{mu + 2 e_j} / eta_mu`` for 1-based ``j``.

    Returns ``inf`` when the denominator vanishes.
    """
    mu = _check_member(case, mu)
    if not 1 <= j <= case.p:
        raise ValueError(f"j must be in 1..{case.p}, got {j}")
    lam = complex(lam)
    shift = case.rho - case.d * (j - 1)
    num = lam - mu[j - 1] - shift
    den = lam + mu[j - 1] + shift
    if den == 0:
        return complex(math.inf, 0.0)
    return num / den


def eta_recursive(case: CaseParams, mu: Sequence[int], lam, path: Iterable[int] | None = None) -> SpectralValue:
    """``eta_initial`` times step ratios along a ``+2 e_j`` path from ``mu0``.

    ``path`` holds 0-based coordinate indices; the default raises coordinates
    left to right.  The path actually used is returned on the result.
    """
    mu = _check_member(case, mu)
    steps = canonical_path(case, mu) if path is None else [int(j) for j in path]
    init = eta_initial(case, lam)
    if init.status is Status.POLE:
        return SpectralValue(_NAN, Status.POLE, tuple(steps))
    cur = list(mu0(case))
    acc = init.eta
    for j in steps:
        ratio = step_ratio(case, cur, j + 1, lam)
        if cmath.isinf(ratio):
            return SpectralValue(_NAN, Status.POLE, tuple(steps))
        acc *= ratio
        cur[j] += 2
        if not is_member(case, cur):
            raise NotInLattice(f"path leaves the lattice at {tuple(cur)}")
    if tuple(cur) != mu:
        raise ValueError(f"path ends at {tuple(cur)}, not {mu}")
    return SpectralValue(acc, init.status, tuple(steps))


def sg_ratio(case: CaseParams, mu: Sequence[int], nu: Sequence[int], lam) -> complex:
    """Spectrum-generating ratio ``(2 lam - dw) / (2 lam + dw)``, ``dw = omega(nu) - omega(mu)``."""
    mu = _check_member(case, mu)
    nu = tuple(int(v) for v in nu)
    if nu not in s_set(case, mu):
        raise NotNeighbors(f"{nu} is not a neighbour of {mu}")
    lam = complex(lam)
    dw = float(omega(case, nu) - omega(case, mu))
    den = 2 * lam + dw
    if den == 0:
        return complex(math.inf, 0.0)
    return (2 * lam - dw) / den


def evaluate_grid(case: CaseParams, mus: Sequence[Sequence[int]], lams: Sequence, method: str = "closed"):
    """Rows ``(mu, lam, SpectralValue)``, weights outer and lambdas inner."""
    fn = {"closed": eta_closed, "recursive": eta_recursive}[method]
    return [(tuple(mu), complex(lam), fn(case, mu, lam)) for mu in mus for lam in lams]
