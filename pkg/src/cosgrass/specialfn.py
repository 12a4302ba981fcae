"""Complex log-Gamma and the Siegel Gamma function with pole bookkeeping.

Everything is evaluated in log space; ratios of Siegel Gamma products with
matching poles are resolved as limits instead of being reported as ``nan``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

__all__ = [
    "Status",
    "LogGammaValue",
    "RatioValue",
    "log_gamma",
    "is_gamma_pole",
    "siegel_args",
    "siegel_log_gamma",
    "siegel_ratio",
    "POLE_TOL",
]

POLE_TOL = 1e-12

# Lanczos approximation, g = 671/128, fourteen terms (Numerical Recipes 3rd ed.).
# The common g = 7 nine-term set is only good to ~2e-13 near the imaginary axis.
_G_NUM, _G_DEN = 671, 128
_C0 = 0.999999999999997092
_COEFFS = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
# Internals run in extended precision: |log Gamma| reaches ~200 for |z| <= 50
# and double rounding of the large terms alone would cost ~1e-13 relative.
_LD = np.longdouble
_CLD = np.clongdouble
_PI = np.arccos(_LD(-1))
_TWO_PI = 2 * _PI
_SQRT_2PI = np.sqrt(_TWO_PI)
_LOG_PI = np.log(_PI)
_COEFFS_LD = tuple(_LD(c) for c in _COEFFS)
_G_LD = _LD(_G_NUM) / _LD(_G_DEN)


class Status(str, Enum):
    FINITE = "finite"
    POLE = "pole"
    REMOVABLE = "removable"


@dataclass(frozen=True)
class LogGammaValue:
    value: complex
    status: Status = Status.FINITE

    @property
    def is_pole(self) -> bool:
        return self.status is Status.POLE

    def exp(self) -> complex:
        if self.is_pole:
            return complex(math.inf, 0.0)
        return cmath.exp(self.value)


@dataclass(frozen=True)
class RatioValue:
    value: complex
    status: Status

    @property
    def finite(self) -> bool:
        return self.status is not Status.POLE


def is_gamma_pole(z: complex, tol: float = POLE_TOL) -> bool:
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    m = round(z.real)
    return m <= 0 and abs(z.real - m) <= tol


def _wrap(value) -> complex:
    """Map the imaginary part into (-pi, pi] and round to double."""
    im = value.imag - _TWO_PI * np.rint(value.imag / _TWO_PI)
    if im <= -_PI:
        im += _TWO_PI
    elif im > _PI:
        im -= _TWO_PI
    return complex(float(value.real), float(im))


def _lanczos_log(z):
    # valid for Re z >= 0.5
    t = z + _G_LD
    t = (z + _LD(0.5)) * np.log(t) - t
    ser = _LD(_C0)
    y = z
    for c in _COEFFS_LD:
        y = y + 1
        ser = ser + c / y
    return t + np.log(_SQRT_2PI * ser / z)


def _log_sin_pi(z):
    """log sin(pi z) with exact argument reduction; branch is irrelevant here."""
    n = int(np.rint(z.real))
    r = _CLD(z - n)
    sign_log = _CLD(1j) * _PI if n % 2 else _CLD(0)
    y = float(r.imag)
    if abs(y) < 30.0:
        return np.log(np.sin(_PI * r)) + sign_log
    # sin(pi r) = (e^{i pi r} - e^{-i pi r}) / 2i, keep the dominant exponential
    if y > 0:
        lead = _CLD(-1j) * _PI * r
        rest = np.log(1 - np.exp(_CLD(2j) * _PI * r))
        return lead + rest - np.log(_CLD(-2j)) + sign_log
    lead = _CLD(1j) * _PI * r
    rest = np.log(1 - np.exp(_CLD(-2j) * _PI * r))
    return lead + rest - np.log(_CLD(2j)) + sign_log


def log_gamma(z) -> LogGammaValue:
    """Principal log Gamma(z); imaginary part reduced into (-pi, pi]."""
    z = complex(z)
    if is_gamma_pole(z):
        return LogGammaValue(complex(math.inf, 0.0), Status.POLE)
    zl = _CLD(z)
    if z.real >= 0.5:
        val = _lanczos_log(zl)
    else:
        val = _LOG_PI - _log_sin_pi(zl) - _lanczos_log(1 - zl)
    return LogGammaValue(_wrap(val))


def siegel_args(p: int, d: int, z) -> list[complex]:
    """Scalar Gamma arguments ``z_j - (d/2)(j-1)``; scalar ``z`` is broadcast."""
    if np.ndim(z) == 0:
        zs = [complex(z)] * p
    else:
        zs = [complex(v) for v in z]
        if len(zs) != p:
            raise ValueError(f"vector argument of length {len(zs)} for p = {p}")
    return [zj - 0.5 * d * j for j, zj in enumerate(zs)]


def siegel_log_gamma(p: int, d: int, z) -> LogGammaValue:
    """log of ``prod_j Gamma(z_j - (d/2)(j-1))``."""
    if p < 1 or d not in (1, 2):
        raise ValueError("need p >= 1 and d in {1, 2}")
    acc = 0j
    for a in siegel_args(p, d, z):
        lg = log_gamma(a)
        if lg.is_pole:
            return LogGammaValue(complex(math.inf, 0.0), Status.POLE)
        acc += lg.value
    return LogGammaValue(acc)


def _expand(p, d, args, dirs):
    flat, flat_dirs = [], []
    if dirs is None:
        dirs = [1.0] * len(args)
    if len(dirs) != len(args):
        raise ValueError("directions must match the argument list")
    for z, c in zip(args, dirs):
        a = siegel_args(p, d, z)
        flat.extend(a)
        cs = [complex(c)] * p if np.ndim(c) == 0 else [complex(v) for v in c]
        flat_dirs.extend(cs)
    return flat, flat_dirs


def _residue_factor(z: complex, c: complex) -> tuple[complex, int]:
    """Leading coefficient of Gamma(-m + c eps) ~ coeff / eps, and its sign power."""
    m = -round(z.real)
    # Gamma(-m + x) ~ (-1)^m / (m! x)
    return complex((-1) ** m / math.factorial(m)) / c, m


def _perturbed(flat_num, dir_num, flat_den, dir_den, eps):
    def f(e):
        acc = 0j
        for z, c in zip(flat_num, dir_num):
            acc += log_gamma(z + c * e).value
        for z, c in zip(flat_den, dir_den):
            acc -= log_gamma(z + c * e).value
        return cmath.exp(acc)

    a1 = 0.5 * (f(eps) + f(-eps))
    a2 = 0.5 * (f(2 * eps) + f(-2 * eps))
    return (4.0 * a1 - a2) / 3.0


def siegel_ratio(
    p: int,
    d: int,
    numerators: Sequence,
    denominators: Sequence,
    num_directions: Sequence | None = None,
    den_directions: Sequence | None = None,
    *,
    method: str = "residue",
    eps: float = 1e-4,
) -> RatioValue:
    """``prod Gamma_{p,d}(num) / prod Gamma_{p,d}(den)`` with pole bookkeeping.

    Arguments may be scalars (broadcast) or length-``p`` vectors.  When poles
    occur on both sides in equal number the ratio is the limit along
    ``z -> z + c eps`` with per-argument directions ``c`` (default 1), either
    from the Gamma residues (``method="residue"``) or from symmetric
    perturbation with one Richardson step (``method="perturb"``).
    """
    if not numerators or not denominators:
        raise ValueError("numerator and denominator lists must be nonempty")
    flat_num, dir_num = _expand(p, d, numerators, num_directions)
    flat_den, dir_den = _expand(p, d, denominators, den_directions)
    poles_num = [i for i, z in enumerate(flat_num) if is_gamma_pole(z)]
    poles_den = [i for i, z in enumerate(flat_den) if is_gamma_pole(z)]
    if not poles_num and not poles_den:
        acc = sum((log_gamma(z).value for z in flat_num), 0j)
        acc -= sum((log_gamma(z).value for z in flat_den), 0j)
        return RatioValue(cmath.exp(acc), Status.FINITE)
    if len(poles_num) > len(poles_den):
        return RatioValue(complex(math.nan, math.nan), Status.POLE)
    if len(poles_num) < len(poles_den):
        return RatioValue(0j, Status.FINITE)
    if method == "perturb":
        return RatioValue(_perturbed(flat_num, dir_num, flat_den, dir_den, eps), Status.REMOVABLE)
    if method != "residue":
        raise ValueError(f"unknown method {method!r}")
    for i in poles_num:
        if dir_num[i] == 0:
            return RatioValue(complex(math.nan, math.nan), Status.POLE)
    for i in poles_den:
        if dir_den[i] == 0:
            return RatioValue(0j, Status.FINITE)
    acc = 0j
    coeff = 1 + 0j
    for i, z in enumerate(flat_num):
        if i in poles_num:
            coeff *= _residue_factor(z, dir_num[i])[0]
        else:
            acc += log_gamma(z).value
    for i, z in enumerate(flat_den):
        if i in poles_den:
            coeff /= _residue_factor(z, dir_den[i])[0]
        else:
            acc -= log_gamma(z).value
    return RatioValue(coeff * cmath.exp(acc), Status.REMOVABLE)
