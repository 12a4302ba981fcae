"""Case parameters and the restricted root system BC_p of a Grassmannian.

A case is one line bundle over ``Gr_p(F^{n+1})`` with ``F`` the reals or the
complex numbers.  The restricted roots of the compact symmetric pair are

    short   e_i               multiplicity d (q - p)
    medium  e_i +- e_j, i<j   multiplicity d
    long    2 e_i             multiplicity d - 1

and everything downstream (rho vectors, the torus density, the Casimir
values ``omega``) is computed from this list rather than hardcoded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .errors import ConstraintViolation, DimensionMismatch, TrivialCharacter

__all__ = [
    "CaseParams",
    "RootDatum",
    "make_case",
    "root_datum",
    "rho_from_multiplicities",
    "shifted_multiplicities",
    "omega",
    "inner",
    "reference_cases",
]

FIELDS = ("R", "C")


@dataclass(frozen=True)
class CaseParams:
    field: str
    p: int
    q: int
    l: int = 0
    trivial: bool = False

    @property
    def d(self) -> int:
        return 1 if self.field == "R" else 2

    @property
    def n(self) -> int:
        return self.p + self.q - 1

    @property
    def rho_exact(self) -> Fraction:
        return Fraction(self.d * (self.n + 1), 2)

    @property
    def rho(self) -> float:
        return float(self.rho_exact)

    @property
    def k(self) -> int:
        return 1 if self.field == "R" else abs(self.l)

    @property
    def dim(self) -> int:
        """Size of the ambient square matrices, ``n + 1``."""
        return self.n + 1

    @property
    def dtype(self):
        return float if self.field == "R" else complex

    @property
    def char_exponent(self) -> int:
        """Exponent ``j`` of the phase ``(det X / |det X|)^j`` on M."""
        return 1 if self.field == "R" else self.l

    def label(self) -> str:
        if self.field == "R":
            return f"(R,{self.p},{self.q})"
        return f"(C,{self.p},{self.q},l={self.l})"


def make_case(field: str, p: int, q: int, l: int = 0, *, allow_trivial: bool = False) -> CaseParams:
    """Validate a case against the classification table and return it.

    For ``field="R"`` the character is ``det`` on the first block and ``l`` is
    ignored (stored as 0).  For ``field="C"`` the character is ``chi_l``;
    ``l = 0`` is the scalar theory and needs ``allow_trivial=True``.
    """
    field = str(field).upper()
    if field not in FIELDS:
        raise ConstraintViolation(f"field must be one of {FIELDS}, got {field!r}")
    for name, val in (("p", p), ("q", q), ("l", l)):
        if isinstance(val, bool) or int(val) != val:
            raise ConstraintViolation(f"{name} must be an integer, got {val!r}")
    p, q, l = int(p), int(q), int(l)
    if field == "R":
        if p != 2 or q < 3:
            raise ConstraintViolation(
                f"real Grassmannian requires p = 2 and q >= 3 (got p={p}, q={q})"
            )
        return CaseParams("R", p, q, 0, False)
    if not 1 <= p <= q:
        raise ConstraintViolation(f"complex Grassmannian requires 1 <= p <= q (got p={p}, q={q})")
    if l == 0 and not allow_trivial:
        raise TrivialCharacter("l = 0 is the trivial character; pass allow_trivial=True")
    return CaseParams("C", p, q, l, l == 0)


@dataclass(frozen=True)
class RootDatum:
    roots: tuple[tuple[tuple[int, ...], int], ...]
    rho_k: tuple[Fraction, ...]
    rho_s: tuple[Fraction, ...]
    rho_k_shifted: tuple[Fraction, ...]

    @property
    def multiplicities(self) -> tuple[int, int, int]:
        """(short, medium, long) multiplicities."""
        short = medium = long_ = 0
        for coeffs, m in self.roots:
            kind = _root_kind(coeffs)
            if kind == "short":
                short = m
            elif kind == "medium":
                medium = m
            else:
                long_ = m
        return short, medium, long_


def _root_kind(coeffs: Sequence[int]) -> str:
    nz = [c for c in coeffs if c != 0]
    if len(nz) == 2:
        return "medium"
    return "long" if abs(nz[0]) == 2 else "short"


def positive_roots(p: int) -> list[tuple[int, ...]]:
    """Positive roots of BC_p as coefficient vectors in the e-basis."""
    out = []
    for i in range(p):
        v = [0] * p
        v[i] = 1
        out.append(tuple(v))
    for i in range(p):
        for j in range(i + 1, p):
            for s in (1, -1):
                v = [0] * p
                v[i], v[j] = 1, s
                out.append(tuple(v))
    for i in range(p):
        v = [0] * p
        v[i] = 2
        out.append(tuple(v))
    return out


def rho_from_multiplicities(p: int, m_short, m_medium, m_long) -> tuple[Fraction, ...]:
    """Half the multiplicity-weighted sum of positive roots."""
    mult = {"short": Fraction(m_short), "medium": Fraction(m_medium), "long": Fraction(m_long)}
    acc = [Fraction(0)] * p
    for coeffs in positive_roots(p):
        m = mult[_root_kind(coeffs)]
        for j, c in enumerate(coeffs):
            acc[j] += m * c
    return tuple(a / 2 for a in acc)


def shifted_multiplicities(case: CaseParams, sign: int = 1) -> tuple[int, int, int]:
    """Multiplicities ``(m_s - 2k s, m_m, m_l + 2k s)`` for ``s = +-1``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    d, p, q, k = case.d, case.p, case.q, case.k
    return d * (q - p) - 2 * k * sign, d, d - 1 + 2 * k * sign


@lru_cache(maxsize=None)
def root_datum(case: CaseParams) -> RootDatum:
    d, p, q, k = case.d, case.p, case.q, case.k
    mult = {"short": d * (q - p), "medium": d, "long": d - 1}
    roots = tuple((r, mult[_root_kind(r)]) for r in positive_roots(p))
    rho_k = rho_from_multiplicities(p, mult["short"], mult["medium"], mult["long"])
    rho_s = tuple(Fraction(1, 2) for _ in range(p))
    shifted = tuple(a + 2 * k * b for a, b in zip(rho_k, rho_s))
    return RootDatum(roots, rho_k, rho_s, shifted)


def inner(mu: Sequence, nu: Sequence) -> Fraction:
    """Bilinear form with <e_i, e_j> = delta_ij / 2."""
    if len(mu) != len(nu):
        raise DimensionMismatch(f"length {len(mu)} != {len(nu)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(mu, nu)), Fraction(0)) / 2


def omega(case: CaseParams, mu: Sequence[int]) -> Fraction:
    """Casimir value ``<mu + 2 rho_k, mu>`` on the K-type with weight ``mu``."""
    if len(mu) != case.p:
        raise DimensionMismatch(f"weight has length {len(mu)}, case has rank {case.p}")
    rho_k = root_datum(case).rho_k
    shifted = [Fraction(m) + 2 * r for m, r in zip(mu, rho_k)]
    return inner(shifted, mu)


def reference_cases() -> list[CaseParams]:
    """The six reference cases used throughout the verification suites."""
    return [
        make_case("R", 2, 3),
        make_case("R", 2, 5),
        make_case("C", 1, 2, 1),
        make_case("C", 1, 3, 2),
        make_case("C", 2, 2, 1),
        make_case("C", 2, 3, 3),
    ]
