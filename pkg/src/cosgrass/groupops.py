"""Matrix realisations on SL(n+1, F), K = SO(n+1) or SU(n+1).

The base point is the span of the first ``p`` standard basis vectors, the
stabiliser ``L = S(O(p) x O(q))`` or ``S(U(p) x U(q))`` is block diagonal, and
the parabolic ``P`` is block upper triangular.  All functions accept a single
matrix or a stack ``(..., N, N)``; stacks are what the Monte Carlo code uses.

Gauge.  ``g = kappa * r`` is taken from the QR factorisation with a positive
diagonal in ``r``.  Then the leading ``p x p`` block of ``r`` has positive
determinant, the character of the M-part is 1, and

    a(g)^z = det(r[:p, :p])^z = |det_F X_b|^z.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import KernelSingular, NotInL, SingularBlock
from .rootdata import CaseParams, root_datum

__all__ = [
    "KPDecomposition",
    "theta",
    "haar_sample",
    "kp_decompose",
    "kp_leading",
    "alpha_log",
    "leading_block_det",
    "cos_kernel",
    "kernel_from_det",
    "chi_L",
    "torus_point",
    "delta_density",
    "section_smallest",
    "pi_action",
    "random_l",
    "random_g_near_identity",
    "is_in_k",
    "is_in_g",
    "DEFAULT_PHASE_SIGN",
]

# Sign of the exponent j in the kernel phase (det X / |det X|)^{+-j}.  With +1
# the transform of ``section_smallest`` at the identity is a positive integral
# of |det X|^{lam - rho + k}; the tests check both signs.
DEFAULT_PHASE_SIGN = 1


def _ct(a: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(a, -1, -2))


def _dtype(case: CaseParams):
    return np.float64 if case.field == "R" else np.complex128


def is_in_k(case: CaseParams, g, tol: float = 1e-12) -> bool:
    g = np.asarray(g)
    eye = np.eye(case.dim)
    if case.field == "R" and np.iscomplexobj(g) and np.abs(g.imag).max() > tol:
        return False
    ok = np.abs(_ct(g) @ g - eye).max() <= tol * case.dim
    return bool(ok and np.abs(np.linalg.det(g) - 1).max() <= tol * case.dim)


def is_in_g(case: CaseParams, g, tol: float = 1e-10) -> bool:
    return bool(np.abs(np.linalg.det(np.asarray(g)) - 1).max() <= tol)


def theta(case: CaseParams, g):
    """Cartan involution: inverse conjugate transpose."""
    return _ct(np.linalg.inv(np.asarray(g)))


def haar_sample(case: CaseParams, rng: np.random.Generator, size: int | None = None):
    """Haar-distributed element(s) of SO(n+1) or SU(n+1)."""
    N = case.dim
    shape = (N, N) if size is None else (size, N, N)
    if case.field == "R":
        z = rng.standard_normal(shape)
    else:
        z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    q = q * (diag / np.abs(diag))[..., None, :]
    det = np.linalg.det(q)
    if case.field == "R":
        q[..., :, 0] *= np.sign(det)[..., None]
    else:
        q = q / (det ** (1.0 / N))[..., None, None]
    return q


@dataclass
class KPDecomposition:
    kappa: np.ndarray
    log_a: np.ndarray
    chi_phase: np.ndarray
    r: np.ndarray


def kp_decompose(case: CaseParams, g, cond_limit: float = 1e12) -> KPDecomposition:
    """``g = kappa * r`` with ``kappa`` in K and ``r`` upper triangular, positive diagonal."""
    g = np.asarray(g)
    q, r = np.linalg.qr(g)
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    absd = np.abs(diag)
    if np.any(absd.min(axis=-1) <= absd.max(axis=-1) / cond_limit):
        raise SingularBlock("orthonormalisation degenerated")
    phase = diag / absd
    q = q * phase[..., None, :]
    r = np.conj(phase)[..., :, None] * r
    log_a = np.sum(np.log(absd[..., : case.p]), axis=-1)
    chi = np.ones(log_a.shape, dtype=complex) if np.ndim(log_a) else np.complex128(1.0)
    return KPDecomposition(q, log_a, chi, r)


def kp_leading(case: CaseParams, g, cond_limit: float = 1e12):
    """First ``p`` columns of ``kappa`` and ``log_a``, from a reduced QR.

    Enough for anything that only sees ``kappa`` through its leading columns,
    at a fraction of the cost of :func:`kp_decompose` on large stacks.
    """
    q, r = np.linalg.qr(np.asarray(g)[..., :, : case.p])
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    absd = np.abs(diag)
    if np.any(absd.min(axis=-1) <= absd.max(axis=-1) / cond_limit):
        raise SingularBlock("orthonormalisation degenerated")
    return q * (diag / absd)[..., None, :], np.sum(np.log(absd), axis=-1)


def leading_block_det(case: CaseParams, g):
    """``det_F`` of the leading ``p x p`` block."""
    p = case.p
    return np.linalg.det(np.asarray(g)[..., :p, :p])


def alpha_log(case: CaseParams, g):
    """log of the A-part in the opposite (block lower unipotent) factorisation.

    For ``g = [[X, Y], [V, W]]`` this is ``log |det X|``; on ``k^{-1} h`` it is
    the log of the Grassmannian cosine of the two subspaces.
    """
    return np.log(np.abs(leading_block_det(case, g)))


def kernel_from_det(case: CaseParams, det_x, lam, phase_sign: int = DEFAULT_PHASE_SIGN):
    """``|det X|^{lam - rho} (det X / |det X|)^{+-j}``; ``nan`` where ``det X = 0``."""
    det_x = np.asarray(det_x)
    absd = np.abs(det_x)
    lam = complex(lam)
    j = phase_sign * case.char_exponent
    with np.errstate(divide="ignore", invalid="ignore"):
        mag = np.exp((lam - case.rho) * np.log(absd))
        if case.field == "R":
            ph = np.sign(det_x.real) ** (j % 2)
        else:
            ph = (det_x / absd) ** j
        out = mag * ph
    zero = absd == 0
    if np.any(zero):
        out = np.where(zero, 0.0 if (lam - case.rho).real > 0 else np.nan, out)
    if case.field == "R" and lam.imag == 0:
        out = out.real
    return out


def cos_kernel(case: CaseParams, k, h, lam, phase_sign: int = DEFAULT_PHASE_SIGN):
    """Transform kernel ``|Cos(k, h)|^{lam - rho} chi(m(k^{-1} h))``."""
    p = case.p
    k = np.asarray(k)
    h = np.asarray(h)
    x = _ct(k[..., :, :p]) @ h[..., :, :p]
    det_x = np.linalg.det(x)
    if np.any(det_x == 0) and (complex(lam) - case.rho).real <= 0:
        raise KernelSingular("det X = 0 with Re(lam - rho) <= 0")
    out = kernel_from_det(case, det_x, lam, phase_sign)
    return out[()] if np.ndim(out) == 0 else out


def chi_L(case: CaseParams, m, tol: float = 1e-10):
    """Character of ``m = diag(A, B)`` in L: ``det A`` (real) or ``det(A)^l``."""
    m = np.asarray(m)
    p = case.p
    if np.abs(m[..., :p, p:]).max(initial=0) > tol or np.abs(m[..., p:, :p]).max(initial=0) > tol:
        raise NotInL("off-diagonal blocks are not zero")
    det_a = np.linalg.det(m[..., :p, :p])
    if case.field == "R":
        return det_a.real
    return det_a ** case.l


def torus_point(case: CaseParams, t):
    """Rotation by angles ``t_j`` in the planes (e_j, e_{q+j})."""
    t = np.asarray(t, dtype=float)
    p, N = case.p, case.dim
    if t.shape[-1] != p:
        raise ValueError(f"need {p} angles")
    out = np.zeros(t.shape[:-1] + (N, N))
    out[..., :, :] = np.eye(N)
    c, s = np.cos(t), np.sin(t)
    top = np.arange(p)
    bot = N - p + np.arange(p)
    out[..., top, top] = c
    out[..., bot, bot] = c
    out[..., top, bot] = -s
    out[..., bot, top] = s
    return out.astype(_dtype(case))


def delta_density(case: CaseParams, t):
    """``prod over positive roots |2 sin alpha(t)|^{m_alpha}``."""
    t = np.asarray(t, dtype=float)
    out = np.ones(t.shape[:-1])
    for coeffs, mult in root_datum(case).roots:
        if mult == 0:
            continue
        arg = t @ np.asarray(coeffs, dtype=float)
        out = out * np.abs(2.0 * np.sin(arg)) ** mult
    return out


def section_smallest(case: CaseParams, k):
    """Section on the smallest K-type, normalised to 1 at the identity."""
    det = leading_block_det(case, k)
    if case.field == "R":
        return det.real if np.iscomplexobj(det) else det
    if case.l >= 0:
        return np.conj(det) ** case.l
    return det ** (-case.l)


def pi_action(case: CaseParams, lam, g, f, k):
    """``(pi_lam(g) f)(k) = chi(m)^{-1} a^{-lam - rho} f(kappa)`` from ``g^{-1} k``."""
    lam = complex(lam)
    gk = np.linalg.inv(np.asarray(g)) @ np.asarray(k)
    dec = kp_decompose(case, gk)
    return np.conj(dec.chi_phase) * np.exp((-lam - case.rho) * dec.log_a) * f(dec.kappa)


def random_l(case: CaseParams, rng: np.random.Generator, size: int | None = None):
    """Haar-ish random element of L = S(O(p) x O(q)) or S(U(p) x U(q))."""
    p, q = case.p, case.q

    def block(n):
        shape = (n, n) if size is None else (size, n, n)
        if case.field == "R":
            z = rng.standard_normal(shape)
        else:
            z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        qm, r = np.linalg.qr(z)
        d = np.diagonal(r, axis1=-2, axis2=-1)
        return qm * (d / np.abs(d))[..., None, :]

    a, b = block(p), block(q)
    det_a = np.linalg.det(a)
    det_b = np.linalg.det(b)
    # fix det A det B = 1 by rotating the phase of the first column of B
    fix = 1.0 / (det_a * det_b)
    b[..., :, 0] = b[..., :, 0] * np.asarray(fix)[..., None]
    shape = (case.dim, case.dim) if size is None else (size, case.dim, case.dim)
    m = np.zeros(shape, dtype=_dtype(case))
    m[..., :p, :p] = a
    m[..., p:, p:] = b
    return m


def random_g_near_identity(case: CaseParams, rng: np.random.Generator, scale: float = 0.3):
    """``expm`` of a random traceless matrix with operator norm about ``scale``."""
    N = case.dim
    if case.field == "R":
        x = rng.standard_normal((N, N))
    else:
        x = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
    x = x - np.trace(x) / N * np.eye(N)
    x *= scale / np.linalg.norm(x, 2)
    return expm(x)
