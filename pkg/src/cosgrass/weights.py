"""Highest weights of the chi-spherical K-types.

Weights are plain tuples of integers, the coordinates in the e-basis of the
torus dual.  The membership rules are

* real case (p = 2): ``mu_1 >= mu_2 >= 0`` and every ``mu_j`` odd;
* complex case: ``mu_i - mu_j`` in ``{0, 2, 4, ...}`` for ``i < j`` and
  ``mu_p`` in ``|l| + {0, 2, 4, ...}``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import DimensionMismatch, NoPath, NotInLattice
from .rootdata import CaseParams

Weight = tuple  # tuple[int, ...]

__all__ = [
    "Weight",
    "is_member",
    "mu0",
    "enumerate_weights",
    "s_set",
    "canonical_path",
    "all_paths",
    "total",
]


def total(mu: Sequence[int]) -> int:
    return int(sum(mu))


def _check_len(case: CaseParams, mu: Sequence[int]) -> None:
    if len(mu) != case.p:
        raise DimensionMismatch(f"weight has length {len(mu)}, case has rank {case.p}")


def is_member(case: CaseParams, mu: Sequence[int]) -> bool:
    _check_len(case, mu)
    if any(int(m) != m for m in mu):
        return False
    mu = [int(m) for m in mu]
    if case.field == "R":
        return all(m % 2 == 1 and m > 0 for m in mu) and all(
            mu[i] >= mu[i + 1] for i in range(len(mu) - 1)
        )
    k = case.k
    for i in range(len(mu) - 1):
        diff = mu[i] - mu[i + 1]
        if diff < 0 or diff % 2:
            return False
    last = mu[-1] - k
    return last >= 0 and last % 2 == 0


def mu0(case: CaseParams) -> Weight:
    """Smallest weight ``k (1, ..., 1)``."""
    return tuple([case.k] * case.p)


def _nonincreasing(p: int, budget: int, upper: int) -> Iterator[tuple[int, ...]]:
    if p == 0:
        yield ()
        return
    for first in range(min(upper, budget), -1, -1):
        for rest in _nonincreasing(p - 1, budget - first, first):
            yield (first,) + rest


def _sort_key(mu: Sequence[int]):
    return (total(mu), tuple(mu))


def enumerate_weights(case: CaseParams, max_total_degree: int) -> list[Weight]:
    """All lattice weights with ``|mu| <= max_total_degree`` in canonical order.

    Canonical order is by total degree, then lexicographically ascending.
    """
    if max_total_degree < 0:
        return []
    found = [mu for mu in _nonincreasing(case.p, max_total_degree, max_total_degree)
             if is_member(case, mu)]
    return sorted(found, key=_sort_key)


def _unit(p: int, j: int, step: int) -> tuple[int, ...]:
    v = [0] * p
    v[j] = step
    return tuple(v)


def _add(mu, nu):
    return tuple(a + b for a, b in zip(mu, nu))


def s_set(case: CaseParams, mu: Sequence[int]) -> list[Weight]:
    """Lattice neighbours ``mu +- 2 e_j`` together with ``mu`` itself."""
    _check_len(case, mu)
    mu = tuple(int(m) for m in mu)
    if not is_member(case, mu):
        raise NotInLattice(f"{mu} is not in the lattice for {case.label()}")
    out = {mu}
    for j in range(case.p):
        for step in (2, -2):
            nu = _add(mu, _unit(case.p, j, step))
            if is_member(case, nu):
                out.add(nu)
    return sorted(out, key=_sort_key)


def canonical_path(case: CaseParams, mu: Sequence[int]) -> list[int]:
    """Indices ``j`` (0-based) of the ``+2 e_j`` steps leading from ``mu0`` to ``mu``.

    Coordinates are raised left to right, which keeps every intermediate
    weight nonincreasing and hence inside the lattice.
    """
    _check_len(case, mu)
    mu = tuple(int(m) for m in mu)
    if not is_member(case, mu):
        raise NotInLattice(f"{mu} is not in the lattice for {case.label()}")
    cur = list(mu0(case))
    steps = []
    for j in range(case.p):
        while cur[j] < mu[j]:
            cur[j] += 2
            if not is_member(case, cur):
                raise NoPath(f"no lattice path from mu0 to {mu}")
            steps.append(j)
    if tuple(cur) != mu:
        raise NoPath(f"no lattice path from mu0 to {mu}")
    return steps


def all_paths(case: CaseParams, mu: Sequence[int], limit: int = 64) -> list[list[int]]:
    """Up to ``limit`` distinct monotone lattice paths from ``mu0`` to ``mu``."""
    mu = tuple(int(m) for m in mu)
    if not is_member(case, mu):
        raise NotInLattice(f"{mu} is not in the lattice for {case.label()}")
    paths: list[list[int]] = []

    def walk(cur, acc):
        if len(paths) >= limit:
            return
        if cur == mu:
            paths.append(list(acc))
            return
        for j in range(case.p):
            if cur[j] < mu[j]:
                nxt = _add(cur, _unit(case.p, j, 2))
                if is_member(case, nxt):
                    acc.append(j)
                    walk(nxt, acc)
                    acc.pop()

    walk(mu0(case), [])
    return paths
