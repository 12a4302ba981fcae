"""Acceptance criteria 1-10.

Each test records one PASS/FAIL line; the lines are printed at the end of a
pytest run (see conftest.py) and also when this file is run directly:

    python tests/test_acceptance.py
"""

import subprocess
import sys
import time

import pytest

from cosgrass import eta_initial, make_case, reference_cases
from cosgrass.verify import (
    closed_vs_recursive,
    path_spread,
    section_contract,
    sg_vs_step,
    suite_equivariance,
    suite_gamma,
    suite_sphere,
    suite_torus,
    suite_transform,
)

MATRIX = reference_cases()
SEED = 7
REPORT: dict[int, str] = {}


def record(num: int, title: str, measured: float, tol: float, seconds: float, limit: float | None):
    ok = measured < tol and (limit is None or seconds < limit)
    budget = f" (limit {limit:g} s)" if limit else ""
    REPORT[num] = (
        f"{'PASS' if ok else 'FAIL'} criterion {num:2d} {title}: "
        f"measured {measured:.3e} tol {tol:.1e}, {seconds:.1f} s{budget}"
    )
    print(REPORT[num])
    return ok


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def test_c01_normalisation():
    with Timer() as t:
        worst = max(abs(eta_initial(c, c.rho - c.k).eta - 1) for c in MATRIX)
    assert record(1, "normalisation at rho-k", worst, 1e-10, t.seconds, 1.0)


def test_c02_closed_vs_recursive():
    with Timer() as t:
        rel = max(closed_vs_recursive(c, 20, 50)[0] for c in MATRIX)
        paths = max(path_spread(c, 20) for c in MATRIX)
    # both gates folded into one ratio against their own tolerance
    score = max(rel / 1e-9, paths / 1e-10)
    assert record(2, f"closed vs recursive (rel {rel:.1e}, paths {paths:.1e})", score, 1.0, t.seconds, 30.0)


def test_c03_sg_ratio():
    with Timer() as t:
        worst = sg_vs_step(MATRIX, SEED, 100)
    assert record(3, "sg_ratio vs step_ratio", worst, 1e-12, t.seconds, 1.0)


def test_c04_torus():
    with Timer() as t:
        checks = suite_torus(MATRIX, n_points=100)
    worst = max(c.measured for c in checks)
    assert record(4, "torus quadrature vs eta_initial", worst, 1e-6, t.seconds, 60.0)


def test_c05_projective():
    with Timer() as t:
        checks = suite_sphere(make_case("C", 1, 2, 1), 5_000_000, SEED)
    worst = max(c.measured for c in checks)
    assert record(5, "projective eigenfunctions, z-score", worst, 3.0, t.seconds, 120.0)


def test_c06_grassmann_mc():
    with Timer() as t:
        checks = suite_transform(make_case("R", 2, 3), 1_000_000, SEED)
    worst = max(c.measured for c in checks)
    assert len(checks) == 2
    assert record(6, "Grassmann MC eigenvector, z-score", worst, 3.0, t.seconds, 60.0)


def test_c07_intertwining():
    with Timer() as t:
        checks = suite_equivariance([make_case("R", 2, 3), make_case("C", 1, 2, 1)], 1_000_000, SEED)
    worst = max(c.measured for c in checks if not c.name.startswith("section"))
    assert record(7, "intertwining residual / sigma", worst, 3.0, t.seconds, 120.0)


def test_c08_section_contract():
    with Timer() as t:
        worst = max(section_contract(c, SEED, 100) for c in MATRIX)
    assert record(8, "section contract", worst, 1e-12, t.seconds, None)


def test_c09_gamma():
    with Timer() as t:
        checks = [c for c in suite_gamma(SEED) if c.name != "reflection"]
    worst = max(c.measured for c in checks)
    assert record(9, "gamma layer", worst, 1e-13, t.seconds, None)


def test_c10_determinism(tmp_path):
    cmd = [sys.executable, "-m", "cosgrass", "verify", "all", "--seed", str(SEED), "--samples", "20000"]
    with Timer() as t:
        runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and len(runs[0].stdout) > 0
    codes_ok = all(r.returncode in (0, 2) for r in runs)
    assert record(10, "verify all twice, byte-identical", 0.0 if same and codes_ok else 1.0, 0.5, t.seconds, None)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
