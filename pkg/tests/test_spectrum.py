import cmath

import pytest
from hypothesis import given, settings, strategies as st

from cosgrass import (
    DimensionMismatch,
    NotInLattice,
    NotNeighbors,
    Status,
    enumerate_weights,
    eta_closed,
    eta_initial,
    eta_recursive,
    evaluate_grid,
    make_case,
    mu0,
    s_set,
    sg_ratio,
    step_ratio,
)
from cosgrass.spectrum import big_g, mu_factor, sign_c
from cosgrass.verify import lambda_probe_points
from cosgrass.weights import all_paths

from conftest import MATRIX

R23 = make_case("R", 2, 3)
C121 = make_case("C", 1, 2, 1)

lam_strategy = st.builds(complex, st.floats(-12, 12), st.floats(0.05, 12))


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(abs(b), 1e-300)


@pytest.mark.parametrize("case,lam,want", [(R23, 1.5, 1.0), (R23, 3.5, 0.1), (C121, 2, 1.0), (R23, 4.5, 0.05)])
def test_eta_initial_examples(case, lam, want):
    assert close(eta_initial(case, lam).eta, want)


def test_eta_initial_rank_one_formula():
    for lam in (2.5, 3 + 1j, 7.25):
        assert close(eta_initial(C121, lam).eta, 8 / (lam * (lam + 2)))


def test_normalisation(case):
    assert abs(eta_initial(case, case.rho - case.k).eta - 1) < 1e-10


@pytest.mark.parametrize(
    "case,mu,lam,want", [(C121, (1,), 4, 1 / 3), (C121, (3,), 6, 1 / 30), (R23, (3, 1), 4.5, 0.00625)]
)
def test_eta_closed_examples(case, mu, lam, want):
    assert close(eta_closed(case, mu, lam).eta, want, 1e-13)
    assert close(eta_recursive(case, mu, lam).eta, want, 1e-13)


def test_eta_closed_errors():
    with pytest.raises(NotInLattice):
        eta_closed(R23, (2, 2), 3.0)
    with pytest.raises(DimensionMismatch):
        eta_closed(R23, (1,), 3.0)


def test_pole_status():
    # eta_(1)(lam) = 8 / (lam (lam + 2)) for (C,1,2,1)
    assert eta_closed(C121, (1,), 0).status is Status.POLE
    assert eta_closed(C121, (1,), -2).status is Status.POLE
    assert eta_initial(C121, 0).status is Status.POLE


def test_removable_point_matches_neighbourhood():
    v = eta_closed(C121, (1,), 4)
    assert v.status is Status.REMOVABLE
    assert close(v.eta, 1 / 3, 1e-14)
    near = eta_closed(C121, (1,), 4 + 1e-7).eta
    assert abs(near - v.eta) < 1e-7


def test_residue_and_perturb_agree(case):
    for mu in enumerate_weights(case, 10):
        for shift in range(0, 8):
            lam = case.rho - case.k + shift
            a = eta_closed(case, mu, lam)
            b = eta_closed(case, mu, lam, method="perturb")
            if a.status is Status.REMOVABLE:
                assert abs(a.eta - b.eta) < 1e-6 * max(1, abs(a.eta))


def test_step_ratio_examples():
    assert step_ratio(R23, (1, 1), 1, 3.5) == 0
    assert close(step_ratio(R23, (1, 1), 2, 3.5), 1 / 6)


def test_step_ratio_large_lambda(case):
    mu = mu0(case)
    for j in range(1, case.p + 1):
        assert abs(step_ratio(case, mu, j, 1e12) - 1) < 1e-9


def test_step_ratio_pole():
    # denominator lam + mu_j + rho - d(j-1) vanishes
    assert cmath.isinf(step_ratio(R23, (1, 1), 1, -3.5))


def test_recursive_at_mu0(case):
    for lam in lambda_probe_points(case, 6):
        assert eta_recursive(case, mu0(case), lam).eta == eta_initial(case, lam).eta


def test_recursive_reports_path():
    v = eta_recursive(R23, (5, 3), 6.1)
    assert v.path == (0, 0, 1)


def test_sg_examples():
    assert sg_ratio(R23, (1, 1), (3, 1), 3.5) == 0
    assert sg_ratio(R23, (3, 1), (3, 1), 2.2 + 1j) == 1
    with pytest.raises(NotNeighbors):
        sg_ratio(R23, (1, 1), (5, 1), 3.0)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(MATRIX), st.data(), lam_strategy)
def test_sg_matches_step(case, data, lam):
    mu = data.draw(st.sampled_from(enumerate_weights(case, 16)))
    ups = [nu for nu in s_set(case, mu) if sum(nu) == sum(mu) + 2]
    nu = data.draw(st.sampled_from(ups))
    j = next(i for i in range(case.p) if nu[i] != mu[i]) + 1
    assert abs(sg_ratio(case, mu, nu, lam) - step_ratio(case, mu, j, lam)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(MATRIX), st.data(), lam_strategy)
def test_closed_equals_recursive(case, data, lam):
    mu = data.draw(st.sampled_from(enumerate_weights(case, 20)))
    a = eta_closed(case, mu, lam).eta
    b = eta_recursive(case, mu, lam).eta
    assert abs(a - b) <= 1e-9 * max(abs(a), 1e-300)


def test_path_independence(case):
    for mu in enumerate_weights(case, 14):
        for lam in lambda_probe_points(case, 4):
            vals = [eta_recursive(case, mu, lam, p).eta for p in all_paths(case, mu)]
            assert all(abs(v - vals[0]) <= 1e-10 * abs(vals[0]) for v in vals)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(MATRIX), lam_strategy)
def test_mu_independent_factor(case, lam):
    g = big_g(case, lam).eta
    for mu in enumerate_weights(case, 12):
        rest = sign_c(case, mu) * mu_factor(case, mu, lam).eta
        assert abs(eta_closed(case, mu, lam).eta - g * rest) <= 1e-9 * abs(g * rest)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(MATRIX), lam_strategy)
def test_conjugation(case, lam):
    for mu in enumerate_weights(case, 10):
        a = eta_closed(case, mu, lam.conjugate()).eta
        b = eta_closed(case, mu, lam).eta.conjugate()
        assert abs(a - b) <= 1e-12 * max(abs(b), 1e-300)


def test_evaluate_grid_order():
    mus = enumerate_weights(R23, 6)
    rows = evaluate_grid(R23, mus, [3.0, 4.0])
    assert [r[0] for r in rows] == [m for m in mus for _ in range(2)]
    assert [r[1] for r in rows[:2]] == [3.0, 4.0]
    rec = evaluate_grid(R23, mus, [3.0], method="recursive")
    assert all(close(a[2].eta, b[2].eta, 1e-12) for a, b in zip(evaluate_grid(R23, mus, [3.0]), rec))
