import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from cosgrass import Status, log_gamma, siegel_log_gamma, siegel_ratio
from cosgrass.specialfn import is_gamma_pole

coord = st.floats(-10, 10, allow_nan=False)
box = st.builds(complex, coord, coord)


def G(z):
    return log_gamma(z).exp()


def rel(a, b):
    return abs(a - b) / abs(b)


def test_half():
    v = log_gamma(0.5)
    assert v.status is Status.FINITE
    assert abs(v.value - 0.5723649429247001) < 1e-15


def test_three():
    assert abs(log_gamma(3).value - math.log(2)) < 1e-15


@pytest.mark.parametrize("z", [0, -1, -2, -17])
def test_poles(z):
    assert log_gamma(z).status is Status.POLE


def test_near_pole_is_finite():
    assert log_gamma(-2 + 1e-6).status is Status.FINITE


@given(box)
def test_functional_equation(z):
    assume(not is_gamma_pole(z) and abs(z) > 1e-3)
    ratio = cmath.exp(log_gamma(z + 1).value - log_gamma(z).value)
    assert rel(ratio, z) < 1e-12


@given(box)
def test_conjugate_symmetry(z):
    assume(not is_gamma_pole(z) and abs(z.imag) > 1e-9)
    a = log_gamma(z.conjugate()).value
    b = log_gamma(z).value.conjugate()
    assert abs(a - b) < 1e-12 * max(1.0, abs(b))


@given(box)
def test_against_mpmath(z):
    assume(not is_gamma_pole(z) and min(abs(z - round(z.real)), 1) > 1e-6)
    want = complex(mpmath.loggamma(mpmath.mpc(z.real, z.imag)))
    got = log_gamma(z).value
    assert abs(cmath.exp(got - want) - 1) < 1e-13


def test_imaginary_part_principal():
    for z in (-7.5 + 0.1j, 30 + 40j, -20.3 - 5j):
        assert -math.pi < log_gamma(z).value.imag <= math.pi


def test_siegel_reference():
    v = siegel_log_gamma(2, 1, 3)
    assert abs(cmath.exp(v.value) - 2.6586807763582737) < 1e-13 * 2.66
    assert abs(cmath.exp(v.value) - 2.6586807763) < 1e-9


@given(st.sampled_from([1, 2]), box)
def test_siegel_rank_one(d, z):
    assume(not is_gamma_pole(z))
    assert siegel_log_gamma(1, d, z).value == log_gamma(z).value


def test_siegel_pole():
    assert siegel_log_gamma(2, 2, 1).status is Status.POLE


@pytest.mark.parametrize("p,d", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_siegel_pole_set(p, d):
    # poles exactly on z = -m + (d/2)(j-1)
    for m in range(4):
        for j in range(1, p + 1):
            assert siegel_log_gamma(p, d, -m + 0.5 * d * (j - 1)).status is Status.POLE
    for z in (0.25, 1.75 + 0.5j, -3.3):
        assert siegel_log_gamma(p, d, z).status is Status.FINITE


def test_ratio_examples():
    r = siegel_ratio(2, 1, [2.5], [1])
    assert r.status is Status.FINITE and abs(r.value - 0.75) < 1e-14
    assert abs(siegel_ratio(2, 2, [1.3 + 2j], [1.3 + 2j]).value - 1) < 1e-15
    assert siegel_ratio(1, 2, [-1], [3]).status is Status.POLE


def test_ratio_zero_when_denominator_pole():
    r = siegel_ratio(1, 1, [3], [-2])
    assert r.status is Status.FINITE and r.value == 0


@pytest.mark.parametrize("m", [0, 1, 2, 5])
def test_removable_limit(m):
    # Gamma(-m + e) / Gamma(-m + 2 e) -> 2 as e -> 0
    r = siegel_ratio(1, 1, [-m], [-m], num_directions=[1.0], den_directions=[2.0])
    assert r.status is Status.REMOVABLE
    assert abs(r.value - 2) < 1e-14
    p = siegel_ratio(1, 1, [-m], [-m], num_directions=[1.0], den_directions=[2.0], method="perturb")
    assert abs(p.value - 2) < 1e-6


def test_ratio_vector_arguments():
    r = siegel_ratio(2, 2, [[3, 4]], [[3, 4]])
    assert abs(r.value - 1) < 1e-15
    with pytest.raises(ValueError):
        siegel_ratio(2, 2, [[3, 4, 5]], [1])
