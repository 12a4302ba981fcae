"""Complex projective space: explicit eigenfunctions checked two ways.

On CP^q the K-types are spanned by conj(z_1)^a z_2^b with a - b = l.  Monte
Carlo over the unit sphere and Gauss-Jacobi on the zonal function both
recover the closed-form eigenvalue.
"""

from cosgrass import eta_closed, make_case
from cosgrass.oracle import projective_eigen_oracle

case = make_case("C", 1, 2, 1)
for b in range(3):
    a = case.l + b
    for lam in (2.0, 4.0, 6.0):
        want = eta_closed(case, (a + b,), lam).eta.real + 0.0
        quad = projective_eigen_oracle(case, a, b, lam, method="quadrature", budget=40)
        mc = projective_eigen_oracle(case, a, b, lam, method="mc", budget=400_000, seed=1)
        z = abs(mc.estimate - want) / mc.std_error
        print(f"mu = {a + b}, lam = {lam:g}: closed {want:+.6f}  quadrature {quad.estimate.real:+.6f}"
              f"  MC {mc.estimate.real:+.6f} +- {mc.std_error:.1e} ({z:.1f} sigma)")
