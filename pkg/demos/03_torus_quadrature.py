"""Smallest eigenvalue by integrating over the maximal torus.

The transform of the smallest section at the identity reduces to an integral
of prod cos(t_j)^{lam - rho + k} against the density delta(t) over one Weyl
chamber.  Gauss-Legendre on the chamber converges spectrally.
"""

from cosgrass import eta_initial, reference_cases
from cosgrass.oracle import torus_eta_initial

for case in reference_cases():
    base = case.rho - case.k
    print(case.label())
    for i in range(0, 6, 2):
        lam = base + i
        res = torus_eta_initial(case, lam, n_points=60)
        exact = eta_initial(case, lam).eta.real
        print(f"  lam = {lam:5.2f}  torus {res.estimate:.15f}  closed {exact:.15f}  bound {res.error_bound:.1e}")
