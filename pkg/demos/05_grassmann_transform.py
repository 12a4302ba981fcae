"""Haar Monte Carlo on SO(5): the smallest section is an eigenvector.

Gr_2(R^5) is realised as SO(5)/S(O(2) x O(3)).  The transform is estimated at
two points k and divided by f(k); both ratios should match eta at lam = 4.
"""

import numpy as np

from cosgrass import eta_closed, haar_sample, make_case, mu0, section_smallest
from cosgrass.oracle import mc_transform_at

case = make_case("R", 2, 3)
lam = 4.0
f = lambda k: section_smallest(case, k)
eta = eta_closed(case, mu0(case), lam).eta.real
rng = np.random.default_rng(3)
points = [np.eye(5), haar_sample(case, rng)]
print(f"eta_mu0({lam:g}) = {eta:.6f}")
for k in points:
    res = mc_transform_at(case, lam, f, k, n_samples=300_000, seed=5)
    ratio = res.estimate.real / f(k)
    print(f"  f(k) = {f(k):+.4f}  transform/f(k) = {ratio:.6f} +- {res.std_error / abs(f(k)):.1e}")
