"""The transform intertwines pi_lam(g) with pi_{-lam}(theta g).

For g near the identity, C(pi_lam(g) f) is estimated by Monte Carlo at a few
points and compared with eta * pi_{-lam}(theta g) f, which is exact.
"""

import numpy as np

from cosgrass import make_case
from cosgrass.groupops import random_g_near_identity
from cosgrass.oracle import equivariance_check

rng = np.random.default_rng(0)
for case in (make_case("R", 2, 3), make_case("C", 1, 2, 1)):
    for i in range(3):
        g = random_g_near_identity(case, rng)
        res = equivariance_check(case, 4.0, g, n_samples=200_000, seed=i)
        print(f"{case.label()} g{i}: residual {res.residual:.2e}  sigma {res.sigma:.2e}  ({res.z_score:.2f} sigma)")
