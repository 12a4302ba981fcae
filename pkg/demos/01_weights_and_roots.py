"""Which K-types carry the transform, and what the root data says about them.

Run:  python demos/01_weights_and_roots.py
"""

from cosgrass import enumerate_weights, make_case, mu0, omega, root_datum, s_set

for case in (make_case("R", 2, 3), make_case("C", 2, 2, 1), make_case("C", 1, 3, -2)):
    rd = root_datum(case)
    print(case.label(), f"rho = {case.rho}", f"k = {case.k}")
    print("  multiplicities (short, medium, long):", rd.multiplicities)
    print("  rho_k:", [str(x) for x in rd.rho_k])
    print("  smallest weight:", mu0(case))
    for mu in enumerate_weights(case, 8):
        print(f"    mu = {mu!s:10} omega = {omega(case, mu)!s:6} neighbours = {s_set(case, mu)}")
    print()

# The real case needs p = 2; anything else is rejected with the reason.
try:
    make_case("R", 3, 4)
except ValueError as exc:
    print("rejected:", exc)
