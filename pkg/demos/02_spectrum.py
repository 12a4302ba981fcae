"""Eigenvalues from the closed form, and the same numbers rebuilt step by step.

The recursion multiplies the smallest eigenvalue by one ratio per +2 e_j
step.  Poles and removable points of the closed form are reported by status.
"""

from cosgrass import Status, enumerate_weights, eta_closed, eta_recursive, make_case, sg_ratio, step_ratio

case = make_case("C", 1, 2, 1)
print("Rank one, (C,1,2,l=1): eta_(1)(lam) = 8 / (lam (lam + 2))")
for lam in (2, 4, 6, 3 + 1j):
    v = eta_closed(case, (1,), lam)
    print(f"  lam = {lam!s:7} eta = {v.eta:.12g}  [{v.status.value}]  8/(lam(lam+2)) = {8 / (lam * (lam + 2)):.12g}")

print("\nPole and removable points:")
for lam in (0, -2, 4):
    v = eta_closed(case, (1,), lam)
    print(f"  lam = {lam:3}: status {v.status.value}", "" if v.status is Status.POLE else f"value {v.eta.real:.12g}")

case = make_case("C", 2, 3, 3)
lam = 5.3 + 0.8j
print(f"\n{case.label()} at lam = {lam}: closed vs recursive")
for mu in enumerate_weights(case, 14):
    a, b = eta_closed(case, mu, lam), eta_recursive(case, mu, lam)
    print(f"  {mu!s:9} {a.eta:.10g}  rel diff {abs(a.eta - b.eta) / abs(a.eta):.1e}  path {b.path}")

case = make_case("R", 2, 3)
print("\nThe Casimir-based ratio reproduces the step ratio:")
print("  sg_ratio  =", sg_ratio(case, (3, 1), (3, 3), 4.5))
print("  step_ratio=", step_ratio(case, (3, 1), 2, 4.5))
