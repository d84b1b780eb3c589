"""Walk through the root geometry of the partial sums.

Run:  python3 demos/02_root_geometry.py

Checks, degree by degree: every root is simple, every modulus sits
strictly between 0 and n, and dividing the roots by n reproduces the
roots of the scaled sum, which all fall inside the unit disc.
"""
import numpy as np

import expograph as eg

print(f"{'n':>3} {'max |p(root)|':>14} {'min |theta|':>12} "
      f"{'max |theta|':>12} {'simple':>7} {'scaled in disc':>15}")

for n in range(2, 13):
    rs = eg.find_all_roots(eg.partial_sum(n))
    report = eg.verify_root_claims("partial_sum", n, rs)
    mods = np.abs(rs.roots)

    rsz = eg.find_all_roots(eg.szego_sum(n))
    in_disc = bool(np.all(np.abs(rsz.roots) < 1))

    print(f"{n:>3} {np.max(rs.residuals):>14.2e} {mods.min():>12.6f} "
          f"{mods.max():>12.6f} {str(report.all_simple):>7} {str(in_disc):>15}")

print("\nroots of the degree-6 partial sum (the parabola-like arc):")
for r in eg.find_all_roots(eg.partial_sum(6)).roots:
    print(f"  {r.real:+.6f} {r.imag:+.6f}i   |theta| = {abs(r):.6f}")
