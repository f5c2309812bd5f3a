"""Probing strictness of the Bloch majorant bound.

The gradient-seminorm ratio

    sup_r (1-r^2) max |(M_R f)'|  /  sup_r (1-r^2) max |f'|,

where M_R f = sum |a_n| (Rz)^n, never reaches R/sqrt(1-R^2).  A finite
family of test functions (monomials, polynomials, disc automorphisms,
degree-one Blaschke extremals) probes the claim: every member must leave a
positive gap.  Only a negative gap would be decisive.
"""

import numpy as np

from blochbohr import theorem5_gap, theorem5_ratios

for scale in (0.3, 0.5, 1.0 / np.sqrt(2.0), 0.9):
    bound = scale / np.sqrt(1.0 - scale * scale)
    ratios = theorem5_ratios(scale)
    best = max(ratios, key=ratios.get)
    print(f"R = {scale:.4f}: bound {bound:.6f}, best ratio {ratios[best]:.6f} "
          f"({best}), gap {theorem5_gap(scale):.6f}")

print("\nper-member ratios at R = 1/sqrt(2):")
for name, ratio in sorted(theorem5_ratios(1.0 / np.sqrt(2.0)).items(),
                          key=lambda kv: -kv[1]):
    print(f"  {name:<24} {ratio:.6f}")
