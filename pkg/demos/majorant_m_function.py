"""The bounded-function majorant supremum and its two computations.

m(r) is the largest possible value of sum |a_n| r^n over functions bounded
by 1 on the disc.  On [1/3, 1/sqrt(2)] it has the closed form

    m(r) = (3 - sqrt(8 (1 - r^2))) / r,

realized by disc automorphisms (a - z)/(1 - az) whose majorant sum is
a + (1 - a^2) r / (1 - ar).  Cauchy-Schwarz caps it at 1/sqrt(1 - r^2),
with equality exactly at r = 1/sqrt(2) where m = sqrt(2).
"""

import numpy as np

from blochbohr import bombieri_m_infty, mobius_majorant_sup

print("r        closed form   Mobius family   Cauchy cap")
for r in np.linspace(1.0 / 3.0, 1.0 / np.sqrt(2.0), 11):
    closed = bombieri_m_infty(float(r))
    realized = mobius_majorant_sup(float(r))
    cap = 1.0 / np.sqrt(1.0 - r * r)
    print(f"{r:.5f}  {closed:.9f}   {realized:.9f}    {cap:.9f}")

print("\nendpoints: m(1/3) = 1 (the classical Bohr radius),",
      "m(1/sqrt(2)) = sqrt(2) =", bombieri_m_infty(1.0 / np.sqrt(2.0)))

# past the closed-form window the family still provides a lower bound and
# the cap still holds, with the gap reopening away from 1/sqrt(2)
print("\nr        family sup    Cauchy cap    gap")
for r in (0.75, 0.8, 0.9):
    realized = mobius_majorant_sup(r)
    cap = 1.0 / np.sqrt(1.0 - r * r)
    print(f"{r:.2f}     {realized:.9f}   {cap:.9f}   {cap - realized:.3e}")
