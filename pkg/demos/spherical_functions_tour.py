"""
A tour of the spherical Bessel routines
=======================================

Values, recurrences, and the plane-wave expansion, printed as a
narrative. Run as a script; no plotting libraries required.
"""

import math

import numpy as np

from tribessel import (
    plane_wave_partial_sum,
    sph_bessel_j,
    sph_bessel_n,
    sph_hankel1,
)

# ---- first kind: j_0 is the familiar sinc ----------------------------------
print("j_0(x) compared with sin(x)/x:")
for x in (0.5, 2.0, 7.0):
    print(f"  x = {x:4.1f}: j_0 = {sph_bessel_j(0, x):+.12f}"
          f"   sin(x)/x = {math.sin(x) / x:+.12f}")

# ---- small arguments: j_l(x) ~ x^l / (2l+1)!! -------------------------------
# Downward recurrence keeps these accurate even when the value underflows
# toward 1e-80 and beyond.
print("\nleading-order behaviour at x = 0.01:")
dfact = 1.0
for l in range(0, 6):
    dfact *= 2 * l + 1
    ratio = sph_bessel_j(l, 0.01) / (0.01**l / dfact)
    print(f"  l = {l}: j_l / (x^l/(2l+1)!!) = {ratio:.8f}")

# ---- second kind blows up at the origin -------------------------------------
print("\nn_l(0.1) grows like -(2l-1)!!/x^(l+1):")
for l in range(0, 4):
    print(f"  l = {l}: n_l = {sph_bessel_n(l, 0.1):+.6e}")

# ---- the three-term recurrence ties neighbouring orders together ------------
x = 3.7
l = 6
lhs = sph_bessel_j(l - 1, x) + sph_bessel_j(l + 1, x)
rhs = (2 * l + 1) / x * sph_bessel_j(l, x)
print(f"\nrecurrence residual at l = {l}, x = {x}: {abs(lhs - rhs):.2e}")

# ---- h_l^(1) on the positive axis -------------------------------------------
# h_0^(1)(x) = -i e^{ix} / x, so |x h_0^(1)| should be exactly 1.
print("\n|x h_0^(1)(x)| (should be 1):")
for x in (1.0, 4.0, 12.0):
    print(f"  x = {x:5.1f}: {abs(x * sph_hankel1(0, x)):.12f}")

# ---- plane wave: e^{i k r u} = sum_l (2l+1) i^l j_l(kr) P_l(u) --------------
# Truncating the sum a couple dozen orders past kr reproduces the
# exponential to near machine precision.
print("\nplane-wave partial sums vs exp(i kr u):")
for kr in (1.0, 10.0, 20.0):
    l_max = math.ceil(kr) + 25
    worst = 0.0
    for u in np.linspace(-1.0, 1.0, 9):
        got = plane_wave_partial_sum(kr, u, l_max)
        want = complex(math.cos(kr * u), math.sin(kr * u))
        worst = max(worst, abs(got - want))
    print(f"  kr = {kr:4.1f}, l_max = {l_max}: worst error {worst:.2e}")
