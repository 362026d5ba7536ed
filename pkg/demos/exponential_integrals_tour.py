"""
Exponential-type integrals in practice
======================================

Ei, li, E_1, Si and Ci: values, identities, and the one real zero of Ei.
"""

import math

import numpy as np

from tribessel import ci, e1_complex, ei, li, si

# ---- the principal-value exponential integral -------------------------------
print("Ei at a few points:")
for x in (-2.0, -0.5, 0.5, 1.0, 4.0):
    print(f"  Ei({x:+.1f}) = {ei(x):+.15f}")

# ---- li(x) = Ei(log x), the logarithmic integral ----------------------------
# li(2) is the textbook constant 1.04516378...
print(f"\nli(2) = {li(2.0):.15f}")

# the identity li(e^x) = Ei(x) ties two independent code paths together
x = 1.7
print(f"li(e^{x}) - Ei({x}) = {li(math.exp(x)) - ei(x):.2e}")

# ---- Ei has exactly one real zero, near x = 0.3725 --------------------------
lo, hi = 0.3, 0.45
for _ in range(60):
    mid = 0.5 * (lo + hi)
    lo, hi = (mid, hi) if ei(mid) < 0 else (lo, mid)
root = 0.5 * (lo + hi)
print(f"\nzero of Ei: x0 = {root:.10f}   Ei(x0) = {ei(root):+.2e}")

# ---- E_1 on the cut plane ----------------------------------------------------
# For real x > 0, E_1(x) = -Ei(-x); for complex z the continued fraction
# takes over once the series stops converging quickly.
print("\nE_1 checks:")
print(f"  E_1(1) + Ei(-1) = {e1_complex(1.0).real + ei(-1.0):.2e}")
z = 2.0 + 1.0j
print(f"  E_1(2+i) = {e1_complex(z):.15f}")
print(f"  z e^z E_1(z) at z = 50 (should approach 1): "
      f"{(50 * math.exp(50) * e1_complex(50.0)).real:.6f}")

# ---- sine and cosine integrals ----------------------------------------------
# Si saturates at pi/2; Ci decays like sin(x)/x.
print("\nSi and Ci on a coarse grid:")
for x in (1.0, 10.0, 100.0):
    print(f"  x = {x:6.1f}: Si = {si(x):.12f}   Ci = {ci(x):+.12f}")
print(f"  pi/2 = {math.pi / 2:.12f}")

# Si(x) is also the integral of j_0 from 0 to x, which is how the
# oscillatory quadrature elsewhere in the package is sanity-checked.
xs = np.linspace(1e-6, 40 * math.pi, 200001)
riemann = np.trapezoid(np.sin(xs) / xs, xs)
print(f"\ncrude Riemann sum for Si(40 pi): {riemann:.10f}"
      f"   si(40 pi) = {si(40 * math.pi):.10f}")
