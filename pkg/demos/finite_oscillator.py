#!/usr/bin/env python3
"""The finite-dimensional harmonic oscillator versus the equispaced ladder.

Solves the spectrum at dim 401 for several frequencies, shows where and how
it departs from (k + 1/2) * omega, fits the linear growth of the top
eigenvalue with dimension, and traces the build-up of the normalized ground
level toward its limiting value 1/2.
"""

import numpy as np

import gpolab as g

print("spectrum at dim 401 versus the equispaced ladder (k + 1/2) * omega\n")
for omega in (0.5, 1.0, 2.0, 10.0):
    spec = g.OscillatorSpec(dim=g.Dimension(200), omega_freq=omega)
    result = g.spectrum(spec)
    normalized = result.eigenvalues / omega
    print(
        f"  omega = {omega:5.1f}:  lmin/omega = {normalized[0]:.6f}, "
        f"level 10 = {normalized[10]:.4f} (ladder 10.5), "
        f"lmax/omega = {normalized[-1]:.2f} "
        f"(bound {g.eigenvalue_bound(200, omega) / omega:.2f})"
    )

print("\nlow end matches the ladder, top end exceeds it:")
result = g.spectrum(g.OscillatorSpec(dim=g.Dimension(200), omega_freq=1.0))
for k in (0, 1, 2, 100, 399, 400):
    print(f"  k = {k:3d}:  lambda_k = {result.eigenvalues[k]:10.4f}   ladder = {k + 0.5:7.1f}")

print("\ntop eigenvalue grows linearly with dimension (omega = 1):")
rows = g.sweep([25, 50, 100, 150, 200], [1.0])
dims = np.array([r.n for r in rows], dtype=float)
tops = np.array([r.lambda_max_over_omega for r in rows])
slope, intercept = np.polyfit(dims, tops, 1)
residual = tops - (slope * dims + intercept)
r_squared = 1 - (residual**2).sum() / ((tops - tops.mean()) ** 2).sum()
for r in rows:
    print(f"  dim = {r.n:3d}:  lmax/omega = {r.lambda_max_over_omega:8.3f}")
print(f"  fit: slope {slope:.4f} per dimension, R^2 = {r_squared:.6f}")

print("\nnormalized ground level builds up to 1/2 (larger omega saturates later):")
for omega in (1.0, 5.0, 10.0):
    levels = []
    for l in (5, 10, 20, 40, 200):
        value = g.spectrum(g.OscillatorSpec(dim=g.Dimension(l), omega_freq=omega)).lambda_min / omega
        levels.append(f"dim {2*l+1:3d}: {value:.6f}")
    print(f"  omega = {omega:5.1f}:  " + "   ".join(levels))

print("\nfrequency inversion leaves the normalized spectrum unchanged:")
hi = g.spectrum(g.OscillatorSpec(dim=g.Dimension(50), omega_freq=4.0)).eigenvalues / 4.0
lo = g.spectrum(g.OscillatorSpec(dim=g.Dimension(50), omega_freq=0.25)).eigenvalues * 4.0
print(f"  max |spec(omega=4)/4 - spec(omega=1/4)*4| = {g.max_norm(hi - lo):.2e}")
