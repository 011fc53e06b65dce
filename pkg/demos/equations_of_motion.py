#!/usr/bin/env python3
"""Finite-difference equations of motion and their series closure.

The Heisenberg rate of each conjugate variable equals the central-difference
derivative of the Hamiltonian plus an odd-order nested-commutator tail.
This script prints the tail residual order by order for the oscillator and
shows the immediate closure for a Hamiltonian that depends on one variable
only.
"""

import numpy as np

import gpolab as g

dim = g.Dimension(10)
gens = g.build_generators(dim)
pair = g.build_conjugate_pair(dim)
h = g.build_hamiltonian(g.OscillatorSpec(dim=dim, omega_freq=1.0), pair)

print(f"oscillator at dim {dim.n}, omega = 1: defect of the truncated equations of motion\n")
reports = {var: g.eom_residual(h, pair, gens, var, 25) for var in ("pi", "phi")}
print("  order   pi equation     phi equation")
for order in sorted(reports["pi"].residual_norm_by_order):
    print(
        f"  {order:5d}   {reports['pi'].residual_norm_by_order[order]:11.3e}"
        f"   {reports['phi'].residual_norm_by_order[order]:12.3e}"
    )

print("\nderivative operators on simple inputs (max-norms):")
print(f"  d(identity)/dphi                 = {g.max_norm(g.dh_dphi(np.eye(dim.n), gens, pair)):.2e}")
mom_only = g.matrix_power(pair.pi, 2) / 2
print(f"  d(pi^2/2)/dphi                   = {g.max_norm(g.dh_dphi(mom_only, gens, pair)):.2e}")
print(f"  d(pi^2/2)/dpi vs rate of phi     = "
      f"{g.max_norm(g.dh_dpi(mom_only, gens, pair) - g.heisenberg_rate(mom_only, pair.phi)):.2e} "
      f"(tail terms only)")

closed = g.eom_residual(mom_only, pair, gens, "pi", 3)
print(
    f"\nmomentum-only Hamiltonian closes immediately: residual at order 1 is "
    f"{closed.residual_norm_by_order[1]:.2e}"
)

print("\naway from the wrap rows the phi rate converges on the pi derivative:")
for l in (5, 10, 20, 40):
    d = g.Dimension(l)
    gn = g.build_generators(d)
    pr = g.build_conjugate_pair(d)
    hh = g.build_hamiltonian(g.OscillatorSpec(dim=d, omega_freq=1.0), pr)
    lhs = g.heisenberg_rate(hh, pr.phi)
    rhs = g.dh_dpi(hh, gn, pr)
    central = np.abs(d.indices()) <= l / 2
    block = np.ix_(central, central)
    ratio = g.max_norm((lhs - rhs)[block]) / g.max_norm(rhs[block])
    print(f"  dim {d.n:3d}: relative defect on the central block = {ratio:.4f}")
