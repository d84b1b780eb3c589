"""Probe individual orbits of the quadratic partial sum under Newton.

Run:  python3 demos/03_orbit_probe.py

Seeds in the upper half plane converge to -1+i, seeds in the lower half
to -1-i, and seeds on the real axis (the perpendicular bisector of the
roots) never settle: the origin even lands on a point with vanishing
derivative after one step.
"""
import expograph as eg

scene = eg.Scene(eg.PartialSumSpec(2), eg.BasinsMode(eg.FamilyParams(2, 1.0)),
                 eg.Viewport(-1 + 0j, 4.0, 64, 64))
rs = eg.find_all_roots(scene.polynomial())

for seed in (2 + 1j, 2 - 1j, 0j, 5 + 0j):
    trace = eg.trace_orbit(scene, rs, seed, max_steps=40)
    print(f"seed {seed}: {trace.status}"
          + (f" -> root {rs.roots[trace.root_index]}" if trace.root_index is not None else ""))
    for k, z, res in trace.points[:6]:
        print(f"   k={k:<3} z = {z.real:+.6f} {z.imag:+.6f}i   |p(z)| = {res:.2e}")
    if len(trace.points) > 6:
        print(f"   ... {len(trace.points) - 6} more steps")
