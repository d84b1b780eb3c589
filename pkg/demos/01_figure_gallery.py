"""Render the four figure families into a gallery of PNGs.

Run from the repo root:  python3 demos/01_figure_gallery.py [outdir]

fig1 shows basins of attraction of the exponential partial sums under
Newton's iteration: the quadratic gives two clean half planes, higher
degrees grow fractal fringes between the parabola-shaped root arcs.
fig2 recolors the same polynomials by the limit of the basic sequence,
producing the (non-fractal) Voronoi diagram of the roots.  fig3 damps
Newton with a complex factor, which bends the basin boundaries into
Julia-set filaments.  fig4 multiplies the scaled sums by z^n - 1 so the
picture shows both the unit-disc root cluster and the unity roots.
"""
import pathlib
import sys

import expograph as eg

outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "gallery")
outdir.mkdir(parents=True, exist_ok=True)

jobs = [("fig1", range(2, 7)), ("fig2", range(2, 7)),
        ("fig3", range(2, 7)), ("fig4", range(2, 7))]

for fig, ns in jobs:
    for n in ns:
        scene = eg.figure_scene(fig, n, cols=384, rows=384)
        grid = eg.render_scene(scene, workers=4)
        img = eg.colorize(grid, scene.polynomial().degree)
        path = outdir / f"{fig}_n{n}.png"
        path.write_bytes(eg.write_png(img))
        conv = (grid.status == eg.CONVERGED).mean()
        print(f"{path}  converged {conv:.1%}")

print(f"\nwrote {sum(len(list(ns)) for _, ns in jobs)} images to {outdir}/")
