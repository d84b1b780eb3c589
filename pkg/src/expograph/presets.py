"""Scene presets for the four figure families.

fig1: partial sums under Newton; fig2: partial sums under the basic
sequence (Voronoi coloring); fig3: partial sums under damped Newton with
the default alpha; fig4: Szego sums times the roots-of-unity factor
under the basic sequence.
"""
from __future__ import annotations

from .family import FamilyParams
from .render import (BasinsMode, PartialSumSpec, Scene, SzegoUnitySpec, Viewport,
                     VoronoiMode)

DEFAULT_ALPHA = complex(0.55, 0.45)
FIGURES = ("fig1", "fig2", "fig3", "fig4")


def figure_scene(fig: str, n: int, cols: int = 256, rows: int = 256,
                 max_iter: int = 256, m_max: int = 30) -> Scene:
    if fig not in FIGURES:
        raise ValueError(f"unknown figure preset {fig!r}")
    if fig == "fig4":
        # unit disc plus the unity roots
        viewport = Viewport(0j, 2.6, cols, rows)
        return Scene(SzegoUnitySpec(n), VoronoiMode(m_max), viewport)
    viewport = Viewport(0j, 2.5 * n, cols, rows)
    if fig == "fig1":
        return Scene(PartialSumSpec(n), BasinsMode(FamilyParams(2, 1.0)),
                     viewport, max_iter=max_iter)
    if fig == "fig2":
        return Scene(PartialSumSpec(n), VoronoiMode(m_max), viewport)
    return Scene(PartialSumSpec(n), BasinsMode(FamilyParams(2, DEFAULT_ALPHA)),
                 viewport, max_iter=max_iter)
