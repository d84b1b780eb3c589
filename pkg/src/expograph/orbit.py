"""Orbit tracing for a single seed, shared by the CLI and the service."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NonFiniteResult, SingularDenominator
from .family import basic_family_step, basic_sequence
from .render import BasinsMode, Scene
from .roots import RootSet, nearest_root


@dataclass
class OrbitTrace:
    # points are (k, z, |p(z)|)
    points: list
    status: str  # "converged" | "maxiter" | "diverged" | "singular"
    root_index: int | None = None

    def as_dict(self) -> dict:
        return {
            "points": [[k, z.real, z.imag, res] for k, z, res in self.points],
            "status": self.status,
            "root_index": self.root_index,
        }


def trace_orbit(scene: Scene, rs: RootSet, z0: complex, max_steps: int = 100) -> OrbitTrace:
    """Follow a seed under the scene's iteration.

    Basins mode iterates the family member; Voronoi mode walks the basic
    sequence, indexing entries by m.
    """
    poly = scene.polynomial()
    if isinstance(scene.mode, BasinsMode):
        return _trace_basins(scene, poly, rs, complex(z0), max_steps)
    return _trace_sequence(scene, poly, rs, complex(z0), max_steps)


def _trace_basins(scene, poly, rs, z0, max_steps):
    params = scene.mode.params
    points = []
    z = z0
    for k in range(max_steps + 1):
        res = abs(poly(z))
        points.append((k, z, float(res)))
        if res < scene.eps_root:
            idx, dist = nearest_root(rs, z)
            if dist < 10 * scene.eps_root:
                return OrbitTrace(points, "converged", idx)
        if abs(z) > scene.divergence_radius:
            return OrbitTrace(points, "diverged")
        if k == max_steps:
            break
        try:
            znew = basic_family_step(poly, z, params)
        except SingularDenominator:
            return OrbitTrace(points, "singular")
        except NonFiniteResult:
            return OrbitTrace(points, "diverged")
        if abs(znew - z) < scene.eps_step:
            idx, _dist = nearest_root(rs, znew)
            points.append((k + 1, znew, float(abs(poly(znew)))))
            if abs(poly(znew)) < scene.eps_root ** 0.5:
                return OrbitTrace(points, "converged", idx)
            return OrbitTrace(points, "maxiter")
        z = znew
    return OrbitTrace(points, "maxiter")


def _trace_sequence(scene, poly, rs, w, max_steps):
    m_max = min(scene.mode.m_max, max(max_steps, 2))
    seq = basic_sequence(poly, w, m_max)
    points = []
    last = None
    for m in range(2, m_max + 1):
        if not seq.defined[m - 2]:
            return OrbitTrace(points, "singular")
        b = seq.entry(m)
        points.append((m, b, float(abs(poly(b)))))
        last = b
    if last is None:
        return OrbitTrace(points, "maxiter")
    idx, dist = nearest_root(rs, last)
    if abs(last - rs.roots[idx]) < scene.eps_root:
        return OrbitTrace(points, "converged", idx)
    return OrbitTrace(points, "maxiter")
