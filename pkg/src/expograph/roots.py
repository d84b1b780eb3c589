"""Global root finding and Voronoi-cell (nearest root) assignment.

Aberth-Ehrlich simultaneous iteration finds all roots jointly; indices
are made stable by sorting lexicographically on (re, im).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .poly import Polynomial, eval_with_derivs

_SWEEP_CAP = 200
_STEP_TOL = 1e-13
_RESIDUAL_TOL = 1e-10
_PHASE_OFFSET = 0.4


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    residuals: np.ndarray
    derivative_moduli: np.ndarray

    def __len__(self) -> int:
        return self.roots.size


def cauchy_bound(p: Polynomial) -> float:
    """1 + max |c_k| / |c_n|; every root has smaller modulus."""
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    c = p.coeffs
    return 1.0 + float(np.max(np.abs(c[:-1])) / abs(c[-1]))


def find_all_roots(p: Polynomial, phase: float = _PHASE_OFFSET) -> RootSet:
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    n = p.degree
    radius = (1.0 + cauchy_bound(p)) / 2.0
    angles = 2.0 * np.pi * np.arange(n) / n + phase
    z = radius * np.exp(1j * angles)

    for _ in range(_SWEEP_CAP):
        pz, dp = eval_with_derivs(p, z, 1)
        # Newton ratio; a zero derivative gets nudged off the bad point
        bad = dp == 0
        if np.any(bad):
            z = np.where(bad, z * (1 + 1e-8) + 1e-8, z)
            pz, dp = eval_with_derivs(p, z, 1)
        w = pz / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        corr = w / (1.0 - w * s)
        z = z - corr
        if np.all(np.abs(corr) < _STEP_TOL * (1.0 + np.abs(z))):
            break
    else:
        resid = np.abs(p(z))
        if np.max(resid) > _RESIDUAL_TOL * max(1.0, float(np.max(np.abs(p.coeffs)))):
            raise NoConvergence(
                f"root iteration hit {_SWEEP_CAP} sweeps, max residual {np.max(resid):.3g}"
            )

    order = np.lexsort((z.imag, z.real))
    z = z[order]
    pz, dp = eval_with_derivs(p, z, 1)
    rs = RootSet(z, np.abs(pz), np.abs(dp))
    rs.roots.flags.writeable = False
    return rs


def nearest_root(rs: RootSet, w: complex) -> tuple[int, float]:
    """Index and distance of the Euclidean-nearest root; ties take the
    lowest index."""
    if len(rs) == 0:
        raise ValueError("empty root set")
    d = np.abs(rs.roots - complex(w))
    idx = int(np.argmin(d))
    return idx, float(d[idx])


def nearest_root_grid(rs: RootSet, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized nearest_root over an array of points."""
    d = np.abs(w[..., None] - rs.roots)
    idx = np.argmin(d, axis=-1)
    return idx, np.take_along_axis(d, idx[..., None], axis=-1)[..., 0]


_SIMPLE_TOL = 1e-8


@dataclass(frozen=True)
class RootClaimsReport:
    kind: str  # "partial_sum" | "szego"
    n: int
    all_simple: bool
    bounds_hold: bool
    roots: np.ndarray

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "all_simple": self.all_simple,
            "bounds_hold": self.bounds_hold,
            "roots": [[float(r.real), float(r.imag)] for r in self.roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def verify_root_claims(kind: str, n: int, rs: RootSet) -> RootClaimsReport:
    """Check simplicity and the modulus bounds for the two named families.

    partial_sum: 0 < |theta| < n for every root; szego: |theta| < 1.
    Violations are report content, never errors.
    """
    if kind not in ("partial_sum", "szego"):
        raise ValueError(f"unknown kind {kind!r}")
    moduli = np.abs(rs.roots)
    all_simple = bool(np.all(rs.derivative_moduli > _SIMPLE_TOL))
    if kind == "partial_sum":
        bounds = bool(np.all((moduli > 0) & (moduli < n)))
    else:
        bounds = bool(np.all(moduli < 1))
    return RootClaimsReport(kind, n, all_simple, bounds, rs.roots)
