"""Scene model and the per-pixel rasterizer.

Two modes: basin coloring (iterate one family member from every pixel)
and Voronoi coloring (evaluate the basic sequence at every pixel and
color by its limit).  The per-pixel kernels work on flat numpy arrays;
rows are partitioned into fixed-height bands so worker count never
changes the output.

Internally the kernels run a normalized form of the determinant
recurrence, E_m = D_m / p^m, so that p(z)^(i-1) factors never overflow
far from the roots; the iteration only ever consumes ratios, which the
normalization leaves intact.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .family import FamilyParams
from .imageio import ImageBuffer
from .poly import Polynomial, eval_with_derivs, multiply, partial_sum, szego_sum, unity_factor
from .roots import RootSet, find_all_roots, nearest_root_grid

# outcome status codes (also the wire encoding)
CONVERGED = 0
MAXITER = 1
DIVERGED = 2
SINGULAR = 3

NO_ROOT = 0xFFFF

_BAND_ROWS = 32
_RESCALE_HI = 1e100
_RESCALE_LO = 1e-100


# ---------------------------------------------------------------------------
# scene model

@dataclass(frozen=True)
class Viewport:
    center: complex
    width: float
    cols: int
    rows: int

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError("viewport width must be > 0")
        if self.cols < 1 or self.rows < 1:
            raise ValueError("viewport must have at least one pixel")

    @property
    def height(self) -> float:
        # square pixels
        return self.width * self.rows / self.cols


@dataclass(frozen=True)
class PartialSumSpec:
    n: int

    def build(self) -> Polynomial:
        return partial_sum(self.n)


@dataclass(frozen=True)
class SzegoSpec:
    n: int

    def build(self) -> Polynomial:
        return szego_sum(self.n)


@dataclass(frozen=True)
class SzegoUnitySpec:
    n: int

    def build(self) -> Polynomial:
        return multiply(szego_sum(self.n), unity_factor(self.n))


@dataclass(frozen=True)
class ExplicitSpec:
    coeffs: tuple

    def build(self) -> Polynomial:
        return Polynomial(np.asarray(self.coeffs, dtype=np.complex128))


@dataclass(frozen=True)
class BasinsMode:
    params: FamilyParams


@dataclass(frozen=True)
class VoronoiMode:
    m_max: int

    def __post_init__(self):
        if not 2 <= self.m_max <= 500:
            raise ValueError(f"m_max must be in [2, 500], got {self.m_max}")


@dataclass(frozen=True)
class Scene:
    poly_spec: object
    mode: object
    viewport: Viewport
    max_iter: int = 256
    eps_root: float = 1e-9
    eps_step: float = 1e-12
    divergence_radius: float = 1e8
    palette_id: str = "default"

    def __post_init__(self):
        if not 0 < self.eps_root <= 1e-2:
            raise ValueError("eps_root must be in (0, 1e-2]")
        if not 0 < self.eps_step <= 1e-2:
            raise ValueError("eps_step must be in (0, 1e-2]")
        if self.divergence_radius < 1e3:
            raise ValueError("divergence_radius must be >= 1e3")
        if not 1 <= self.max_iter <= 10000:
            raise ValueError("max_iter must be in [1, 10000]")

    def polynomial(self) -> Polynomial:
        return self.poly_spec.build()


@dataclass
class OutcomeGrid:
    """Per-pixel classification; arrays are (rows, cols)."""

    status: np.ndarray
    root_index: np.ndarray
    iterations: np.ndarray

    def to_bytes(self) -> bytes:
        rows, cols = self.status.shape
        rec = np.empty(rows * cols,
                       dtype=[("status", "u1"), ("root", "<u2"), ("iter", "<u2")])
        rec["status"] = self.status.ravel()
        root = np.where(self.status == CONVERGED, self.root_index, NO_ROOT)
        rec["root"] = root.ravel().astype(np.uint16)
        rec["iter"] = self.iterations.ravel().astype(np.uint16)
        return rec.tobytes()


def pixel_to_complex(v: Viewport, col: int, row: int) -> complex:
    """Complex value at the center of pixel (col, row); row 0 is the top."""
    re = v.center.real + v.width * ((col + 0.5) / v.cols - 0.5)
    im = v.center.imag + v.height * (0.5 - (row + 0.5) / v.rows)
    return complex(re, im)


def _grid_band(v: Viewport, row0: int, row1: int) -> np.ndarray:
    cols = np.arange(v.cols)
    rows = np.arange(row0, row1)
    re = v.center.real + v.width * ((cols + 0.5) / v.cols - 0.5)
    im = v.center.imag + v.height * (0.5 - (rows + 0.5) / v.rows)
    return re[None, :] + 1j * im[:, None]


# ---------------------------------------------------------------------------
# normalized recurrence helpers

def _term_arrays(poly: Polynomial, z: np.ndarray, depth: int):
    """t[i] = (-1)^(i-1) p^(i)(z) / (i! p(z)) for i = 1..min(degree, depth).

    These drive E_m = sum t[i] E_{m-i} with E_m = D_m / p^m.
    """
    n = poly.degree
    top = min(n, depth)
    derivs = eval_with_derivs(poly, z, top)
    pz = derivs[0]
    terms = [None]
    fact, sign = 1.0, 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(1, top + 1):
            fact *= i
            terms.append(sign * derivs[i] / (fact * pz))
            sign = -sign
    return pz, terms


class _EWindow:
    """Rolling window of E values with per-pixel rescaling."""

    def __init__(self, shape, depth: int):
        self.depth = max(depth, 2)
        self.vals = [np.ones(shape, dtype=np.complex128)]  # E_0

    def push(self, terms) -> None:
        top = min(len(terms) - 1, len(self.vals))
        e = terms[1] * self.vals[-1]
        for i in range(2, top + 1):
            e = e + terms[i] * self.vals[-i]
        self.vals.append(e)
        if len(self.vals) > self.depth + 1:
            self.vals.pop(0)
        peak = np.abs(self.vals[0])
        for v in self.vals[1:]:
            np.maximum(peak, np.abs(v), out=peak)
        mask = (peak > _RESCALE_HI) | ((peak < _RESCALE_LO) & (peak > 0))
        if np.any(mask):
            scale = np.where(mask, peak, 1.0)
            for j, v in enumerate(self.vals):
                self.vals[j] = v / scale

    def ratio(self) -> tuple[np.ndarray, np.ndarray]:
        """(E_{m-2}/E_{m-1}, singular mask) after m-1 pushes."""
        denom = self.vals[-1]
        singular = denom == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            r = self.vals[-2] / denom
        return r, singular


def _family_step_grid(poly: Polynomial, z: np.ndarray, m: int, alpha: complex):
    """One B_{m,alpha} step on an array of points.

    Returns (z_next, singular_mask); non-finite results are left for the
    caller's divergence handling.
    """
    pz, terms = _term_arrays(poly, z, m - 1)
    win = _EWindow(z.shape, poly.degree)
    for _ in range(m - 1):
        win.push(terms)
    ratio, singular = win.ratio()
    znew = z - alpha * ratio
    # a pixel sitting exactly on a root has pz == 0; it is a fixed point
    exact = pz == 0
    if np.any(exact):
        znew = np.where(exact, z, znew)
        singular = singular & ~exact
    return znew, singular


# ---------------------------------------------------------------------------
# basin rendering

def render_basins(scene: Scene, rs: RootSet, workers: int = 1) -> OutcomeGrid:
    if not isinstance(scene.mode, BasinsMode):
        raise ValueError("scene mode is not basins")
    poly = scene.polynomial()
    return _run_bands(scene, lambda r0, r1: _basins_band(scene, poly, rs, r0, r1), workers)


def _basins_band(scene: Scene, poly: Polynomial, rs: RootSet, row0: int, row1: int):
    v = scene.viewport
    params = scene.mode.params
    z = _grid_band(v, row0, row1).ravel()
    npix = z.size
    status = np.full(npix, MAXITER, dtype=np.uint8)
    root_index = np.zeros(npix, dtype=np.int32)
    iterations = np.full(npix, scene.max_iter, dtype=np.int32)
    active = np.arange(npix)

    near_tol = 10.0 * scene.eps_root
    resolve_tol = math.sqrt(scene.eps_root)

    for step in range(scene.max_iter + 1):
        if active.size == 0:
            break
        za = z[active]
        pz = poly(za)
        # (a) residual + proximity convergence
        small = np.abs(pz) < scene.eps_root
        if np.any(small):
            idx, dist = nearest_root_grid(rs, za[small])
            hit = dist < near_tol
            conv = active[small][hit]
            status[conv] = CONVERGED
            root_index[conv] = idx[hit]
            iterations[conv] = step
            keep = np.ones(active.size, dtype=bool)
            keep[np.flatnonzero(small)[hit]] = False
            active = active[keep]
            za = z[active]
        if active.size == 0:
            break
        # (c) divergence
        far = np.abs(za) > scene.divergence_radius
        if np.any(far):
            gone = active[far]
            status[gone] = DIVERGED
            iterations[gone] = step
            active = active[~far]
            za = z[active]
        if active.size == 0 or step == scene.max_iter:
            break

        znew, singular = _family_step_grid(poly, za, params.m, params.alpha)
        # (d) singular denominator
        if np.any(singular):
            sing = active[singular]
            status[sing] = SINGULAR
            iterations[sing] = step
            active = active[~singular]
            za, znew = za[~singular], znew[~singular]
        bad = ~np.isfinite(znew)
        if np.any(bad):
            gone = active[bad]
            status[gone] = DIVERGED
            iterations[gone] = step
            active, za, znew = active[~bad], za[~bad], znew[~bad]
        if active.size == 0:
            break
        # (b) step-size stagnation: resolve by nearest root
        tiny = np.abs(znew - za) < scene.eps_step
        if np.any(tiny):
            stag = active[tiny]
            idx, _dist = nearest_root_grid(rs, znew[tiny])
            resid = np.abs(poly(znew[tiny]))
            ok = resid < resolve_tol
            status[stag] = np.where(ok, CONVERGED, MAXITER).astype(np.uint8)
            root_index[stag] = idx
            iterations[stag] = step + 1
            z[stag] = znew[tiny]
            active, znew = active[~tiny], znew[~tiny]
        z[active] = znew

    iterations = np.minimum(iterations, scene.max_iter)
    shape = (row1 - row0, v.cols)
    return (status.reshape(shape), root_index.reshape(shape), iterations.reshape(shape))


# ---------------------------------------------------------------------------
# Voronoi (basic sequence) rendering

def render_voronoi(scene: Scene, rs: RootSet, workers: int = 1) -> OutcomeGrid:
    if not isinstance(scene.mode, VoronoiMode):
        raise ValueError("scene mode is not voronoi")
    poly = scene.polynomial()
    return _run_bands(scene, lambda r0, r1: _voronoi_band(scene, poly, rs, r0, r1), workers)


def _sequence_scan(poly: Polynomial, w: np.ndarray, m_max: int, on_value):
    """Drive the basic sequence over an array of seeds.

    Calls on_value(m, b, defined) for m = 2..m_max, where b holds B_m(w)
    and defined marks entries with a usable denominator.
    """
    pz, terms = _term_arrays(poly, w, m_max)
    exact = pz == 0
    win = _EWindow(w.shape, poly.degree)
    win.push(terms)  # E_1
    for m in range(2, m_max + 1):
        ratio, singular = win.ratio()
        with np.errstate(invalid="ignore"):
            b = w - ratio
        b = np.where(exact, w, b)
        defined = (~singular | exact) & np.isfinite(b)
        on_value(m, b, defined)
        if m < m_max:
            win.push(terms)


def _voronoi_band(scene: Scene, poly: Polynomial, rs: RootSet, row0: int, row1: int):
    v = scene.viewport
    m_max = scene.mode.m_max
    w = _grid_band(v, row0, row1).ravel()
    npix = w.size

    last = np.full(npix, complex("nan"), dtype=np.complex128)
    last_ok = np.zeros(npix, dtype=bool)

    def record_last(m, b, defined):
        if m == m_max:
            last[:] = b
            last_ok[:] = defined

    _sequence_scan(poly, w, m_max, record_last)

    status = np.where(last_ok, CONVERGED, SINGULAR).astype(np.uint8)
    root_index = np.zeros(npix, dtype=np.int32)
    iterations = np.full(npix, m_max, dtype=np.int32)
    ok = last_ok
    if np.any(ok):
        idx, _d = nearest_root_grid(rs, last[ok])
        root_index[ok] = idx

    target = np.full(npix, complex("nan"), dtype=np.complex128)
    target[ok] = rs.roots[root_index[ok]]
    first_hit = np.full(npix, m_max, dtype=np.int32)
    unset = np.ones(npix, dtype=bool)

    def record_first(m, b, defined):
        with np.errstate(invalid="ignore"):
            close = defined & unset & (np.abs(b - target) < scene.eps_root)
        first_hit[close] = m
        unset[close] = False

    _sequence_scan(poly, w, m_max, record_first)
    iterations = np.where(ok, first_hit, iterations)

    shape = (row1 - row0, v.cols)
    return (status.reshape(shape), root_index.reshape(shape), iterations.reshape(shape))


# ---------------------------------------------------------------------------
# band scheduling / top-level entry

def _run_bands(scene: Scene, band_fn, workers: int) -> OutcomeGrid:
    v = scene.viewport
    status = np.empty((v.rows, v.cols), dtype=np.uint8)
    root_index = np.empty((v.rows, v.cols), dtype=np.int32)
    iterations = np.empty((v.rows, v.cols), dtype=np.int32)
    bands = [(r, min(r + _BAND_ROWS, v.rows)) for r in range(0, v.rows, _BAND_ROWS)]

    def run(band):
        r0, r1 = band
        s, ri, it = band_fn(r0, r1)
        status[r0:r1] = s
        root_index[r0:r1] = ri
        iterations[r0:r1] = it

    if workers <= 1 or len(bands) == 1:
        for band in bands:
            run(band)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, bands))
    return OutcomeGrid(status, root_index, iterations)


def render_scene(scene: Scene, rs: RootSet | None = None, workers: int = 1) -> OutcomeGrid:
    if rs is None:
        rs = find_all_roots(scene.polynomial())
    if isinstance(scene.mode, BasinsMode):
        return render_basins(scene, rs, workers)
    return render_voronoi(scene, rs, workers)


# ---------------------------------------------------------------------------
# coloring

_ITER_CAP = 64


def colorize(grid: OutcomeGrid, degree: int, palette_id: str = "default") -> ImageBuffer:
    """Hue by root index, brightness by iteration count.

    Non-converged pixels: MaxIter and Singular go black, Diverged white.
    """
    rows, cols = grid.status.shape
    hue = (grid.root_index % max(degree, 1)) / max(degree, 1)
    value = 1.0 - np.minimum(grid.iterations, _ITER_CAP) / _ITER_CAP
    rgb = _hsv_to_rgb(hue, np.ones_like(hue, dtype=float), value)
    conv = grid.status == CONVERGED
    out = np.where(conv[..., None], rgb, 0.0)
    out[grid.status == DIVERGED] = 1.0
    pixels = np.clip(np.rint(out * 255.0), 0, 255).astype(np.uint8)
    return ImageBuffer(cols, rows, pixels.tobytes())


def _hsv_to_rgb(h, s, v):
    h6 = (h % 1.0) * 6.0
    i = np.floor(h6).astype(int) % 6
    f = h6 - np.floor(h6)
    p = v * (1.0 - s)
    q = v * (1.0 - s * f)
    t = v * (1.0 - s * (1.0 - f))
    sel = [i == j for j in range(6)]
    r = np.select(sel, [v, q, p, p, t, v])
    g = np.select(sel, [t, v, v, q, p, p])
    b = np.select(sel, [p, p, t, v, v, q])
    return np.stack([r, g, b], axis=-1)
