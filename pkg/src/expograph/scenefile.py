"""JSON scene documents.

Complex numbers travel as [re, im] pairs.  Unknown keys are rejected so
typos fail loudly instead of silently taking defaults.
"""
from __future__ import annotations

import json

from .errors import SceneConstraintError, SceneFormatError
from .family import FamilyParams
from .render import (BasinsMode, ExplicitSpec, PartialSumSpec, Scene, SzegoSpec,
                     SzegoUnitySpec, Viewport, VoronoiMode)

_TOL_KEYS = {"eps_root", "eps_step", "divergence_radius", "max_iter"}
_DEFAULT_ALPHA = complex(0.55, 0.45)


def load_scene(path: str) -> Scene:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise SceneFormatError(f"cannot read scene file: {exc}") from exc
    return loads_scene(text)


def loads_scene(text: str) -> Scene:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"invalid JSON: {exc}") from exc
    return scene_from_dict(doc)


def scene_from_dict(doc) -> Scene:
    if not isinstance(doc, dict):
        raise SceneFormatError("scene document must be a JSON object")
    _check_keys(doc, {"poly", "mode", "viewport", "tolerances", "palette"}, "scene")
    for key in ("poly", "mode", "viewport"):
        if key not in doc:
            raise SceneFormatError(f"scene is missing {key!r}")

    poly_spec = _parse_poly(doc["poly"])
    mode = _parse_mode(doc["mode"])
    viewport = _parse_viewport(doc["viewport"])
    tol = doc.get("tolerances", {})
    if not isinstance(tol, dict):
        raise SceneFormatError("tolerances must be an object")
    _check_keys(tol, _TOL_KEYS, "tolerances")
    palette = doc.get("palette", "default")
    if not isinstance(palette, str):
        raise SceneFormatError("palette must be a string")

    kwargs = {}
    for key in _TOL_KEYS:
        if key in tol:
            kwargs[key] = int(tol[key]) if key == "max_iter" else _real(tol[key], key)
    try:
        scene = Scene(poly_spec, mode, viewport, palette_id=palette, **kwargs)
        scene.polynomial()  # surfaces bad degrees at parse time
    except ValueError as exc:
        raise SceneConstraintError(str(exc)) from exc
    return scene


def scene_to_dict(scene: Scene) -> dict:
    poly = scene.poly_spec
    if isinstance(poly, PartialSumSpec):
        pdoc = {"kind": "partial_sum", "n": poly.n}
    elif isinstance(poly, SzegoSpec):
        pdoc = {"kind": "szego", "n": poly.n}
    elif isinstance(poly, SzegoUnitySpec):
        pdoc = {"kind": "szego_unity", "n": poly.n}
    else:
        pdoc = {"kind": "explicit",
                "coeffs": [[c.real, c.imag] for c in map(complex, poly.coeffs)]}
    if isinstance(scene.mode, BasinsMode):
        a = scene.mode.params.alpha
        mdoc = {"kind": "basins", "m": scene.mode.params.m, "alpha": [a.real, a.imag]}
    else:
        mdoc = {"kind": "voronoi", "m_max": scene.mode.m_max}
    v = scene.viewport
    return {
        "poly": pdoc,
        "mode": mdoc,
        "viewport": {"center": [v.center.real, v.center.imag],
                     "width": v.width, "cols": v.cols, "rows": v.rows},
        "tolerances": {"eps_root": scene.eps_root, "eps_step": scene.eps_step,
                       "divergence_radius": scene.divergence_radius,
                       "max_iter": scene.max_iter},
        "palette": scene.palette_id,
    }


def _parse_poly(doc):
    if not isinstance(doc, dict):
        raise SceneFormatError("poly must be an object")
    kind = doc.get("kind")
    if kind in ("partial_sum", "szego", "szego_unity"):
        _check_keys(doc, {"kind", "n"}, "poly")
        if "n" not in doc:
            raise SceneFormatError("poly is missing 'n'")
        n = _integer(doc["n"], "n")
        cls = {"partial_sum": PartialSumSpec, "szego": SzegoSpec,
               "szego_unity": SzegoUnitySpec}[kind]
        return cls(n)
    if kind == "explicit":
        _check_keys(doc, {"kind", "coeffs"}, "poly")
        coeffs = doc.get("coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise SceneFormatError("explicit poly needs a non-empty coeffs list")
        return ExplicitSpec(tuple(_cplx(c, "coeffs") for c in coeffs))
    raise SceneFormatError(f"unknown poly kind {kind!r}")


def _parse_mode(doc):
    if not isinstance(doc, dict):
        raise SceneFormatError("mode must be an object")
    kind = doc.get("kind")
    if kind == "basins":
        _check_keys(doc, {"kind", "m", "alpha"}, "mode")
        m = _integer(doc.get("m", 2), "m")
        alpha = _cplx(doc["alpha"], "alpha") if "alpha" in doc else _DEFAULT_ALPHA
        try:
            return BasinsMode(FamilyParams(m, alpha))
        except ValueError as exc:
            raise SceneConstraintError(str(exc)) from exc
    if kind == "voronoi":
        _check_keys(doc, {"kind", "m_max"}, "mode")
        m_max = _integer(doc.get("m_max", 30), "m_max")
        try:
            return VoronoiMode(m_max)
        except ValueError as exc:
            raise SceneConstraintError(str(exc)) from exc
    raise SceneFormatError(f"unknown mode kind {kind!r}")


def _parse_viewport(doc):
    if not isinstance(doc, dict):
        raise SceneFormatError("viewport must be an object")
    _check_keys(doc, {"center", "width", "cols", "rows"}, "viewport")
    for key in ("center", "width", "cols", "rows"):
        if key not in doc:
            raise SceneFormatError(f"viewport is missing {key!r}")
    center = _cplx(doc["center"], "center")
    width = _real(doc["width"], "width")
    cols = _integer(doc["cols"], "cols")
    rows = _integer(doc["rows"], "rows")
    try:
        return Viewport(center, width, cols, rows)
    except ValueError as exc:
        raise SceneConstraintError(str(exc)) from exc


def _check_keys(doc, allowed, where):
    extra = set(doc) - allowed
    if extra:
        raise SceneFormatError(f"unknown keys in {where}: {sorted(extra)}")


def _cplx(value, name) -> complex:
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(x, (int, float)) for x in value)):
        raise SceneFormatError(f"{name} must be a [re, im] pair")
    return complex(value[0], value[1])


def _real(value, name) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise SceneFormatError(f"{name} must be a number")
    return float(value)


def _integer(value, name) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SceneFormatError(f"{name} must be an integer")
    return value
