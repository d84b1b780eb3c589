"""HTTP facade for the explorer UI.

Stateless: every request carries the full scene, and responses for a
given body are pixel-identical to the CLI's output for the same scene.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .errors import (NoConvergence, SceneConstraintError, SceneFormatError)
from .imageio import write_png
from .orbit import trace_orbit
from .poly import partial_sum, szego_sum
from .render import colorize, render_scene
from .roots import find_all_roots, verify_root_claims
from .scenefile import scene_from_dict

MAX_TILE = 1024
DEFAULT_PORT = 8650


def _error(status: int, message: str) -> Response:
    return Response(json.dumps({"error": message}), status_code=status,
                    media_type="application/json")


def create_app(render_workers: int = 1, cors_origins=("*",)) -> FastAPI:
    app = FastAPI(title="expograph")
    app.add_middleware(CORSMiddleware, allow_origins=list(cors_origins),
                       allow_methods=["*"], allow_headers=["*"])

    async def _body_json(request: Request):
        try:
            return json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise SceneFormatError(f"invalid JSON body: {exc}") from exc

    @app.post("/render")
    async def render(request: Request):
        try:
            doc = await _body_json(request)
            scene = scene_from_dict(doc)
        except SceneFormatError as exc:
            return _error(400, str(exc))
        except SceneConstraintError as exc:
            return _error(422, str(exc))
        v = scene.viewport
        if v.cols > MAX_TILE or v.rows > MAX_TILE:
            return _error(422, f"tile exceeds {MAX_TILE}x{MAX_TILE}")
        try:
            grid = render_scene(scene, workers=render_workers)
        except NoConvergence as exc:
            return _error(500, str(exc))
        img = colorize(grid, scene.polynomial().degree, scene.palette_id)
        return Response(write_png(img), media_type="image/png")

    @app.get("/roots")
    async def roots(request: Request):
        kind = request.query_params.get("kind")
        n_text = request.query_params.get("n")
        if kind is None or n_text is None:
            return _error(400, "kind and n are required")
        if kind not in ("partial_sum", "szego"):
            return _error(400, f"unknown kind {kind!r}")
        try:
            n = int(n_text)
        except ValueError:
            return _error(400, "n must be an integer")
        if n < 1:
            return _error(422, "n must be >= 1")
        try:
            poly = partial_sum(n) if kind == "partial_sum" else szego_sum(n)
        except ValueError as exc:
            return _error(422, str(exc))
        try:
            rs = find_all_roots(poly)
        except NoConvergence as exc:
            return _error(500, str(exc))
        doc = verify_root_claims(kind, n, rs).as_dict()
        doc["residuals"] = [float(r) for r in rs.residuals]
        doc["derivative_moduli"] = [float(d) for d in rs.derivative_moduli]
        return Response(json.dumps(doc), media_type="application/json")

    @app.post("/orbit")
    async def orbit(request: Request):
        try:
            doc = await _body_json(request)
            if not isinstance(doc, dict) or "scene" not in doc or "z0" not in doc:
                return _error(400, "body needs 'scene' and 'z0'")
            scene_doc = doc["scene"]
            if isinstance(scene_doc, dict) and "viewport" not in scene_doc:
                # orbits do not rasterize; any viewport satisfies the model
                scene_doc = dict(scene_doc)
                scene_doc["viewport"] = {"center": [0, 0], "width": 1.0,
                                         "cols": 1, "rows": 1}
            scene = scene_from_dict(scene_doc)
            z0_pair = doc["z0"]
            if (not isinstance(z0_pair, list) or len(z0_pair) != 2
                    or not all(isinstance(x, (int, float)) for x in z0_pair)):
                return _error(400, "z0 must be a [re, im] pair")
            max_steps = doc.get("max_steps", 100)
            if not isinstance(max_steps, int) or max_steps < 1 or max_steps > 10000:
                return _error(422, "max_steps must be in [1, 10000]")
        except SceneFormatError as exc:
            return _error(400, str(exc))
        except SceneConstraintError as exc:
            return _error(422, str(exc))
        try:
            rs = find_all_roots(scene.polynomial())
        except NoConvergence as exc:
            return _error(500, str(exc))
        trace = trace_orbit(scene, rs, complex(z0_pair[0], z0_pair[1]), max_steps)
        return Response(json.dumps(trace.as_dict()), media_type="application/json")

    return app
