"""Command-line front door: render scenes, dump roots, trace orbits, serve."""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import imageio
from .errors import (NoConvergence, SceneConstraintError, SceneFormatError)
from .render import CONVERGED, colorize, render_scene
from .roots import find_all_roots, verify_root_claims
from .orbit import trace_orbit
from .poly import partial_sum, szego_sum
from .scenefile import load_scene

EXIT_BAD_SCENE = 2
EXIT_RENDER_FAIL = 3


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("EXPOGRAPH_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="expograph",
                                     description="Polynomiograph renderer and explorer")
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="render a scene file to an image")
    p_render.add_argument("scene")
    p_render.add_argument("-o", "--output", required=True)
    p_render.add_argument("--format", choices=("ppm", "png"), default="ppm")
    p_render.add_argument("--workers", type=int, default=_default_workers())

    p_roots = sub.add_parser("roots", help="print roots and claim checks")
    p_roots.add_argument("kind", choices=("partial_sum", "szego"))
    p_roots.add_argument("n", type=int)

    p_orbit = sub.add_parser("orbit", help="trace one seed under the scene's iteration")
    p_orbit.add_argument("scene")
    p_orbit.add_argument("--z0", required=True, help="seed as re,im")
    p_orbit.add_argument("--steps", type=int, default=100)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--port", type=int, default=8650)
    p_serve.add_argument("--workers", type=int, default=_default_workers())
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "render":
            return cmd_render(args.scene, args.output, args.format, args.workers)
        if args.command == "roots":
            return cmd_roots(args.kind, args.n)
        if args.command == "orbit":
            return cmd_orbit(args.scene, args.z0, args.steps)
        return cmd_serve(args.port, args.workers)
    except (SceneFormatError, SceneConstraintError) as exc:
        print(f"error: invalid scene: {exc}", file=sys.stderr)
        return EXIT_BAD_SCENE
    except NoConvergence as exc:
        print(f"error: render failed: {exc}", file=sys.stderr)
        return EXIT_RENDER_FAIL


def cmd_render(scene_path: str, out_path: str, fmt: str, workers: int) -> int:
    scene = load_scene(scene_path)
    t0 = time.perf_counter()
    grid = render_scene(scene, workers=workers)
    img = colorize(grid, scene.polynomial().degree, scene.palette_id)
    data = imageio.write_ppm(img) if fmt == "ppm" else imageio.write_png(img)
    with open(out_path, "wb") as fh:
        fh.write(data)
    wall = time.perf_counter() - t0
    npix = grid.status.size
    pct = 100.0 * np.count_nonzero(grid.status == CONVERGED) / npix
    print(f"pixels={npix} converged={pct:.1f}% wall={wall:.2f}s", file=sys.stderr)
    return 0


def cmd_roots(kind: str, n: int) -> int:
    if n < 1:
        print("error: invalid scene: n must be >= 1", file=sys.stderr)
        return EXIT_BAD_SCENE
    try:
        poly = partial_sum(n) if kind == "partial_sum" else szego_sum(n)
    except ValueError as exc:
        print(f"error: invalid scene: {exc}", file=sys.stderr)
        return EXIT_BAD_SCENE
    rs = find_all_roots(poly)
    report = verify_root_claims(kind, n, rs)
    doc = report.as_dict()
    doc["residuals"] = [float(r) for r in rs.residuals]
    doc["derivative_moduli"] = [float(d) for d in rs.derivative_moduli]
    print(json.dumps(doc))
    return 0


def cmd_orbit(scene_path: str, z0_text: str, steps: int) -> int:
    scene = load_scene(scene_path)
    try:
        re_s, im_s = z0_text.split(",")
        z0 = complex(float(re_s), float(im_s))
    except ValueError:
        print("error: invalid scene: --z0 must be re,im", file=sys.stderr)
        return EXIT_BAD_SCENE
    rs = find_all_roots(scene.polynomial())
    trace = trace_orbit(scene, rs, z0, steps)
    for k, z, res in trace.points:
        print(json.dumps([k, z.real, z.imag, res]))
    print(json.dumps({"status": trace.status, "root_index": trace.root_index}))
    return 0


def cmd_serve(port: int, workers: int) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(render_workers=workers), host="0.0.0.0", port=port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
