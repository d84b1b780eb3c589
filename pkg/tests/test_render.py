import numpy as np
import pytest

import expograph as eg
from expograph.roots import nearest_root_grid


def _scene_basins(n=2, m=2, alpha=1.0, center=0j, width=5.0, cols=64, rows=64,
                  max_iter=100):
    return eg.Scene(eg.PartialSumSpec(n), eg.BasinsMode(eg.FamilyParams(m, alpha)),
                    eg.Viewport(center, width, cols, rows), max_iter=max_iter)


def test_pixel_to_complex():
    v = eg.Viewport(0j, 4.0, 2, 2)
    assert eg.pixel_to_complex(v, 0, 0) == -1 + 1j
    assert eg.pixel_to_complex(v, 1, 1) == 1 - 1j
    v1 = eg.Viewport(1 + 2j, 2.0, 1, 1)
    assert eg.pixel_to_complex(v1, 0, 0) == 1 + 2j


def test_viewport_validation():
    with pytest.raises(ValueError):
        eg.Viewport(0j, -1.0, 4, 4)
    with pytest.raises(ValueError):
        eg.Viewport(0j, 1.0, 0, 4)
    assert eg.Viewport(0j, 4.0, 2, 4).height == 8.0


def test_scene_validation():
    with pytest.raises(ValueError):
        _scene_basins(max_iter=0)
    with pytest.raises(ValueError):
        eg.Scene(eg.PartialSumSpec(2), eg.VoronoiMode(1),
                 eg.Viewport(0j, 1.0, 4, 4))
    with pytest.raises(ValueError):
        eg.Scene(eg.PartialSumSpec(2), eg.VoronoiMode(30),
                 eg.Viewport(0j, 1.0, 4, 4), divergence_radius=10.0)


def test_basins_upper_half_converges_to_upper_root(p2, rs2):
    # pixel value 2 + i sits in the upper half plane
    sc = _scene_basins(center=2 + 1j, width=0.01, cols=1, rows=1)
    g = eg.render_basins(sc, rs2)
    assert g.status[0, 0] == eg.CONVERGED
    assert rs2.roots[g.root_index[0, 0]] == pytest.approx(-1 + 1j, abs=1e-8)


def test_basins_bisector_never_converges(p2, rs2):
    # 5 + 0i lies on the perpendicular bisector of the two roots
    sc = _scene_basins(center=5 + 0j, width=0.01, cols=1, rows=1)
    g = eg.render_basins(sc, rs2)
    assert g.status[0, 0] in (eg.MAXITER, eg.SINGULAR)


def test_basins_linear_one_iteration():
    p1 = eg.partial_sum(1)
    rs = eg.find_all_roots(p1)
    for m in (2, 3, 5):
        sc = eg.Scene(eg.PartialSumSpec(1), eg.BasinsMode(eg.FamilyParams(m)),
                      eg.Viewport(0.7 - 0.2j, 3.0, 4, 4))
        g = eg.render_basins(sc, rs)
        assert np.all(g.status == eg.CONVERGED)
        assert np.all(g.iterations == 1)


def test_voronoi_upper_cell(p2, rs2):
    sc = eg.Scene(eg.PartialSumSpec(2), eg.VoronoiMode(30),
                  eg.Viewport(-1 + 2j, 0.01, 1, 1))
    g = eg.render_voronoi(sc, rs2)
    assert g.status[0, 0] == eg.CONVERGED
    assert rs2.roots[g.root_index[0, 0]] == pytest.approx(-1 + 1j, abs=1e-8)


def test_voronoi_linear():
    p1 = eg.partial_sum(1)
    rs = eg.find_all_roots(p1)
    sc = eg.Scene(eg.PartialSumSpec(1), eg.VoronoiMode(2),
                  eg.Viewport(3 + 3j, 2.0, 3, 3))
    g = eg.render_voronoi(sc, rs)
    assert np.all(g.status == eg.CONVERGED)
    assert np.all(g.iterations == 2)
    assert np.all(g.root_index == 0)


def test_voronoi_product_scene_roots():
    sc = eg.Scene(eg.SzegoUnitySpec(2), eg.VoronoiMode(30),
                  eg.Viewport(0j, 2.6, 32, 32))
    poly = sc.polynomial()
    rs = eg.find_all_roots(poly)
    want = sorted([-1, 1, (-1 - 1j) / 2, (-1 + 1j) / 2],
                  key=lambda z: (z.real, z.imag))
    np.testing.assert_allclose(rs.roots, [complex(w) for w in want], atol=1e-10)
    g = eg.render_voronoi(sc, rs)
    conv = g.status == eg.CONVERGED
    assert set(np.unique(g.root_index[conv])) <= {0, 1, 2, 3}
    assert conv.mean() > 0.9


def test_half_plane_theorem_bulk(rs2):
    sc = _scene_basins(center=-1 + 0j, width=4.0, cols=128, rows=128, max_iter=100)
    g = eg.render_basins(sc, rs2)
    ims = np.array([[eg.pixel_to_complex(sc.viewport, c, r).imag
                     for c in range(128)] for r in range(128)])
    off_axis = np.abs(ims) > 0.01
    conv = g.status == eg.CONVERGED
    assert conv[off_axis].mean() >= 0.999
    root_im = rs2.roots.imag[g.root_index]
    same_side = np.sign(root_im) == np.sign(ims)
    assert np.all(same_side[off_axis & conv])


def test_voronoi_agreement_with_nearest(rng):
    for n in (2, 5):
        poly = eg.partial_sum(n)
        rs = eg.find_all_roots(poly)
        sc = eg.Scene(eg.PartialSumSpec(n), eg.VoronoiMode(30),
                      eg.Viewport(0j, 2.5 * n, 96, 96))
        g = eg.render_voronoi(sc, rs)
        pts = np.array([[eg.pixel_to_complex(sc.viewport, c, r)
                         for c in range(96)] for r in range(96)])
        d = np.abs(pts[..., None] - rs.roots)
        d_sorted = np.sort(d, axis=-1)
        margin = d_sorted[..., 1] - d_sorted[..., 0] if n > 1 else d_sorted[..., 0]
        clear = margin >= 0.05 * sc.viewport.width
        idx = np.argmin(d, axis=-1)
        agree = (g.root_index == idx)[clear & (g.status == eg.CONVERGED)]
        assert agree.mean() >= 0.99


def test_determinism_across_workers(rs2):
    sc = _scene_basins(center=-1 + 0j, width=4.0, cols=96, rows=96)
    a = eg.render_basins(sc, rs2, workers=1)
    b = eg.render_basins(sc, rs2, workers=8)
    for x, y in [(a.status, b.status), (a.root_index, b.root_index),
                 (a.iterations, b.iterations)]:
        np.testing.assert_array_equal(x, y)
    img_a = eg.colorize(a, 2)
    img_b = eg.colorize(b, 2)
    assert eg.write_ppm(img_a) == eg.write_ppm(img_b)


def test_conjugate_symmetry(rs2):
    # real coefficients: a viewport symmetric about the real axis renders
    # conjugate-symmetrically (roots swap under conjugation)
    sc = _scene_basins(center=-1 + 0j, width=4.0, cols=64, rows=64)
    g = eg.render_basins(sc, rs2)
    flipped_status = g.status[::-1]
    flipped_iter = g.iterations[::-1]
    np.testing.assert_array_equal(g.status, flipped_status)
    np.testing.assert_array_equal(g.iterations, flipped_iter)
    conv = g.status == eg.CONVERGED
    conj_map = np.array([int(np.argmin(np.abs(rs2.roots - np.conj(r))))
                         for r in rs2.roots])
    np.testing.assert_array_equal(g.root_index[conv],
                                  conj_map[g.root_index[::-1][conv]])


def test_outcome_serialization():
    status = np.array([[eg.CONVERGED, eg.MAXITER]], dtype=np.uint8)
    root = np.array([[3, 1]], dtype=np.int32)
    iters = np.array([[7, 100]], dtype=np.int32)
    blob = eg.OutcomeGrid(status, root, iters).to_bytes()
    assert len(blob) == 10
    assert blob[0] == eg.CONVERGED
    assert int.from_bytes(blob[1:3], "little") == 3
    assert int.from_bytes(blob[3:5], "little") == 7
    assert blob[5] == eg.MAXITER
    assert int.from_bytes(blob[6:8], "little") == 0xFFFF  # no root when not converged
    assert int.from_bytes(blob[8:10], "little") == 100


def test_colorize_examples():
    status = np.full((2, 2), eg.MAXITER, dtype=np.uint8)
    grid = eg.OutcomeGrid(status, np.zeros((2, 2), np.int32),
                          np.zeros((2, 2), np.int32))
    img = eg.colorize(grid, 2)
    assert img.pixels == bytes(12)

    conv = eg.OutcomeGrid(np.full((1, 2), eg.CONVERGED, np.uint8),
                          np.zeros((1, 2), np.int32), np.zeros((1, 2), np.int32))
    img2 = eg.colorize(conv, 1)
    assert img2.pixels == bytes([255, 0, 0] * 2)  # hue 0, full brightness

    div = eg.OutcomeGrid(np.full((1, 1), eg.DIVERGED, np.uint8),
                         np.zeros((1, 1), np.int32), np.zeros((1, 1), np.int32))
    assert eg.colorize(div, 1).pixels == bytes([255, 255, 255])


def test_colorize_two_hues_plus_black(rs2):
    sc = _scene_basins(center=-1 + 0j, width=4.0, cols=64, rows=64)
    g = eg.render_basins(sc, rs2)
    img = eg.colorize(g, 2)
    px = np.frombuffer(img.pixels, np.uint8).reshape(-1, 3)
    conv = (g.status == eg.CONVERGED).ravel()
    # degree 2 spreads hues at 0 (red) and 0.5 (cyan)
    red = conv & (px[:, 0] > 0) & (px[:, 1] == 0) & (px[:, 2] == 0)
    cyan = conv & (px[:, 0] == 0) & (px[:, 1] > 0) & (px[:, 1] == px[:, 2])
    black = (px == 0).all(axis=1)
    assert np.all(red | cyan | black)
    assert red.any() and cyan.any()
    assert np.unique(g.root_index[g.status == eg.CONVERGED]).size == 2
