import json

import pytest
from fastapi.testclient import TestClient

import expograph as eg
from expograph.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def _scene_doc(cols=32, rows=32, alpha=(1.0, 0.0)):
    return {
        "poly": {"kind": "partial_sum", "n": 2},
        "mode": {"kind": "basins", "m": 2, "alpha": list(alpha)},
        "viewport": {"center": [-1, 0], "width": 4.0, "cols": cols, "rows": rows},
    }


def test_render_png_dimensions(client):
    resp = client.post("/render", json=_scene_doc())
    assert resp.status_code == 200
    assert resp.headers["content-type"] == "image/png"
    img = eg.read_png(resp.content)
    assert (img.width, img.height) == (32, 32)


def test_render_matches_cli_pixels(client):
    resp = client.post("/render", json=_scene_doc())
    scene = eg.scene_from_dict(_scene_doc())
    grid = eg.render_scene(scene)
    img = eg.colorize(grid, 2, scene.palette_id)
    assert eg.read_png(resp.content).pixels == img.pixels


def test_render_identical_bytes_for_identical_requests(client):
    a = client.post("/render", json=_scene_doc())
    b = client.post("/render", json=_scene_doc())
    assert a.content == b.content


def test_render_alpha_out_of_disc(client):
    resp = client.post("/render", json=_scene_doc(alpha=(2.5, 0.0)))
    assert resp.status_code == 422
    assert "alpha" in resp.json()["error"]


def test_render_tile_cap(client):
    resp = client.post("/render", json=_scene_doc(cols=5000))
    assert resp.status_code == 422


def test_render_bad_body(client):
    resp = client.post("/render", content=b"{nope",
                       headers={"content-type": "application/json"})
    assert resp.status_code == 400
    assert "error" in resp.json()
    doc = _scene_doc()
    doc["surprise"] = 1
    assert client.post("/render", json=doc).status_code == 400


def test_roots_endpoint(client):
    resp = client.get("/roots", params={"kind": "partial_sum", "n": 2})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["all_simple"] is True
    got = [[round(r, 9), round(i, 9)] for r, i in doc["roots"]]
    assert got == [[-1, -1], [-1, 1]]

    resp3 = client.get("/roots", params={"kind": "szego", "n": 3})
    assert resp3.status_code == 200
    assert all(r * r + i * i < 1 for r, i in resp3.json()["roots"])


def test_roots_missing_n(client):
    assert client.get("/roots", params={"kind": "partial_sum"}).status_code == 400
    assert client.get("/roots", params={"kind": "szego", "n": "x"}).status_code == 400
    assert client.get("/roots", params={"kind": "szego", "n": 0}).status_code == 422


def test_orbit_endpoint(client):
    body = {"scene": {k: v for k, v in _scene_doc().items() if k != "viewport"},
            "z0": [0.0, 0.0]}
    resp = client.post("/orbit", json=body)
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["status"] == "singular"
    assert doc["points"][0][:3] == [0, 0.0, 0.0]
    assert doc["points"][1][:3] == [1, -1.0, 0.0]


def test_orbit_converges(client):
    body = {"scene": _scene_doc(), "z0": [0.0, 1.5], "max_steps": 50}
    doc = client.post("/orbit", json=body).json()
    assert doc["status"] == "converged"
    k, re, im, res = doc["points"][-1]
    assert abs(complex(re, im) - (-1 + 1j)) < 1e-6


def test_orbit_bad_body(client):
    assert client.post("/orbit", json={"z0": [0, 0]}).status_code == 400
    body = {"scene": _scene_doc(), "z0": "zero"}
    assert client.post("/orbit", json=body).status_code == 400
