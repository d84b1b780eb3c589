import numpy as np
import pytest

import expograph as eg


def _quadratic_roots(c0, c1, c2):
    disc = np.sqrt(complex(c1 * c1 - 4 * c2 * c0))
    return sorted([(-c1 + disc) / (2 * c2), (-c1 - disc) / (2 * c2)],
                  key=lambda z: (z.real, z.imag))


def test_p2_roots_quadratic_formula(rs2):
    want = _quadratic_roots(1, 1, 0.5)  # -1 -/+ i
    np.testing.assert_allclose(rs2.roots, want, atol=1e-12)
    np.testing.assert_allclose(rs2.roots, [-1 - 1j, -1 + 1j], atol=1e-12)


def test_p1_root():
    rs = eg.find_all_roots(eg.partial_sum(1))
    np.testing.assert_allclose(rs.roots, [-1], atol=1e-14)


def test_s2_roots_scaled(rs2):
    rs = eg.find_all_roots(eg.szego_sum(2))
    np.testing.assert_allclose(rs.roots, rs2.roots / 2, atol=1e-12)


def test_random_quadratics_and_cubics(rng):
    for _ in range(30):
        c = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        if abs(c[2]) < 0.1 or abs(c[1] * c[1] - 4 * c[2] * c[0]) < 0.1:
            continue
        rs = eg.find_all_roots(eg.Polynomial(c))
        want = _quadratic_roots(c[0], c[1], c[2])
        np.testing.assert_allclose(rs.roots, want, atol=1e-10)
    for _ in range(30):
        # cubic oracle: numpy's companion-matrix solver, matched greedily
        c = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        if abs(c[3]) < 0.1:
            continue
        rs = eg.find_all_roots(eg.Polynomial(c))
        want = np.roots(c[::-1])
        for r in rs.roots:
            assert np.min(np.abs(want - r)) < 1e-8


def test_cauchy_bound():
    assert eg.cauchy_bound(eg.Polynomial([-1, 0, 1])) == 2
    assert eg.cauchy_bound(eg.partial_sum(2)) == 3  # 1 + max(1,1)/0.5
    assert eg.cauchy_bound(eg.partial_sum(1)) == 2


def test_cauchy_bound_contains_roots(rng):
    for n in range(2, 11):
        p = eg.partial_sum(n)
        rs = eg.find_all_roots(p)
        assert np.all(np.abs(rs.roots) < eg.cauchy_bound(p))


def test_nearest_root(rs2):
    idx, dist = eg.nearest_root(rs2, 1 + 1j)
    assert rs2.roots[idx] == pytest.approx(-1 + 1j)
    assert dist == pytest.approx(2.0)
    # exact tie resolves to the lowest index
    idx0, _ = eg.nearest_root(rs2, 0)
    assert idx0 == 0
    rs1 = eg.find_all_roots(eg.partial_sum(1))
    assert eg.nearest_root(rs1, 37 - 4j)[0] == 0


def test_nearest_root_partition(rng, rs2):
    for _ in range(200):
        w = complex(*rng.uniform(-4, 4, 2))
        d = np.abs(rs2.roots - w)
        if abs(d[0] - d[1]) < 1e-9:
            continue
        idx, dist = eg.nearest_root(rs2, w)
        assert np.count_nonzero(d == d.min()) == 1
        assert idx == int(np.argmin(d))


def test_verify_claims(rs2):
    rep = eg.verify_root_claims("partial_sum", 2, rs2)
    assert rep.all_simple and rep.bounds_hold  # |-1 +/- i| = sqrt2 < 2
    rep_s = eg.verify_root_claims("szego", 2, eg.find_all_roots(eg.szego_sum(2)))
    assert rep_s.bounds_hold  # sqrt2/2 < 1
    # n=1: |theta| = 1 = n violates the strict bound; reported, not raised
    rep1 = eg.verify_root_claims("partial_sum", 1, eg.find_all_roots(eg.partial_sum(1)))
    assert rep1.bounds_hold is False
    assert "bounds_hold" in rep_s.to_json()


def test_scaling_law():
    for n in range(2, 11):
        rp = eg.find_all_roots(eg.partial_sum(n)).roots / n
        rsz = eg.find_all_roots(eg.szego_sum(n)).roots
        # multiset match; lexicographic order can swap conjugate pairs whose
        # real parts differ only in the last bits
        used = set()
        for r in rp:
            d = np.abs(rsz - r)
            j = int(np.argmin(d))
            assert d[j] < 1e-9 and j not in used
            used.add(j)


def test_residual_bound():
    for n in range(1, 13):
        rs = eg.find_all_roots(eg.partial_sum(n))
        assert np.max(rs.residuals) < 1e-10


def test_root_order_deterministic(rs2):
    again = eg.find_all_roots(eg.partial_sum(2))
    np.testing.assert_array_equal(rs2.roots, again.roots)
