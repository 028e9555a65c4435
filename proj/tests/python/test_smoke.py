import math

import numpy as np
import pytest

import simplexroot as sr

TRI = np.array([[0.0, 0.0], [4.0, 0.0], [0.0, 3.0]])


def test_spheres():
    ins = sr.insphere(TRI)
    circ = sr.circumsphere(TRI)
    assert np.allclose(ins.center, [1.0, 1.0])
    assert ins.radius == pytest.approx(1.0)
    assert np.allclose(circ.center, [2.0, 1.5])
    assert circ.radius == pytest.approx(2.5)
    assert sr.signed_volume(TRI) == pytest.approx(6.0)
    assert np.allclose(sr.barycentric(TRI, np.array([1.0, 1.0])), [5 / 12, 1 / 4, 1 / 3])


def test_root():
    rr = sr.root(TRI)
    assert np.allclose(rr.root, [[-2.75, -4.0], [7.25, 1.0], [1.0, 7.25]])
    assert sr.check_root_circumsphere(rr) < 1e-12
    assert sr.check_gram_identity(rr, TRI) < 1e-12
    margins, inside = sr.check_containment(rr, TRI)
    assert inside and min(margins) > 0
    r1, big_r1, r2, big_r2 = sr.radius_chain(TRI)
    assert (r1, big_r1, big_r2) == pytest.approx((1.0, 2.5, 6.25))
    assert r2 == pytest.approx(2.9409258918958962305)
    g = sr.gram_matrix(TRI, rr.root, np.array([1.0, 1.0]))
    assert g[0, 1] == pytest.approx(-6.25)


def test_iterate():
    cfg = sr.IterationConfig()
    cfg.max_steps = 40
    traj = sr.iterate(TRI, cfg)
    assert traj.stop_reason == sr.StopReason.Converged
    ratios = [rec.ratio for rec in traj.records]
    assert ratios[0] == pytest.approx(0.4)
    assert all(b > a for a, b in zip(ratios[:15], ratios[1:15]))
    rep = sr.subsequence_limits(traj, cfg)
    assert rep.even_converged and rep.odd_converged
    assert rep.gap == pytest.approx(1.6073335872721231266, rel=1e-8)
    devs = sr.triangle_angle_deviations(traj)
    assert devs[1][0] == pytest.approx(-devs[0][0] / 2)


def test_oracles_and_errors():
    s = sr.random_simplex(3, 7)
    assert s.shape == (4, 3)
    assert np.array_equal(s, sr.random_simplex(3, 7))
    rr = sr.root(s)
    assert sr.mc_ball_in_simplex(rr.source_circumsphere, rr.root, 20000, 1) == 1.0
    checks = sr.verify(s)
    assert all(ok for _, ok in checks.values())
    assert not all(ok for _, ok in sr.verify(s, 0.0, 100).values())
    eq = sr.named_simplex("equilateral")
    assert np.allclose(sr.root(eq).root, 2 * eq)
    with pytest.raises(sr.DegenerateSimplex):
        sr.insphere(np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]))
    with pytest.raises(ValueError):
        sr.random_simplex(3, 1, 0.9)
    assert math.isfinite(sr.estimate_rho(sr.iterate(s)))
