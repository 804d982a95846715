import math

import pytest

bc = pytest.importorskip("_boolcube")


def conjunction(n, width):
    mask = (1 << width) - 1
    return [1.0 if (x & mask) == mask else 0.0 for x in range(1 << n)]


def test_wht_round_trip():
    f = bc.random_coverage(6, seed=1)
    coeffs = bc.wht(f)
    back = bc.inverse_wht(coeffs)
    assert max(abs(a - b) for a, b in zip(f, back)) < 1e-12
    # Parseval
    energy_f = sum(v * v for v in f) / len(f)
    energy_s = sum(c * c for c in coeffs)
    assert math.isclose(energy_f, energy_s, rel_tol=1e-9)


def test_norms_and_noise():
    f = conjunction(6, 2)
    assert math.isclose(bc.norm(f, 1.0), 0.25)
    assert bc.norm_linf(f) == 1.0
    flat = bc.noise_operator(f, 0.0)
    assert all(math.isclose(v, 0.25) for v in flat)


def test_class_checkers():
    cut = bc.random_cut(7, seed=3)
    assert bc.is_submodular(cut)
    a_star, lipschitz = bc.minimal_self_bounding(cut)
    assert lipschitz and a_star <= 2.0 + 1e-9
    cov = bc.random_coverage(7, seed=4)
    assert bc.is_monotone(cov)


def test_lift_shrinks_a():
    f = bc.random_dnf(8, 2, 4, seed=5)
    a_f, _ = bc.minimal_self_bounding(f)
    a_g, _ = bc.minimal_self_bounding(bc.lift(f, 2.0))
    assert a_g <= a_f / 2.0 + 1e-9


def test_derive_params_oracle_values():
    p = bc.derive_params(1.0, 1.0, "theorem31")
    assert p["d"] == 3 and math.isclose(p["rho"], 0.5)
    p = bc.derive_params(1.0, 1.0, "theorem32")
    assert p["d"] == 8 and math.isclose(p["alpha"], 3.0 ** -17)


def test_junta_polynomial_error():
    f = bc.random_coverage(8, seed=6)
    poly = bc.junta_polynomial(f, 1.0, 0.5)
    err = sum(abs(f[x] - bc.eval_polynomial(poly, x)) for x in range(256)) / 256
    assert err <= 0.5 * bc.norm(f, 1.0) + 1e-9


def test_regression_matches_spectrum():
    f = bc.random_cut(5, seed=7)
    err, poly = bc.best_l1_degree_bounded(f, 5)
    assert err <= 1e-6
    coeffs = bc.wht(f)
    for s, c in poly["terms"].items():
        assert abs(c - coeffs[s]) < 1e-6


def test_learn_submodular():
    f = bc.random_cut(8, seed=8)
    h = bc.learn(f, "submodular", a=2.0, eps=0.5, seed=8, degree=2,
                 m_regress=300, theta=0.005, oracle="queries")
    assert h["l1_error"] <= 0.5
    # Determinism: same seed, same hypothesis.
    h2 = bc.learn(f, "submodular", a=2.0, eps=0.5, seed=8, degree=2,
                  m_regress=300, theta=0.005, oracle="queries")
    assert h["transcript"] == h2["transcript"]
    assert h["polynomial"]["terms"] == h2["polynomial"]["terms"]


def test_parity_lower_bound():
    out = bc.parity_lower_bound(1.0, 0.125, 6)
    assert out["k"] == 2
    assert math.isclose(out["inner_optimum"], 0.5, abs_tol=1e-6)
    assert math.isclose(out["lifted_optimum"], 0.25, abs_tol=1e-6)
    assert out["holds"]
