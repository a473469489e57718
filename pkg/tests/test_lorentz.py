import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitime.dirac import ALPHA, GAMMA_11, ParticleKind, expm_scaling_squaring
from multitime.lattice import make_grid
from multitime.lorentz import (
    Boost,
    BoostedEvaluator,
    MultiTimeEvaluator,
    boost_point,
    covariance_residual,
    intertwining_residual,
    positive_energy_plane_wave_check,
    transform_state,
)
from multitime.mts import SpacetimePoint, convergence_order, evolve_to, initial_state, plane_wave_spinor, product_field
from multitime.probes import random_field

rapidity = st.floats(-3, 3, allow_nan=False)


def test_identity_boost():
    b = Boost(0.0)
    assert np.array_equal(b.matrix, np.eye(2))
    assert np.array_equal(b.spinor_rep, np.eye(2))
    assert boost_point(b, SpacetimePoint(1.0, 2.0)) == (1.0, 2.0)


def test_velocity_half():
    b = Boost.from_velocity(0.5)
    gamma = 1 / np.sqrt(0.75)
    assert b.matrix == pytest.approx(np.array([[gamma, 0.5 * gamma], [0.5 * gamma, gamma]]))


def test_spinor_rep_matches_exponential():
    for chi in (-1.3, 0.2, 2.5):
        oracle = expm_scaling_squaring(0.5 * chi * ALPHA)
        assert np.max(np.abs(Boost(chi).spinor_rep - oracle)) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(rapidity, rapidity)
def test_group_laws(a, b):
    ba, bb = Boost(a), Boost(b)
    scale = np.cosh(a) * np.cosh(b) * 4
    assert np.max(np.abs(ba.matrix @ bb.matrix - ba.compose(bb).matrix)) <= 1e-12 * scale
    assert np.max(np.abs(ba.spinor_rep @ bb.spinor_rep - ba.compose(bb).spinor_rep)) <= 1e-12 * scale
    assert np.max(np.abs(ba.matrix @ ba.inverse.matrix - np.eye(2))) <= 1e-12 * scale
    assert np.linalg.det(ba.matrix) == pytest.approx(1.0, rel=1e-12 * scale)


@settings(max_examples=100, deadline=None)
@given(rapidity)
def test_intertwining(chi):
    assert intertwining_residual(Boost(chi)) <= 1e-12 * np.cosh(chi) ** 2


@settings(max_examples=100, deadline=None)
@given(rapidity, st.floats(-10, 10), st.floats(-10, 10))
def test_interval_invariant(chi, t, x):
    p = boost_point(Boost(chi), SpacetimePoint(t, x))
    scale = max(1.0, t * t + x * x) * np.cosh(chi) ** 2
    assert abs((p.t**2 - p.x**2) - (t * t - x * x)) <= 1e-12 * scale


@pytest.fixture(scope="module")
def state():
    g = make_grid(16, 10.0)
    kinds = (ParticleKind.dirac(1.0), ParticleKind.dirac(0.5))
    return initial_state(random_field((g, g), (2, 2), 9), kinds)


def test_evaluator_reproduces_grid_values(state):
    ev = MultiTimeEvaluator(state)
    g1, g2 = state.field.grids
    x1, x2 = np.meshgrid(g1.positions, g2.positions, indexing="ij")
    for t1, t2 in [(0.0, 0.0), (0.4, -1.1)]:
        got = ev(np.full_like(x1, t1), x1, np.full_like(x1, t2), x2)
        assert np.max(np.abs(got - evolve_to(state, (t1, t2)).field.values)) <= 1e-12


def test_evaluator_time_derivative(state):
    ev = MultiTimeEvaluator(state)
    args = (0.3, 1.2, -0.4, -2.1)
    h = 1e-5
    fd = (ev(0.3 + h, 1.2, -0.4, -2.1) - ev(0.3 - h, 1.2, -0.4, -2.1)) / (2 * h)
    exact = ev(*args, derivative=("t", None))
    assert np.max(np.abs(fd - exact)) <= 1e-6 * max(1.0, np.max(np.abs(exact)))


def test_evaluator_time_range(state):
    ev = MultiTimeEvaluator(state, time_range=(-1.0, 1.0))
    with pytest.raises(ValueError):
        ev(2.0, 0.0, 0.0, 0.0)


def test_zero_boost_is_identity(state):
    ev = MultiTimeEvaluator(state)
    bev = transform_state(ev, Boost(0.0))
    assert isinstance(bev, BoostedEvaluator)
    assert np.allclose(bev(0.2, 1.0, 0.1, -1.0), ev(0.2, 1.0, 0.1, -1.0), atol=1e-15)


def test_boosted_plane_wave_is_plane_wave():
    kind = ParticleKind.dirac(4.0)
    k = 3.0
    b = Boost(0.5)
    assert positive_energy_plane_wave_check(kind, k, b) <= 1e-12
    g = make_grid(16, 2 * np.pi)
    u = plane_wave_spinor(kind, k)
    wave = np.exp(1j * k * g.positions)[:, None] * u[None, :]
    st_pw = initial_state(product_field((g, g), [wave, wave]), (kind, kind))
    assert covariance_residual(st_pw, b, (0.2, -0.1), 1e-4) <= 1e-6


def test_packet_covariance_order_two(packet_state):
    hs = [0.04, 0.02, 0.01]
    res = [covariance_residual(packet_state, Boost(0.3), (0.2, -0.1), h) for h in hs]
    assert np.all(np.abs(convergence_order(hs, res) - 2) <= 0.1)


def test_nu_from_spinor_rep():
    from multitime.detection import Hypersurface, nu_matrix

    for v in (-0.6, 0.0, 0.45):
        s = Boost(-np.arctanh(v)).spinor_rep
        lhs = GAMMA_11[0] @ nu_matrix(Hypersurface(0.0, v))
        assert np.max(np.abs(lhs - s.conj().T @ s)) <= 1e-12
