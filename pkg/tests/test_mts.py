import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitime.dirac import ParticleKind, evolve_free
from multitime.lattice import ComplexField, l2_norm, make_grid
from multitime.mts import (
    MultiTimeState,
    SpacetimePoint,
    consistency_commutator_norm,
    convergence_order,
    diagonal_restriction,
    effective_mtd_mass,
    evolve_to,
    initial_state,
    is_spacelike_config,
    mtd_identity_residual,
    path_independence_residual,
    per_particle_kg_residual,
    plane_wave_spinor,
    product_field,
    single_time_evolve,
)
from multitime.probes import random_field

DIRAC = ParticleKind.dirac(1.0)
DIRAC2 = ParticleKind.dirac(2.0)
KG = ParticleKind.klein_gordon(1.0)


def random_state(n=32, length=20.0, kinds=(DIRAC, DIRAC2), seed=7, stream=0):
    g = make_grid(n, length)
    spins = tuple(k.n_components for k in kinds)
    return initial_state(random_field((g,) * len(kinds), spins, seed, stream), kinds)


def test_zero_times_returns_data():
    s = random_state()
    out = evolve_to(s, (0.0, 0.0))
    assert np.max(np.abs(out.field.values - s.field.values)) <= 1e-13
    assert out.times == (0.0, 0.0)


def test_only_second_particle_moves():
    s = random_state()
    out = evolve_to(s, (0.0, 1.5))
    ref = evolve_free(s.field, DIRAC2, 1, 1.5)
    assert np.max(np.abs(out.field.values - ref.values)) <= 1e-13


def test_state_validation():
    g = make_grid(8, 1.0)
    f = ComplexField((g, g), np.zeros((8, 8, 2, 2)), (2, 2))
    with pytest.raises(ValueError):
        MultiTimeState(f, (0.0,), (DIRAC, DIRAC))
    with pytest.raises(ValueError):
        initial_state(f, (DIRAC, KG))
    with pytest.raises(ValueError):
        evolve_to(initial_state(f, (DIRAC, DIRAC)), (1.0, 1.0), order=[0, 0])


def test_schedule_must_reach_target():
    s = random_state()
    with pytest.raises(ValueError):
        evolve_to(s, (1.0, 1.0), order=[(0, 0.5), (1, 1.0)])


def test_interleaved_schedule_matches():
    s = random_state()
    steps = [(0, 0.3), (1, -0.4), (0, 0.9), (1, 1.6), (0, -0.2)]
    a = evolve_to(s, (1.0, 1.2), order=steps)
    b = evolve_to(s, (1.0, 1.2))
    assert np.max(np.abs(a.field.values - b.field.values)) <= 1e-13


def test_product_data_factorizes():
    g = make_grid(32, 20.0)
    rng = np.random.default_rng(3)
    f1 = rng.normal(size=(32, 2)) + 1j * rng.normal(size=(32, 2))
    f2 = rng.normal(size=(32, 2)) + 1j * rng.normal(size=(32, 2))
    s = initial_state(product_field((g, g), [f1, f2]), (DIRAC, DIRAC2))
    out = evolve_to(s, (0.8, -1.3)).field.values
    e1 = evolve_free(ComplexField((g,), f1, (2,)), DIRAC, 0, 0.8).values
    e2 = evolve_free(ComplexField((g,), f2, (2,)), DIRAC2, 0, -1.3).values
    expected = np.einsum("xa,yb->xyab", e1, e2)
    assert np.max(np.abs(out - expected)) <= 1e-12


def test_norm_and_path_independence():
    for stream in range(3):
        s = random_state(stream=stream)
        out = evolve_to(s, (2.7, -4.1))
        assert abs(l2_norm(out.field) / l2_norm(s.field) - 1) <= 1e-10
        assert path_independence_residual(s, (2.7, -4.1)) <= 1e-10


def test_continuous_dependence():
    a = random_state(stream=0)
    b = random_state(stream=1)
    mix = initial_state(a.field + b.field * 1e-3, a.kinds)
    d0 = l2_norm(mix.field - a.field)
    d1 = l2_norm(evolve_to(mix, (3.0, -2.0)).field - evolve_to(a, (3.0, -2.0)).field)
    assert d1 == pytest.approx(d0, rel=1e-10)


def test_three_particles():
    s = random_state(n=16, kinds=(DIRAC, KG, DIRAC2))
    a = evolve_to(s, (0.5, 1.0, -0.7), order=[2, 0, 1])
    b = evolve_to(s, (0.5, 1.0, -0.7))
    assert np.max(np.abs(a.field.values - b.field.values)) <= 1e-12


@pytest.mark.parametrize("kinds", [(DIRAC, DIRAC2), (KG, ParticleKind.klein_gordon(2.0)), (DIRAC, KG)])
def test_partial_hamiltonians_commute(kinds):
    g = make_grid(32, 20.0)
    probe = random_field((g, g), tuple(k.n_components for k in kinds), 11)
    assert consistency_commutator_norm(kinds, probe, relative=True) <= 1e-11


def test_single_time_oracle_on_plane_wave():
    # product of energy eigenstates: phase exp(-i (E1 + E2) t)
    g = make_grid(16, 2 * np.pi)
    k1, k2 = 3.0, -2.0
    u1, u2 = plane_wave_spinor(DIRAC, k1), plane_wave_spinor(DIRAC2, k2)
    f1 = np.exp(1j * k1 * g.positions)[:, None] * u1
    f2 = np.exp(1j * k2 * g.positions)[:, None] * u2
    field = product_field((g, g), [f1, f2])
    t = 1.7
    e = np.hypot(k1, 1.0) + np.hypot(k2, 2.0)
    out = single_time_evolve(field, (DIRAC, DIRAC2), t)
    assert np.max(np.abs(out.values - np.exp(-1j * e * t) * field.values)) <= 1e-12


def test_diagonal_restriction_matches_oracle():
    s = random_state(n=32)
    for t in (-4.3, 0.0, 2.2):
        diff = diagonal_restriction(s, t).values - single_time_evolve(s.field, s.kinds, t).values
        assert np.max(np.abs(diff)) <= 1e-10


def test_spacelike_examples():
    assert is_spacelike_config([(0, 0), (0, 1)])
    assert not is_spacelike_config([(0, 0), (1, 0)])
    assert not is_spacelike_config([(0, 0), (1, 1)])
    assert is_spacelike_config([SpacetimePoint(0.2, -3.0)])
    assert not is_spacelike_config([(0, 0), (0, 2), (3, 1)])


coords = st.floats(-50, 50, allow_nan=False)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(coords, coords), min_size=2, max_size=4), st.floats(-3, 3))
def test_spacelike_symmetric_and_boost_invariant(pts, chi):
    assert is_spacelike_config(pts) == is_spacelike_config(pts[::-1])
    c, s = np.cosh(chi), np.sinh(chi)
    boosted = [(c * t + s * x, s * t + c * x) for t, x in pts]
    margins = [
        abs((a[0] - b[0]) ** 2 - (a[1] - b[1]) ** 2) for i, a in enumerate(pts) for b in pts[i + 1 :]
    ]
    # skip configurations on the light cone up to rounding
    if min(margins) > 1e-6 * max(1.0, max(abs(v) for p in pts for v in p)) ** 2 * np.cosh(chi) ** 2:
        assert is_spacelike_config(pts) == is_spacelike_config(boosted)


def test_effective_mass():
    assert effective_mtd_mass(2, 1.0) == pytest.approx(np.sqrt(2))
    assert effective_mtd_mass(3, 2.0) == pytest.approx(2 * np.sqrt(3))


def test_convergence_order_of_pure_power():
    hs = [0.1, 0.05, 0.025]
    assert convergence_order(hs, [3 * h**2 for h in hs]) == pytest.approx([2.0, 2.0])


def test_kg_identity_second_order(packet_state):
    hs = [0.04, 0.02, 0.01, 0.005]
    for j in (0, 1):
        res = [per_particle_kg_residual(packet_state, j, (0.4, -0.3), h) for h in hs]
        assert np.all(np.abs(convergence_order(hs, res) - 2) <= 0.1)
        assert res[2] <= 2e-3


def test_summed_identity_needs_rescaled_mass(packet_state):
    good = mtd_identity_residual(packet_state, (0.4, -0.3), 1e-2)
    bad = mtd_identity_residual(packet_state, (0.4, -0.3), 1e-2, mass=1.0)
    assert good <= 2e-3
    assert bad > 100 * good


def test_identity_rejects_mixed_masses():
    with pytest.raises(ValueError):
        mtd_identity_residual(random_state(), (0, 0), 1e-2)
    with pytest.raises(ValueError):
        per_particle_kg_residual(random_state(), 0, (0, 0), 0.0)


def test_massless_plane_wave_identity_is_exact_in_space():
    # a single massless plane-wave mode: central difference gives 2(cos(kh) - 1)/h^2
    g = make_grid(16, 2 * np.pi)
    kind = ParticleKind.dirac(0.0)
    u = plane_wave_spinor(kind, 2.0)
    f = np.exp(2j * g.positions)[:, None] * u
    s = initial_state(product_field((g, g), [f, f]), (kind, kind))
    h = 0.01
    d2t = 2 * (np.cos(2 * h) - 1) / h**2
    expected = abs(d2t + 4) / (abs(d2t) + 4)
    assert per_particle_kg_residual(s, 0, (0.1, 0.2), h) == pytest.approx(expected, rel=1e-6)
