import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitime.lattice import ComplexField, forward_dft, inverse_dft, l2_norm, make_grid


def naive_dft(values):
    n = len(values)
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        for j in range(n):
            out[k] += values[j] * np.exp(-2j * np.pi * k * j / n)
    return out / np.sqrt(n)


def test_grid_of_eight_on_two_pi():
    g = make_grid(8, 2 * np.pi)
    assert g.spacing == pytest.approx(np.pi / 4)
    assert sorted(np.round(g.momenta, 12)) == list(range(-4, 4))
    # FFT storage order: zero first, negative frequencies last
    assert g.momenta[0] == 0 and g.momenta[-1] == pytest.approx(-1.0)


def test_smallest_grid():
    g = make_grid(2, 1.0)
    assert g.spacing == 0.5
    assert sorted(g.momenta) == pytest.approx([-2 * np.pi, 0.0])


@pytest.mark.parametrize("n, length", [(6, 1.0), (0, 1.0), (1, 1.0), (8, 0.0), (8, -2.0), (12, 3.0)])
def test_rejects_bad_grids(n, length):
    with pytest.raises(ValueError):
        make_grid(n, length)


def test_dft_of_constant_is_delta():
    g = make_grid(8, 2 * np.pi)
    f = forward_dft(ComplexField((g,), np.ones(8)))
    expected = np.zeros(8)
    expected[0] = np.sqrt(8)
    assert np.allclose(f.values, expected, atol=1e-14)


def test_dft_matches_naive_sum(rng):
    g = make_grid(16, 3.0)
    v = rng.normal(size=16) + 1j * rng.normal(size=16)
    assert np.allclose(forward_dft(ComplexField((g,), v)).values, naive_dft(v), atol=1e-12)


def test_dft_acts_componentwise_on_spin_axes(rng):
    g = make_grid(8, 1.0)
    v = rng.normal(size=(8, 8, 2, 2)) + 0j
    f = forward_dft(ComplexField((g, g), v, (2, 2)))
    for a in range(2):
        for b in range(2):
            assert np.allclose(f.values[..., a, b], np.fft.fft2(v[..., a, b], norm="ortho"))


@pytest.mark.parametrize("n", [2, 4, 16, 64, 256])
def test_round_trip(rng, n):
    g = make_grid(n, 5.0)
    v = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    f = ComplexField((g,), v, (2,))
    assert np.max(np.abs(inverse_dft(forward_dft(f)).values - v)) <= 1e-12


def test_round_trip_two_axes(rng):
    g = make_grid(256, 5.0)
    h = make_grid(32, 1.0)
    v = rng.normal(size=(256, 32)) + 1j * rng.normal(size=(256, 32))
    f = ComplexField((g, h), v)
    assert np.max(np.abs(inverse_dft(forward_dft(f)).values - v)) <= 1e-12


def test_parseval(rng):
    g = make_grid(64, 7.0)
    v = rng.normal(size=(64, 64, 4)) + 1j * rng.normal(size=(64, 64, 4))
    f = ComplexField((g, g), v, (4,))
    direct = sum(abs(z) ** 2 for z in v.reshape(-1))
    spectral = np.sum(np.abs(forward_dft(f).values) ** 2)
    assert abs(direct - spectral) / direct <= 1e-10


def test_dimension_mismatch():
    g = make_grid(8, 1.0)
    with pytest.raises(ValueError):
        ComplexField((g,), np.zeros(4))
    with pytest.raises(ValueError):
        ComplexField((g, g), np.zeros((8, 8)), (2,))


def test_norm_examples(rng):
    g = make_grid(8, 2 * np.pi)
    assert l2_norm(ComplexField((g,), np.zeros(8))) == 0.0
    assert l2_norm(ComplexField((g,), np.ones(8))) == pytest.approx(np.sqrt(2 * np.pi), rel=1e-15)


def test_norm_against_loop(rng):
    g = make_grid(16, 3.0)
    h = make_grid(8, 2.0)
    v = rng.normal(size=(16, 8, 2)) + 1j * rng.normal(size=(16, 8, 2))
    total = 0.0
    for i in range(16):
        for j in range(8):
            for s in range(2):
                total += (v[i, j, s].conjugate() * v[i, j, s]).real * g.spacing * h.spacing
    assert l2_norm(ComplexField((g, h), v, (2,))) == pytest.approx(np.sqrt(total), rel=1e-12)


@settings(max_examples=50, deadline=None)
@given(
    st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False),
    st.integers(min_value=0, max_value=2**32),
)
def test_norm_homogeneous(c, seed):
    g = make_grid(16, 2.0)
    v = np.random.default_rng(seed).normal(size=(16, 2)) + 0j
    f = ComplexField((g,), v, (2,))
    assert abs(l2_norm(f * c) - abs(c) * l2_norm(f)) <= 1e-12 * max(1.0, abs(c) * l2_norm(f))


def test_fields_are_immutable():
    g = make_grid(4, 1.0)
    f = ComplexField((g,), np.zeros(4))
    with pytest.raises(ValueError):
        f.values[0] = 1.0
