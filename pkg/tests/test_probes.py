import numpy as np
import pytest

from multitime.lattice import l2_norm, make_grid
from multitime.probes import complex_normal, normal, random_field, uniform

MASK = (1 << 64) - 1


def philox4x64(ctr, key, rounds=10):
    """Reference Philox4x64-10 block function in plain integers."""
    x, k = list(ctr), list(key)
    for _ in range(rounds):
        p0 = 0xD2E7470EE14C6C93 * x[0]
        p1 = 0xCA5A826395121157 * x[2]
        x = [(p1 >> 64) ^ x[1] ^ k[0], p1 & MASK, (p0 >> 64) ^ x[3] ^ k[1], p0 & MASK]
        k = [(k[0] + 0x9E3779B97F4A7C15) & MASK, (k[1] + 0xBB67AE8584CAA73B) & MASK]
    return x


def reference_uniform(seed, n, stream):
    words = []
    block = 1
    while len(words) < n:
        words += philox4x64([block, 0, 0, 0], [seed, stream])
        block += 1
    return np.array([(w >> 11) * 2.0**-53 for w in words[:n]])


@pytest.mark.parametrize("seed, stream", [(0, 0), (42, 3), (2**64 - 1, 17)])
def test_uniform_matches_reference(seed, stream):
    assert np.array_equal(uniform(seed, 11, stream), reference_uniform(seed, 11, stream))


def test_normal_is_box_muller():
    u = reference_uniform(5, 6, 2)
    r = np.sqrt(-2 * np.log(1 - u[0::2]))
    expected = np.column_stack([r * np.cos(2 * np.pi * u[1::2]), r * np.sin(2 * np.pi * u[1::2])]).reshape(-1)
    assert normal(5, 6, 2) == pytest.approx(expected, rel=1e-15)
    assert normal(5, 5, 2) == pytest.approx(expected[:5], rel=1e-15)


def test_streams_and_seeds_differ():
    assert not np.array_equal(uniform(1, 4, 0), uniform(1, 4, 1))
    assert not np.array_equal(uniform(1, 4, 0), uniform(2, 4, 0))
    assert np.array_equal(uniform(1, 4, 0), uniform(1, 4, 0))


def test_bad_seed():
    with pytest.raises(ValueError):
        uniform(-1, 3)
    with pytest.raises(ValueError):
        uniform(2**64, 3)


def test_complex_normal_moments():
    z = complex_normal(123, (200_000,), 0)
    assert np.mean(np.abs(z) ** 2) == pytest.approx(1.0, abs=0.01)
    assert abs(np.mean(z)) < 0.01
    assert np.var(z.real) == pytest.approx(0.5, abs=0.01)


def test_random_field_normalized():
    g = make_grid(16, 3.0)
    f = random_field((g, g), (2, 2), 8, stream=4)
    assert f.values.shape == (16, 16, 2, 2)
    assert l2_norm(f) == pytest.approx(1.0, abs=1e-14)
    raw = random_field((g, g), (2, 2), 8, stream=4, normalize=False)
    assert np.allclose(raw.values / l2_norm(raw), f.values)
