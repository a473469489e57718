"""Reproducible random probe data from a counter-based generator.

The stream is fully specified so other implementations can regenerate the
same probe states bit for bit:

* generator: Philox4x64-10 with key words ``(seed, stream)``, as numpy's
  ``Philox(key=seed + 2**64 * stream)``. Block ``b = 1, 2, ...`` encrypts
  the counter ``(b, 0, 0, 0)`` and yields its four 64-bit words in order;
* uniform doubles: ``u = (word >> 11) * 2**-53`` in [0, 1);
* normals: Box-Muller on consecutive pairs ``(u1, u2)``:
  ``r = sqrt(-2 log(1 - u1))``, giving ``r cos(2 pi u2)`` then ``r sin(2 pi u2)``;
* complex normals: real part then imaginary part, each N(0, 1/2).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .lattice import ComplexField, SpatialGrid, l2_norm


def uniform(seed: int, n: int, stream: int = 0) -> np.ndarray:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    bitgen = np.random.Philox(key=int(seed) + (int(stream) << 64))
    words = bitgen.random_raw(n).astype(np.uint64)
    return (words >> np.uint64(11)).astype(np.float64) * 2.0**-53


def normal(seed: int, n: int, stream: int = 0) -> np.ndarray:
    pairs = (n + 1) // 2
    u = uniform(seed, 2 * pairs, stream).reshape(pairs, 2)
    r = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
    theta = 2 * np.pi * u[:, 1]
    return np.column_stack([r * np.cos(theta), r * np.sin(theta)]).reshape(-1)[:n]


def complex_normal(seed: int, shape: Sequence[int], stream: int = 0) -> np.ndarray:
    n = int(np.prod(shape, dtype=int))
    z = normal(seed, 2 * n, stream).reshape(n, 2) / np.sqrt(2.0)
    return (z[:, 0] + 1j * z[:, 1]).reshape(shape)


def random_field(
    grids: Sequence[SpatialGrid], spin_shape: Sequence[int], seed: int, stream: int = 0, normalize: bool = True
) -> ComplexField:
    shape = tuple(g.n_points for g in grids) + tuple(spin_shape)
    f = ComplexField(tuple(grids), complex_normal(seed, shape, stream), tuple(spin_shape))
    return f * (1.0 / l2_norm(f)) if normalize else f
