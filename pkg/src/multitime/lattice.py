"""Periodic grids, unitary DFTs and L2 norms shared by all solvers.

A :class:`ComplexField` stores its samples as an array of shape
``grid_shape + spin_shape``: the leading axes are spatial (one per
:class:`SpatialGrid`), the trailing axes are component (spin) indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class SpatialGrid:
    """Uniform periodic grid of ``n_points`` samples on a box of size ``length``.

    Sample positions are ``x_i = -length/2 + i * spacing``.
    """

    n_points: int
    length: float

    def __post_init__(self):
        n = self.n_points
        if not isinstance(n, (int, np.integer)) or n < 2 or (n & (n - 1)) != 0:
            raise ValueError(f"n_points must be a power of two >= 2, got {n!r}")
        if not self.length > 0:
            raise ValueError(f"length must be positive, got {self.length!r}")

    @property
    def spacing(self) -> float:
        return self.length / self.n_points

    @property
    def positions(self) -> np.ndarray:
        return -0.5 * self.length + self.spacing * np.arange(self.n_points)

    @property
    def momenta(self) -> np.ndarray:
        """Angular wavenumbers 2*pi*m/L in FFT storage order."""
        return 2 * np.pi * np.fft.fftfreq(self.n_points, d=self.spacing)


def make_grid(n_points: int, length: float) -> SpatialGrid:
    return SpatialGrid(n_points, float(length))


@dataclass(frozen=True)
class ComplexField:
    grids: tuple[SpatialGrid, ...]
    values: np.ndarray
    spin_shape: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "grids", tuple(self.grids))
        object.__setattr__(self, "spin_shape", tuple(int(c) for c in self.spin_shape))
        values = np.asarray(self.values, dtype=np.complex128)
        expected = self.grid_shape + self.spin_shape
        if values.shape != expected:
            raise ValueError(f"field values have shape {values.shape}, grids and spins require {expected}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def grid_shape(self) -> tuple[int, ...]:
        return tuple(g.n_points for g in self.grids)

    @property
    def ndim(self) -> int:
        return len(self.grids)

    @property
    def n_components(self) -> int:
        return int(np.prod(self.spin_shape, dtype=int))

    @property
    def cell_volume(self) -> float:
        return float(np.prod([g.spacing for g in self.grids]))

    def with_values(self, values: np.ndarray) -> ComplexField:
        return ComplexField(self.grids, values, self.spin_shape)

    def __add__(self, other: ComplexField) -> ComplexField:
        return self.with_values(self.values + other.values)

    def __sub__(self, other: ComplexField) -> ComplexField:
        return self.with_values(self.values - other.values)

    def __mul__(self, c: complex) -> ComplexField:
        return self.with_values(self.values * c)

    __rmul__ = __mul__


def _check(field: ComplexField):
    if field.values.shape != field.grid_shape + field.spin_shape:
        raise ValueError("field dimensions do not match its grids")


def forward_dft(field: ComplexField, axes: Sequence[int] | None = None) -> ComplexField:
    """Unitary DFT over the spatial axes (all of them unless ``axes`` is given)."""
    _check(field)
    axes = tuple(range(field.ndim)) if axes is None else tuple(axes)
    return field.with_values(np.fft.fftn(field.values, axes=axes, norm="ortho"))


def inverse_dft(field: ComplexField, axes: Sequence[int] | None = None) -> ComplexField:
    _check(field)
    axes = tuple(range(field.ndim)) if axes is None else tuple(axes)
    return field.with_values(np.fft.ifftn(field.values, axes=axes, norm="ortho"))


def l2_norm(field: ComplexField) -> float:
    """sqrt(sum |f|^2 * cell volume); the sum runs in C order over the flattened array."""
    flat = field.values.reshape(-1)
    return float(np.sqrt(np.sum(flat.real**2 + flat.imag**2) * field.cell_volume))


def mesh(grids: Sequence[SpatialGrid]) -> list[np.ndarray]:
    return np.meshgrid(*[g.positions for g in grids], indexing="ij")


def momentum_mesh(grids: Sequence[SpatialGrid]) -> list[np.ndarray]:
    return np.meshgrid(*[g.momenta for g in grids], indexing="ij")
