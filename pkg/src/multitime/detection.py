"""Detection densities for two Dirac particles.

Born density at unequal times, and the covariant density on flat tilted
spacelike lines ``t = tau + v x`` (one line per particle, or a shared one).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .clifford import GammaSet
from .dirac import GAMMA_11, Variant, propagator_symbol
from .lattice import ComplexField
from .mts import MultiTimeState, evolve_to


@dataclass(frozen=True)
class Hypersurface:
    """The spacelike line ``t = tau + v x``."""

    tau: float = 0.0
    v: float = 0.0

    def __post_init__(self):
        if not abs(self.v) < 1:
            raise ValueError(f"tilt |v| must be < 1 for a spacelike surface, got v={self.v}")

    @property
    def normal(self) -> np.ndarray:
        """Future unit normal covector n_mu = (1, -v) / sqrt(1 - v^2)."""
        return np.array([1.0, -self.v]) / np.sqrt(1 - self.v**2)

    @property
    def measure(self) -> float:
        """Induced length per unit coordinate x."""
        return float(np.sqrt(1 - self.v**2))

    def time_at(self, x):
        return self.tau + self.v * np.asarray(x, dtype=float)


@dataclass(frozen=True)
class DensityField:
    grids: tuple
    values: np.ndarray

    @property
    def cell_volume(self) -> float:
        return float(np.prod([g.spacing for g in self.grids]))


def born_density(state: MultiTimeState) -> DensityField:
    """|phi|^2 summed over spin components, at the state's time tuple."""
    v = state.field.values
    spin_axes = tuple(range(state.field.ndim, v.ndim))
    return DensityField(state.field.grids, np.sum(v.real**2 + v.imag**2, axis=spin_axes))


def nu_matrix(surface: Hypersurface, gs: GammaSet = GAMMA_11) -> np.ndarray:
    """n_mu gamma^mu for the surface normal."""
    n = surface.normal
    return n[0] * gs[0] + n[1] * gs[1]


def _at_local_times(field: ComplexField, kind, axis: int, times: np.ndarray) -> ComplexField:
    """Evolve particle ``axis`` by a different time at every grid point along that axis.

    Sample ``i`` of the output equals ``exp(-i H t_i)`` applied to the whole
    field and then read at ``x_i``; computed as a direct inverse DFT with
    per-point propagators.
    """
    grid = field.grids[axis]
    k = grid.momenta
    n = grid.n_points
    spin = field.ndim + axis
    spec = np.fft.fft(field.values, axis=axis)
    spec = np.moveaxis(spec, (axis, spin), (0, 1))  # (k, c, ...)
    idx = np.arange(n)
    phases = np.exp(2j * np.pi * np.outer(idx, idx) / n) / n  # (x, k)
    u = propagator_symbol(kind, k[None, :], times[:, None])  # (x, k, c, c)
    out = np.einsum("xk,xkab,kb...->xa...", phases, u, spec)
    out = np.moveaxis(out, (0, 1), (axis, spin))
    return field.with_values(out)


def surface_field(initial: MultiTimeState, s1: Hypersurface, s2: Hypersurface) -> ComplexField:
    """phi at the points ((t1(x1), x1), (t2(x2), x2)) over the spatial grid."""
    surfaces = (s1, s2)
    if all(s.v == 0 for s in surfaces):
        return evolve_to(initial, (s1.tau, s2.tau)).field
    field = initial.field
    for axis, s in enumerate(surfaces):
        times = s.time_at(field.grids[axis].positions) - initial.times[axis]
        field = _at_local_times(field, initial.kinds[axis], axis, times)
    return field


def _warn_if_not_spacelike(initial: MultiTimeState, s1: Hypersurface, s2: Hypersurface):
    if s1 == s2:
        return
    x1 = initial.field.grids[0].positions[:, None]
    x2 = initial.field.grids[1].positions[None, :]
    dt = s1.time_at(x1) - s2.time_at(x2)
    dx = x1 - x2
    bad = (dt * dt - dx * dx >= 0) & (dx != 0)
    if bad.any():
        warnings.warn(
            f"{int(bad.sum())} evaluated point pairs on surfaces {s1} and {s2} are not spacelike separated",
            stacklevel=3,
        )


def hypersurface_density(
    initial: MultiTimeState, s1: Hypersurface, s2: Hypersurface | None = None
) -> DensityField:
    """phi-bar (nu(x1) (x) nu(x2)) phi on the surfaces, phi-bar = phi^dagger (gamma^0 (x) gamma^0)."""
    if s2 is None:
        s2 = s1
    if any(k.variant is not Variant.DIRAC11 for k in initial.kinds) or initial.n_particles != 2:
        raise ValueError("hypersurface density is defined here for two Dirac particles")
    _warn_if_not_spacelike(initial, s1, s2)
    phi = surface_field(initial, s1, s2).values
    g0 = GAMMA_11[0]
    m1 = g0 @ nu_matrix(s1)
    m2 = g0 @ nu_matrix(s2)
    rho = np.einsum("xyac,ab,cd,xybd->xy", phi.conj(), m1, m2, phi)
    return DensityField(initial.field.grids, rho.real)


def total_probability(density: DensityField, s1: Hypersurface | None = None, s2: Hypersurface | None = None) -> float:
    """Integral of the density with the induced measure of each surface."""
    s1 = s1 or Hypersurface()
    s2 = s2 or s1
    return float(np.sum(density.values) * density.cell_volume * s1.measure * s2.measure)
