"""Multi-time Schrodinger evolution for non-interacting particles.

A multi-time wave function carries one time per particle and obeys one
evolution equation per time, ``i d/dt_j phi = H_j phi``. For free
particles the ``H_j`` act on disjoint tensor factors, so

    phi(t_1, ..., t_n) = exp(-i H_1 t_1) ... exp(-i H_n t_n) phi(0, ..., 0)

is well defined in any order. The field layout is one spatial axis and one
spin index per particle (see :mod:`multitime.lattice`); delivered
experiments use two particles but nothing here is specific to ``n = 2``.

Sign convention for the second-order identities: each component of a
solution satisfies ``(d_t^2 - d_x^2) phi = -m^2 phi`` per particle, since
``H_j^2 = -d_x^2 + m^2``. Summed over ``n`` particles this is the
ultrahyperbolic equation with squared mass ``n m^2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .dirac import (
    ParticleKind,
    apply_hamiltonian,
    evolve_free,
    hamiltonian_symbol,
    second_derivative,
)
from .lattice import ComplexField, forward_dft, inverse_dft, l2_norm


@dataclass(frozen=True)
class MultiTimeState:
    field: ComplexField
    times: tuple[float, ...]
    kinds: tuple[ParticleKind, ...]

    def __post_init__(self):
        object.__setattr__(self, "times", tuple(float(t) for t in self.times))
        object.__setattr__(self, "kinds", tuple(self.kinds))
        n = self.field.ndim
        if len(self.times) != n or len(self.kinds) != n:
            raise ValueError(f"{n}-particle field needs {n} times and {n} kinds")
        expected = tuple(k.n_components for k in self.kinds)
        if self.field.spin_shape != expected:
            raise ValueError(f"spin shape {self.field.spin_shape} does not match kinds ({expected})")

    @property
    def n_particles(self) -> int:
        return self.field.ndim


def initial_state(field: ComplexField, kinds: Sequence[ParticleKind]) -> MultiTimeState:
    return MultiTimeState(field, (0.0,) * field.ndim, tuple(kinds))


def _schedule(increments: np.ndarray, order) -> list[tuple[int, float]]:
    n = len(increments)
    if order is None:
        order = range(n)
    order = list(order)
    if all(isinstance(o, (int, np.integer)) for o in order):
        if sorted(order) != list(range(n)):
            raise ValueError(f"order must be a permutation of 0..{n - 1}, got {order}")
        return [(int(j), float(increments[j])) for j in order]
    # interleaving schedule of (axis, dt) steps
    steps = [(int(j), float(dt)) for j, dt in order]
    totals = np.zeros(n)
    for j, dt in steps:
        totals[j] += dt
    if not np.allclose(totals, increments, rtol=1e-12, atol=1e-12):
        raise ValueError(f"schedule sums {totals} do not reach the requested increments {increments}")
    return steps


def evolve_to(state: MultiTimeState, target: Sequence[float], order=None) -> MultiTimeState:
    """Evolve to the time tuple ``target``.

    ``order`` is either a permutation of particle indices (each particle
    advanced in one step) or a list of ``(axis, dt)`` steps whose per-axis
    sums equal the required increments.
    """
    target = tuple(float(t) for t in target)
    increments = np.subtract(target, state.times)
    field = state.field
    for axis, dt in _schedule(increments, order):
        field = evolve_free(field, state.kinds[axis], axis, dt)
    return MultiTimeState(field, target, state.kinds)


def path_independence_residual(initial: MultiTimeState, target: Sequence[float]) -> float:
    """L2 distance between evolving particle by particle forwards and backwards."""
    n = initial.n_particles
    a = evolve_to(initial, target, order=range(n))
    b = evolve_to(initial, target, order=range(n - 1, -1, -1))
    return l2_norm(a.field - b.field)


def consistency_commutator_norm(kinds: Sequence[ParticleKind], probe: ComplexField, relative: bool = False) -> float:
    """Norm of ``[H_1, H_2] probe`` (largest over particle pairs for n > 2).

    With ``relative=True`` each commutator norm is divided by ``|H_j H_k probe|``.
    """
    worst = 0.0
    for j, k in itertools.combinations(range(len(kinds)), 2):
        hk = apply_hamiltonian(probe, kinds[k], k)
        hjk = apply_hamiltonian(hk, kinds[j], j)
        hkj = apply_hamiltonian(apply_hamiltonian(probe, kinds[j], j), kinds[k], k)
        r = l2_norm(hjk - hkj)
        if relative:
            scale = l2_norm(hjk)
            r = r / scale if scale > 0 else r
        worst = max(worst, r)
    return worst


def single_time_evolve(field: ComplexField, kinds: Sequence[ParticleKind], t: float) -> ComplexField:
    """exp(-i (H_1 + ... + H_n) t) by diagonalising the summed symbol per joint mode.

    Independent of :func:`evolve_to`: one full DFT, a Hermitian
    eigendecomposition of the total Hamiltonian at every momentum tuple, no
    per-particle propagators.
    """
    spec = forward_dft(field)
    dims = [k.n_components for k in kinds]
    total = 1
    for d in dims:
        total *= d
    grids = field.grids
    mesh = np.meshgrid(*[g.momenta for g in grids], indexing="ij")
    h = np.zeros(field.grid_shape + (total, total), dtype=np.complex128)
    for j, kind in enumerate(kinds):
        hj = hamiltonian_symbol(kind, mesh[j])
        left = np.eye(int(np.prod(dims[:j], dtype=int)))
        right = np.eye(int(np.prod(dims[j + 1 :], dtype=int)))
        h += np.einsum("ab,...cd,ef->...acebdf", left, hj, right).reshape(h.shape)
    w, v = np.linalg.eigh(h)
    phase = np.exp(-1j * w * t)
    u = np.einsum("...ab,...b,...cb->...ac", v, phase, v.conj())
    vals = spec.values.reshape(field.grid_shape + (total,))
    out = np.einsum("...ab,...b->...a", u, vals).reshape(spec.values.shape)
    return inverse_dft(spec.with_values(out))


def diagonal_restriction(initial: MultiTimeState, t: float) -> ComplexField:
    """The single-time wave function at time t: phi evaluated at equal times."""
    return evolve_to(initial, (t,) * initial.n_particles).field


class SpacetimePoint(NamedTuple):
    t: float
    x: float


def is_spacelike_config(points: Sequence[SpacetimePoint]) -> bool:
    """True iff every pair has (dt)^2 - (dx)^2 < 0 strictly (signature +-)."""
    pts = [SpacetimePoint(*p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    for a, b in itertools.combinations(pts, 2):
        dt, dx = a.t - b.t, a.x - b.x
        if not dt * dt - dx * dx < 0:
            return False
    return True


def effective_mtd_mass(n: int, m: float) -> float:
    """Mass of the summed n-time equation obeyed by n free particles of mass m."""
    return float(np.sqrt(n) * m)


def _second_time_difference(initial: MultiTimeState, j: int, sample: Sequence[float], h: float) -> tuple:
    base = np.asarray(sample, dtype=float)
    plus, minus = base.copy(), base.copy()
    plus[j] += h
    minus[j] -= h
    f0 = evolve_to(initial, base).field
    fp = evolve_to(initial, plus).field
    fm = evolve_to(initial, minus).field
    return f0, (fp - f0 * 2.0 + fm) * (1.0 / h**2)


@dataclass(frozen=True)
class IdentityCheck:
    """Terms of a second-order identity ``time_part - space_part + mass^2 phi = 0``."""

    time_norm: float
    space_norm: float
    mass_norm: float
    residual_norm: float

    @property
    def relative(self) -> float:
        scale = self.time_norm + self.space_norm + self.mass_norm
        return self.residual_norm / scale if scale > 0 else self.residual_norm


def kg_identity_check(initial: MultiTimeState, j: int, sample: Sequence[float], h: float) -> IdentityCheck:
    if h <= 0:
        raise ValueError("time step h must be positive")
    kind = initial.kinds[j]
    f0, d2t = _second_time_difference(initial, j, sample, h)
    d2x = second_derivative(f0, j)
    mass_term = f0 * kind.mass**2
    res = d2t - d2x + mass_term
    return IdentityCheck(l2_norm(d2t), l2_norm(d2x), l2_norm(mass_term), l2_norm(res))


def per_particle_kg_residual(initial: MultiTimeState, j: int, sample: Sequence[float], h: float) -> float:
    """Relative L2 residual of (d_tj^2 - d_xj^2 + m^2) phi = 0 at a time tuple.

    ``d_tj^2`` is a central second difference over exact evolutions to
    ``t_j -+ h``; ``d_xj^2`` is spectral. The residual is O(h^2).
    """
    return kg_identity_check(initial, j, sample, h).relative


def mtd_identity_check(
    initial: MultiTimeState, sample: Sequence[float], h: float, mass: float | None = None
) -> IdentityCheck:
    masses = {k.mass for k in initial.kinds}
    variants = {k.variant for k in initial.kinds}
    if len(masses) != 1 or len(variants) != 1:
        raise ValueError("the summed identity needs particles of one kind and one mass")
    if h <= 0:
        raise ValueError("time step h must be positive")
    n = initial.n_particles
    if mass is None:
        mass = effective_mtd_mass(n, masses.pop())
    f0 = d2t = d2x = None
    for j in range(n):
        f0, d2 = _second_time_difference(initial, j, sample, h)
        d2t = d2 if d2t is None else d2t + d2
        dx = second_derivative(f0, j)
        d2x = dx if d2x is None else d2x + dx
    mass_term = f0 * mass**2
    res = d2t - d2x + mass_term
    return IdentityCheck(l2_norm(d2t), l2_norm(d2x), l2_norm(mass_term), l2_norm(res))


def mtd_identity_residual(
    initial: MultiTimeState, sample: Sequence[float], h: float, mass: float | None = None
) -> float:
    """Relative residual of the summed equation sum_j (d_tj^2 - d_xj^2) phi + M^2 phi = 0.

    ``M`` defaults to ``sqrt(n) * m``; pass another ``mass`` to see the
    identity fail.
    """
    return mtd_identity_check(initial, sample, h, mass).relative


def convergence_order(hs: Sequence[float], residuals: Sequence[float]) -> np.ndarray:
    """Observed orders log(r_i / r_{i+1}) / log(h_i / h_{i+1}) for consecutive step sizes."""
    hs = np.asarray(hs, dtype=float)
    rs = np.asarray(residuals, dtype=float)
    return np.log(rs[:-1] / rs[1:]) / np.log(hs[:-1] / hs[1:])


def plane_wave_spinor(kind: ParticleKind, k: float, sign: int = +1) -> np.ndarray:
    """Normalized eigenvector of H(k) with energy sign * sqrt(k^2 + m^2)."""
    h = hamiltonian_symbol(kind, k)
    w, v = np.linalg.eigh(h)
    idx = int(np.argmax(w)) if sign > 0 else int(np.argmin(w))
    return v[:, idx]


def product_field(grids: Sequence, factors: Sequence[np.ndarray]) -> ComplexField:
    """Tensor product of single-particle wave functions, each of shape (N_j, c_j)."""
    out = factors[0]
    for f in factors[1:]:
        out = np.multiply.outer(out, f)
    # outer products interleave as (N1, c1, N2, c2, ...); reorder to (N1, N2, ..., c1, c2, ...)
    n = len(factors)
    perm = [2 * j for j in range(n)] + [2 * j + 1 for j in range(n)]
    return ComplexField(tuple(grids), np.transpose(out, perm), tuple(f.shape[1] for f in factors))


def gaussian_packet(grid, center: float, width: float, k0: float, spinor) -> np.ndarray:
    """exp(-(x-center)^2 / (4 width^2) + i k0 x) times a fixed spinor, unit L2 norm."""
    x = grid.positions
    env = np.exp(-((x - center) ** 2) / (4 * width**2) + 1j * k0 * x)
    f = np.multiply.outer(env, np.asarray(spinor, dtype=np.complex128))
    return f / np.sqrt(np.sum(np.abs(f) ** 2) * grid.spacing)
