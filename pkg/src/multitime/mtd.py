"""Ultrahyperbolic Klein-Gordon equation with two times and two space dimensions.

The equation is taken literally as

    (d_t1^2 + d_t2^2 - d_x1^2 - d_x2^2) psi = m^2 psi

and solved as an evolution in ``t1`` from Cauchy data on ``{t1 = 0}``, a
periodic box in ``(t2, x1, x2)``. A Fourier mode ``(w2, k1, k2)`` obeys
``f'' = D f`` with ``D = m^2 + w2^2 - k1^2 - k2^2``: exponential growth for
``D > 0``, oscillation for ``D < 0``, linear drift for ``D = 0``.
(Note the sign of ``m^2``: for ``m > 0`` it differs from the usual
``(box + m^2) psi = 0``; with ``m = 0`` both agree.)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .clifford import MetricSignature, build_gamma_set, slash
from .lattice import ComplexField, SpatialGrid, l2_norm, momentum_mesh

OVERFLOW_EXPONENT = 700.0


class OverflowGuardError(OverflowError):
    """Requested t1 would push exp(lambda * t1) past double precision range."""


class ModeKind(enum.Enum):
    GROWING = "growing"
    OSCILLATORY = "oscillatory"
    MARGINAL = "marginal"


@dataclass(frozen=True)
class ModeClass:
    kvec: tuple[float, float, float]
    discriminant: float
    kind: ModeKind

    @property
    def rate(self) -> float:
        """Growth rate sqrt(D) for growing modes, angular frequency sqrt(-D) for oscillatory ones."""
        return float(np.sqrt(abs(self.discriminant)))


def discriminant(kvec, m: float):
    w2, k1, k2 = (np.asarray(c, dtype=float) for c in kvec)
    return m * m + w2 * w2 - k1 * k1 - k2 * k2


def classify_mode(kvec: Sequence[float], m: float) -> ModeClass:
    d = float(discriminant(kvec, m))
    if d > 0:
        kind = ModeKind.GROWING
    elif d < 0:
        kind = ModeKind.OSCILLATORY
    else:
        kind = ModeKind.MARGINAL
    return ModeClass(tuple(float(c) for c in kvec), d, kind)


@dataclass(frozen=True)
class UltrahyperbolicData:
    """Cauchy data on ``{t1 = const}``: grids are ``(t2, x1, x2)``.

    ``support`` optionally restricts the data to a set of Fourier modes
    (boolean array in FFT storage order). Modes outside it are treated as
    exactly zero, which keeps rounding noise on discarded growing modes from
    being amplified by the evolution.
    """

    value: ComplexField
    normal_derivative: ComplexField
    mass: float = 0.0
    t1: float = 0.0
    support: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.value.grid_shape != self.normal_derivative.grid_shape or self.value.ndim != 3:
            raise ValueError("value and normal derivative must share one 3-D grid")
        if self.mass < 0:
            raise ValueError("mass must be non-negative")
        if self.support is not None and self.support.shape != self.value.grid_shape:
            raise ValueError("support mask shape does not match the grid")

    @property
    def grids(self) -> tuple[SpatialGrid, ...]:
        return self.value.grids

    def spectra(self) -> tuple[np.ndarray, np.ndarray]:
        f = np.fft.fftn(self.value.values, norm="ortho")
        g = np.fft.fftn(self.normal_derivative.values, norm="ortho")
        if self.support is not None:
            f = np.where(self.support, f, 0)
            g = np.where(self.support, g, 0)
        return f, g

    def discriminants(self) -> np.ndarray:
        return discriminant(momentum_mesh(self.grids), self.mass)

    @classmethod
    def from_modes(cls, grids: Sequence[SpatialGrid], modes: dict, mass: float = 0.0) -> UltrahyperbolicData:
        """Data made of single Fourier modes.

        ``modes`` maps integer mode numbers ``(n_t2, n_x1, n_x2)`` (wavevector
        ``2 pi n / L`` per axis) to ``(f0, f0')`` amplitudes of the plane
        wave ``exp(i (w2 t2 + k1 x1 + k2 x2))``.
        """
        grids = tuple(grids)
        shape = tuple(g.n_points for g in grids)
        f = np.zeros(shape, dtype=np.complex128)
        g = np.zeros(shape, dtype=np.complex128)
        support = np.zeros(shape, dtype=bool)
        origin = [gr.positions[0] for gr in grids]
        scale = np.sqrt(np.prod(shape))
        for n, (a0, a1) in modes.items():
            idx = tuple(int(ni) % s for ni, s in zip(n, shape))
            k = [2 * np.pi * ni / gr.length for ni, gr in zip(n, grids)]
            # positions start at -L/2, so the grid sample phase carries exp(i k x_0)
            phase = np.exp(1j * sum(ki * x0 for ki, x0 in zip(k, origin)))
            f[idx] += a0 * phase * scale
            g[idx] += a1 * phase * scale
            support[idx] = True
        value = ComplexField(grids, np.fft.ifftn(f, norm="ortho"))
        deriv = ComplexField(grids, np.fft.ifftn(g, norm="ortho"))
        return cls(value, deriv, mass, 0.0, support)


def _mode_functions(d: np.ndarray, t):
    """(C, S, C', S') with C(0)=1, C'(0)=0, S(0)=0, S'(0)=1 for f'' = D f."""
    t = np.broadcast_to(np.asarray(t, dtype=float), d.shape)
    lam = np.sqrt(np.abs(d))
    grow, osc = d > 0, d < 0
    c = np.ones_like(d)
    s = t.copy()
    dc = np.zeros_like(d)
    ds = np.ones_like(d)
    lg, tg = lam[grow], t[grow]
    c[grow] = np.cosh(lg * tg)
    s[grow] = np.sinh(lg * tg) / lg
    dc[grow] = lg * np.sinh(lg * tg)
    ds[grow] = np.cosh(lg * tg)
    lo, to = lam[osc], t[osc]
    c[osc] = np.cos(lo * to)
    s[osc] = np.sin(lo * to) / lo
    dc[osc] = -lo * np.sin(lo * to)
    ds[osc] = np.cos(lo * to)
    return c, s, dc, ds


def mode_solution(d: float, t, f0: complex, df0: complex) -> tuple[np.ndarray, np.ndarray]:
    """(f(t), f'(t)) for one mode with discriminant ``d`` and data ``(f0, f0')``."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    dd = np.full(t.shape, float(d))
    if d > 0 and np.max(np.abs(t)) * np.sqrt(d) > OVERFLOW_EXPONENT:
        raise OverflowGuardError(f"rate {np.sqrt(d):.6g} times |t1| exceeds {OVERFLOW_EXPONENT}")
    c, s, dc, ds = _mode_functions(dd, t)
    return f0 * c + df0 * s, f0 * dc + df0 * ds


def _guard(data: UltrahyperbolicData, d: np.ndarray, t1: float):
    active = d > 0
    if data.support is not None:
        active &= data.support
    if not active.any():
        return
    lam = np.where(active, np.sqrt(np.where(active, d, 0.0)), 0.0)
    idx = np.unravel_index(int(np.argmax(lam)), lam.shape)
    if lam[idx] * abs(t1) > OVERFLOW_EXPONENT:
        kvec = tuple(float(g.momenta[i]) for g, i in zip(data.grids, idx))
        raise OverflowGuardError(
            f"mode (w2, k1, k2) = {kvec} grows at rate {lam[idx]:.6g}; "
            f"rate * |t1| = {lam[idx] * abs(t1):.6g} exceeds {OVERFLOW_EXPONENT}"
        )


def evolve_ultrahyperbolic(data: UltrahyperbolicData, t1: float) -> UltrahyperbolicData:
    """Exact per-mode solution advanced by ``t1`` (value and d/dt1 at the new slice)."""
    d = data.discriminants()
    _guard(data, d, t1)
    f0, g0 = data.spectra()
    # modes outside the support stay at t1 = 0 so they cannot overflow
    t = float(t1) if data.support is None else np.where(data.support, float(t1), 0.0)
    c, s, dc, ds = _mode_functions(d, t)
    f = f0 * c + g0 * s
    g = f0 * dc + g0 * ds
    grids = data.grids
    return UltrahyperbolicData(
        ComplexField(grids, np.fft.ifftn(f, norm="ortho")),
        ComplexField(grids, np.fft.ifftn(g, norm="ortho")),
        data.mass,
        data.t1 + float(t1),
        data.support,
    )


def craig_weinstein_filter(data: UltrahyperbolicData) -> UltrahyperbolicData:
    """Remove every growing or marginal Fourier mode from both Cauchy fields."""
    keep = data.discriminants() < 0
    if data.support is not None:
        keep &= data.support
    f0, g0 = data.spectra()
    grids = data.grids
    return UltrahyperbolicData(
        ComplexField(grids, np.fft.ifftn(np.where(keep, f0, 0), norm="ortho")),
        ComplexField(grids, np.fft.ifftn(np.where(keep, g0, 0), norm="ortho")),
        data.mass,
        data.t1,
        keep,
    )


def growth_report(data: UltrahyperbolicData, t1_samples: Sequence[float]) -> list[tuple[float, float]]:
    """Rows of (t1, L2 norm of the value field)."""
    return [(float(t), l2_norm(evolve_ultrahyperbolic(data, t).value)) for t in t1_samples]


def oscillatory_norm_bound(data: UltrahyperbolicData) -> float:
    """Uniform-in-t1 bound on the value norm for data without growing or marginal modes.

    Each oscillatory mode conserves ``w^2 |f|^2 + |f'|^2``, so
    ``|f(t1)|^2 <= |f0|^2 + |f0'|^2 / w^2``. Returns ``inf`` if the data
    carries weight on a non-oscillatory mode.
    """
    d = data.discriminants()
    f0, g0 = data.spectra()
    osc = d < 0
    if np.any(np.abs(f0[~osc]) > 0) or np.any(np.abs(g0[~osc]) > 0):
        return float("inf")
    w2 = -d[osc]
    total = np.sum(np.abs(f0[osc]) ** 2 + np.abs(g0[osc]) ** 2 / w2)
    return float(np.sqrt(total * data.value.cell_volume))


def mode_energy(data: UltrahyperbolicData) -> np.ndarray:
    """Per-mode ``w^2 |f|^2 + |f'|^2`` (meaningful on oscillatory modes)."""
    d = data.discriminants()
    f, g = data.spectra()
    return -d * np.abs(f) ** 2 + np.abs(g) ** 2


def log_slope(rows: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(norm) against t1."""
    t = np.array([r[0] for r in rows])
    y = np.log(np.array([r[1] for r in rows]))
    return float(np.polyfit(t, y, 1)[0])


@dataclass(frozen=True)
class WitnessReport:
    dispersion_ok: bool
    slice_value_max: float
    slice_dt1_max: float
    slice_dt2_max: float
    sup_difference: float
    residual: float

    @property
    def shared_data_deviation(self) -> float:
        return max(self.slice_value_max, self.slice_dt1_max, self.slice_dt2_max)


@dataclass(frozen=True)
class NonuniquenessWitness:
    """Two solutions, zero and ``sin(w1 t1) sin(w2 t2) cos(k1 x1) cos(k2 x2)``.

    Both vanish together with their first time derivatives on
    ``{t1 = t2 = 0}``; they differ by 1 in sup norm.
    """

    grid: SpatialGrid
    freqs: tuple[float, float, float, float]
    mass: float = 0.0

    def solution_a(self, t1, t2, x1, x2):
        return np.zeros(np.broadcast(t1, t2, x1, x2).shape)

    def solution_b(self, t1, t2, x1, x2):
        w1, w2, k1, k2 = self.freqs
        return np.sin(w1 * t1) * np.sin(w2 * t2) * np.cos(k1 * x1) * np.cos(k2 * x2)

    def spatial_slice(self, t1: float, t2: float) -> ComplexField:
        x1, x2 = np.meshgrid(self.grid.positions, self.grid.positions, indexing="ij")
        return ComplexField((self.grid, self.grid), self.solution_b(t1, t2, x1, x2))

    def equation_residual(self, h: float, sample: tuple[float, float] = (0.37, 0.61)) -> float:
        """Relative residual of the literal equation on the spatial grid.

        Time derivatives by central second differences of step ``h``;
        space derivatives spectral (exact for the band-limited cosines).
        """
        from .dirac import second_derivative

        t1, t2 = sample
        p = self.spatial_slice(t1, t2)
        d2t1 = (self.spatial_slice(t1 + h, t2) - p * 2.0 + self.spatial_slice(t1 - h, t2)) * (1 / h**2)
        d2t2 = (self.spatial_slice(t1, t2 + h) - p * 2.0 + self.spatial_slice(t1, t2 - h)) * (1 / h**2)
        d2x1 = second_derivative(p, 0)
        d2x2 = second_derivative(p, 1)
        res = d2t1 + d2t2 - d2x1 - d2x2 - p * self.mass**2
        scale = sum(l2_norm(f) for f in (d2t1, d2t2, d2x1, d2x2)) + self.mass**2 * l2_norm(p)
        return l2_norm(res) / scale

    def report(self, h: float = 1e-3) -> WitnessReport:
        zero = self.spatial_slice(0.0, 0.0).values
        dt1 = (self.spatial_slice(h, 0.0).values - self.spatial_slice(-h, 0.0).values) / (2 * h)
        dt2 = (self.spatial_slice(0.0, h).values - self.spatial_slice(0.0, -h).values) / (2 * h)
        w1, w2, _, _ = self.freqs
        peak = self.spatial_slice(np.pi / (2 * w1), np.pi / (2 * w2)).values
        a = np.zeros_like(peak)
        return WitnessReport(
            dispersion_ok=True,
            slice_value_max=float(np.max(np.abs(zero))),
            slice_dt1_max=float(np.max(np.abs(dt1))),
            slice_dt2_max=float(np.max(np.abs(dt2))),
            sup_difference=float(np.max(np.abs(peak - a))),
            residual=self.equation_residual(h),
        )

    def cauchy_data(self, t2_grid: SpatialGrid) -> UltrahyperbolicData:
        """Data of solution B on ``{t1 = 0}`` over ``(t2, x1, x2)``."""
        t2, x1, x2 = np.meshgrid(t2_grid.positions, self.grid.positions, self.grid.positions, indexing="ij")
        w1, w2, k1, k2 = self.freqs
        grids = (t2_grid, self.grid, self.grid)
        value = ComplexField(grids, self.solution_b(0.0, t2, x1, x2))
        deriv = ComplexField(grids, w1 * np.sin(w2 * t2) * np.cos(k1 * x1) * np.cos(k2 * x2))
        return UltrahyperbolicData(value, deriv, self.mass)


def nonuniqueness_witness(grid: SpatialGrid, modes: Sequence[int] = (1, 1, 1, 1), mass: float = 0.0) -> NonuniquenessWitness:
    """Build the witness pair for integer mode numbers ``(a, b, c, d)``.

    Frequencies are ``2 pi / L * (a, b, c, d)`` for times ``t1, t2`` and
    positions ``x1, x2``. The literal equation requires
    ``a^2 + b^2 + (m L / 2 pi)^2 = c^2 + d^2``.
    """
    a, b, c, d = (int(v) for v in modes)
    if a == 0 or b == 0:
        raise ValueError("time mode numbers must be nonzero")
    mu2 = (mass * grid.length / (2 * np.pi)) ** 2
    if not np.isclose(a * a + b * b + mu2, c * c + d * d, rtol=0, atol=1e-12):
        raise ValueError(f"dispersion violated: {a}^2 + {b}^2 + {mu2:g} != {c}^2 + {d}^2")
    scale = 2 * np.pi / grid.length
    return NonuniquenessWitness(grid, tuple(scale * v for v in (a, b, c, d)), float(mass))


def dirac_mtd_dispersion_check(sig: MetricSignature, kvec: Sequence[float], m: float, tol: float = 1e-10) -> bool:
    """Whether a plane wave with covector ``kvec`` admits a nonzero spinor.

    Decided by rank deficiency of ``slash(k) - m I`` (smallest singular
    value) and cross-checked against ``g(k, k) == m^2``; a disagreement
    raises ``ArithmeticError``.
    """
    gs = build_gamma_set(sig)
    mat = slash(gs, kvec) - m * np.eye(gs.dim)
    scale = max(1.0, float(np.max(np.abs(kvec))), m)
    singular = float(np.linalg.svd(mat, compute_uv=False)[-1]) <= tol * scale
    on_shell = abs(sig.square(kvec) - m * m) <= tol * scale**2
    if singular != on_shell:
        raise ArithmeticError(f"rank test ({singular}) and mass shell test ({on_shell}) disagree for k={kvec}")
    return singular
