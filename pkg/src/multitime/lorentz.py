"""1+1 Lorentz boosts and the frame change of two-particle multi-time wave functions.

Boosts act on (t, x) as ``[[cosh chi, sinh chi], [sinh chi, cosh chi]]``;
the spinor representation is ``S = exp(chi * alpha / 2)`` with
``alpha = gamma^0 gamma^1``, which satisfies
``S^-1 gamma^mu S = Lambda^mu_nu gamma^nu``. The transformed wave function is

    phi'(x1', x2') = (S (x) S) phi(Lambda^-1 x1', Lambda^-1 x2').
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dirac import ALPHA, BETA, GAMMA_11, Variant, hamiltonian_symbol, propagator_symbol
from .mts import MultiTimeState, SpacetimePoint


@dataclass(frozen=True)
class Boost:
    rapidity: float = 0.0

    @classmethod
    def from_velocity(cls, v: float) -> Boost:
        return cls(float(np.arctanh(v)))

    @property
    def matrix(self) -> np.ndarray:
        c, s = np.cosh(self.rapidity), np.sinh(self.rapidity)
        return np.array([[c, s], [s, c]])

    @property
    def spinor_rep(self) -> np.ndarray:
        h = 0.5 * self.rapidity
        return np.cosh(h) * np.eye(2) + np.sinh(h) * ALPHA

    @property
    def inverse(self) -> Boost:
        return Boost(-self.rapidity)

    def compose(self, other: Boost) -> Boost:
        """The boost ``self`` applied after ``other``."""
        return Boost(self.rapidity + other.rapidity)


def boost_point(b: Boost, p: SpacetimePoint) -> SpacetimePoint:
    t, x = b.matrix @ np.array([p[0], p[1]], dtype=float)
    return SpacetimePoint(float(t), float(x))


def intertwining_residual(b: Boost) -> float:
    """max_mu |S^-1 gamma^mu S - Lambda^mu_nu gamma^nu|."""
    s = b.spinor_rep
    s_inv = np.linalg.inv(s)
    lam = b.matrix
    worst = 0.0
    for mu in range(2):
        lhs = s_inv @ GAMMA_11[mu] @ s
        rhs = lam[mu, 0] * GAMMA_11[0] + lam[mu, 1] * GAMMA_11[1]
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


class MultiTimeEvaluator:
    """Evaluate a two-particle Dirac state at arbitrary (t1, x1, t2, x2).

    Exact propagation in time and band-limited (trigonometric) interpolation
    in space. ``derivative`` selects per particle ``None``, ``"x"`` or
    ``"t"`` to return the corresponding partial derivative instead.
    """

    def __init__(self, state: MultiTimeState, time_range: tuple[float, float] | None = None, chunk: int = 2048):
        if state.n_particles != 2:
            raise ValueError("evaluator supports two particles")
        self.state = state
        self.time_range = time_range
        self.chunk = chunk
        grids = state.field.grids
        self._k = [g.momenta for g in grids]
        self._x0 = [g.positions[0] for g in grids]
        n1, n2 = state.field.grid_shape
        self._spec = np.fft.fft2(state.field.values, axes=(0, 1)) / (n1 * n2)

    def _symbol(self, j: int, t: np.ndarray, x: np.ndarray, derivative) -> np.ndarray:
        kind = self.state.kinds[j]
        k = self._k[j]
        u = propagator_symbol(kind, k[None, :], (t - self.state.times[j])[:, None])
        if derivative == "x":
            u = u * (1j * k)[None, :, None, None]
        elif derivative == "t":
            u = -1j * np.einsum("kab,pkbc->pkac", hamiltonian_symbol(kind, k), u)
        elif derivative is not None:
            raise ValueError(f"unknown derivative {derivative!r}")
        wave = np.exp(1j * np.outer(x - self._x0[j], k))
        return wave[:, :, None, None] * u

    def __call__(self, t1, x1, t2, x2, derivative: Sequence = (None, None)) -> np.ndarray:
        t1, x1, t2, x2 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (t1, x1, t2, x2)))
        shape = t1.shape
        if self.time_range is not None:
            lo, hi = self.time_range
            for t in (t1, t2):
                if t.size and (t.min() < lo or t.max() > hi):
                    raise ValueError(f"evaluation time outside the covered range [{lo}, {hi}]")
        flat = [a.reshape(-1) for a in (t1, x1, t2, x2)]
        spec = self._spec
        n1, n2, c1, c2 = spec.shape
        spec_m = np.transpose(spec, (1, 3, 0, 2)).reshape(n2 * c2, n1 * c1)
        out = np.empty((flat[0].size, c1, c2), dtype=np.complex128)
        for start in range(0, flat[0].size, self.chunk):
            sl = slice(start, start + self.chunk)
            w2 = self._symbol(1, flat[2][sl], flat[3][sl], derivative[1])  # (p, k2, c2, c2')
            p = w2.shape[0]
            w2m = np.transpose(w2, (0, 2, 1, 3)).reshape(p * c2, n2 * c2)
            b = (w2m @ spec_m).reshape(p, c2, n1, c1)
            w1 = self._symbol(0, flat[0][sl], flat[1][sl], derivative[0])  # (p, k1, c1, c1')
            out[sl] = np.einsum("pkab,pckb->pac", w1, b)
        return out.reshape(shape + (c1, c2))


class BoostedEvaluator:
    """phi' in the boosted frame, built on a :class:`MultiTimeEvaluator`."""

    def __init__(self, evaluator: MultiTimeEvaluator, boost: Boost):
        self.evaluator = evaluator
        self.boost = boost
        self._s = boost.spinor_rep

    def _unprimed(self, tp, xp):
        c, s = np.cosh(self.boost.rapidity), np.sinh(self.boost.rapidity)
        return c * tp - s * xp, -s * tp + c * xp

    def _spin(self, phi: np.ndarray) -> np.ndarray:
        return np.einsum("ab,cd,...bd->...ac", self._s, self._s, phi)

    def __call__(self, t1p, x1p, t2p, x2p) -> np.ndarray:
        t1, x1 = self._unprimed(t1p, x1p)
        t2, x2 = self._unprimed(t2p, x2p)
        return self._spin(self.evaluator(t1, x1, t2, x2))

    def space_derivative(self, j: int, t1p, x1p, t2p, x2p) -> np.ndarray:
        """d phi' / d x_j' by the chain rule through exact spectral derivatives."""
        c, s = np.cosh(self.boost.rapidity), np.sinh(self.boost.rapidity)
        t1, x1 = self._unprimed(t1p, x1p)
        t2, x2 = self._unprimed(t2p, x2p)
        dt = [None, None]
        dx = [None, None]
        dt[j], dx[j] = "t", "x"
        d = -s * self.evaluator(t1, x1, t2, x2, dt) + c * self.evaluator(t1, x1, t2, x2, dx)
        return self._spin(d)


def transform_state(evaluator: MultiTimeEvaluator, b: Boost) -> BoostedEvaluator:
    return BoostedEvaluator(evaluator, b)


def _act(matrix: np.ndarray, phi: np.ndarray, j: int) -> np.ndarray:
    if j == 0:
        return np.einsum("ab,...bc->...ac", matrix, phi)
    return np.einsum("cd,...ad->...ac", matrix, phi)


def sample_points(state: MultiTimeState, max_per_axis: int = 32) -> tuple[np.ndarray, np.ndarray]:
    """Grid positions (strided down to at most ``max_per_axis``) as a 2-D mesh."""
    axes = []
    for g in state.field.grids:
        stride = max(1, g.n_points // max_per_axis)
        axes.append(g.positions[::stride])
    return np.meshgrid(*axes, indexing="ij")


def covariance_residual(
    initial: MultiTimeState,
    b: Boost,
    sample: Sequence[float],
    h: float,
    points: tuple[np.ndarray, np.ndarray] | None = None,
) -> float:
    """Relative residual of i d/dt_j' phi' = H_j phi' (j = 1, 2) in the boosted frame.

    Time derivatives are central differences of step ``h``; ``H_j`` uses the
    exact spatial derivative of the interpolated, transformed state.
    """
    if any(k.variant is not Variant.DIRAC11 for k in initial.kinds):
        raise ValueError("covariance check is implemented for Dirac particles")
    masses = [k.mass for k in initial.kinds]
    phi_p = transform_state(MultiTimeEvaluator(initial), b)
    x1, x2 = sample_points(initial) if points is None else points
    t1, t2 = (np.full_like(x1, s, dtype=float) for s in sample)
    num = den = 0.0
    for j in range(2):
        shift = [0.0, 0.0]
        shift[j] = h
        plus = phi_p(t1 + shift[0], x1, t2 + shift[1], x2)
        minus = phi_p(t1 - shift[0], x1, t2 - shift[1], x2)
        lhs = 1j * (plus - minus) / (2 * h)
        phi = phi_p(t1, x1, t2, x2)
        dphi = phi_p.space_derivative(j, t1, x1, t2, x2)
        rhs = _act(-1j * ALPHA, dphi, j) + masses[j] * _act(BETA, phi, j)
        num += float(np.sum(np.abs(lhs - rhs) ** 2))
        den += float(np.sum(np.abs(rhs) ** 2))
    return float(np.sqrt(num / den))


def positive_energy_plane_wave_check(kind, k: float, b: Boost) -> float:
    """Distance of S u(k) from the positive-energy eigenline of H(k'), k' = boosted momentum.

    Returns the residual |H(k') S u - E' S u| / |S u|.
    """
    h = hamiltonian_symbol(kind, k)
    w, v = np.linalg.eigh(h)
    u = v[:, np.argmax(w)]
    e = float(np.max(w))
    e_p, k_p = b.matrix @ np.array([e, k])
    su = b.spinor_rep @ u
    return float(np.linalg.norm(hamiltonian_symbol(kind, k_p) @ su - e_p * su) / np.linalg.norm(su))
