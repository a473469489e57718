"""Free 1+1 Dirac and square-root Klein-Gordon Hamiltonians, applied in Fourier space.

For the Dirac case ``H(k) = alpha*k + beta*m`` with ``beta = gamma^0`` and
``alpha = gamma^0 gamma^1`` taken from the (1, 1) gamma set, so that
``alpha^2 = beta^2 = I`` and ``{alpha, beta} = 0``. The scalar case is
``H(k) = sqrt(k^2 + m^2)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .clifford import MetricSignature, build_gamma_set
from .lattice import ComplexField

GAMMA_11 = build_gamma_set(MetricSignature(1, 1))
BETA = GAMMA_11[0]
ALPHA = GAMMA_11[0] @ GAMMA_11[1]


class Variant(enum.Enum):
    DIRAC11 = "dirac"
    KG_ROOT = "kg"


@dataclass(frozen=True)
class ParticleKind:
    variant: Variant
    mass: float = 0.0

    def __post_init__(self):
        if not self.mass >= 0:
            raise ValueError(f"mass must be non-negative, got {self.mass}")

    @classmethod
    def dirac(cls, mass: float = 0.0) -> ParticleKind:
        return cls(Variant.DIRAC11, float(mass))

    @classmethod
    def klein_gordon(cls, mass: float = 0.0) -> ParticleKind:
        return cls(Variant.KG_ROOT, float(mass))

    @property
    def n_components(self) -> int:
        return 2 if self.variant is Variant.DIRAC11 else 1


def energy(kind: ParticleKind, k) -> np.ndarray:
    k = np.asarray(k, dtype=float)
    return np.sqrt(k * k + kind.mass**2)


def hamiltonian_symbol(kind: ParticleKind, k) -> np.ndarray:
    """H(k) as an array of shape ``k.shape + (c, c)``."""
    k = np.asarray(k, dtype=float)
    if kind.variant is Variant.DIRAC11:
        return k[..., None, None] * ALPHA + kind.mass * BETA
    return energy(kind, k)[..., None, None].astype(np.complex128)


def propagator_symbol(kind: ParticleKind, k, t) -> np.ndarray:
    """exp(-i H(k) t) in closed form; ``k`` and ``t`` broadcast together."""
    k, t = np.broadcast_arrays(np.asarray(k, dtype=float), np.asarray(t, dtype=float))
    e = energy(kind, k)
    if kind.variant is Variant.KG_ROOT:
        return np.exp(-1j * e * t)[..., None, None]
    # sin(Et)/E written via sinc so that E = 0 is regular
    sin_over_e = t * np.sinc(e * t / np.pi)
    cos_et = np.cos(e * t)
    h = hamiltonian_symbol(kind, k)
    return cos_et[..., None, None] * np.eye(2) - 1j * sin_over_e[..., None, None] * h


def expm_scaling_squaring(a: np.ndarray, terms: int = 24) -> np.ndarray:
    """Dense matrix exponential by Taylor series plus repeated squaring.

    Kept independent of the closed-form propagator; used as its oracle.
    """
    a = np.asarray(a, dtype=np.complex128)
    norm = np.linalg.norm(a, ord=1)
    s = max(0, int(np.ceil(np.log2(norm / 0.25)))) if norm > 0.25 else 0
    x = a / 2**s
    result = np.eye(a.shape[0], dtype=np.complex128)
    term = np.eye(a.shape[0], dtype=np.complex128)
    for n in range(1, terms + 1):
        term = term @ x / n
        result = result + term
    for _ in range(s):
        result = result @ result
    return result


def _spin_axis(field: ComplexField, axis: int) -> int:
    return field.ndim + axis


def _check_axis(field: ComplexField, kind: ParticleKind, axis: int):
    if not 0 <= axis < field.ndim:
        raise IndexError(f"particle axis {axis} out of range for a {field.ndim}-particle field")
    if len(field.spin_shape) != field.ndim:
        raise ValueError("field needs one spin index per particle axis")
    if field.spin_shape[axis] != kind.n_components:
        raise ValueError(
            f"particle {axis} carries {field.spin_shape[axis]} components, {kind.variant.value} needs {kind.n_components}"
        )


def apply_symbol(field: ComplexField, axis: int, symbol: np.ndarray) -> ComplexField:
    """Multiply mode-by-mode along one particle axis by a (N, c, c) matrix symbol.

    The matrix acts on that particle's spin index; other indices are spectators.
    """
    spin = _spin_axis(field, axis)
    v = np.fft.fft(field.values, axis=axis)
    v = np.moveaxis(v, (axis, spin), (-2, -1))
    v = np.einsum("kab,...kb->...ka", symbol, v)
    v = np.moveaxis(v, (-2, -1), (axis, spin))
    return field.with_values(np.fft.ifft(v, axis=axis))


def evolve_free(field: ComplexField, kind: ParticleKind, axis: int, t: float) -> ComplexField:
    """Apply exp(-i H_axis t) to ``field`` along one particle's coordinates."""
    _check_axis(field, kind, axis)
    if t == 0:
        return field
    k = field.grids[axis].momenta
    return apply_symbol(field, axis, propagator_symbol(kind, k, t))


def apply_hamiltonian(field: ComplexField, kind: ParticleKind, axis: int) -> ComplexField:
    _check_axis(field, kind, axis)
    return apply_symbol(field, axis, hamiltonian_symbol(kind, field.grids[axis].momenta))


def second_derivative(field: ComplexField, axis: int) -> ComplexField:
    """Spectral d^2/dx^2 along a spatial axis."""
    k = field.grids[axis].momenta
    shape = [1] * field.values.ndim
    shape[axis] = -1
    v = np.fft.fft(field.values, axis=axis) * (-(k**2)).reshape(shape)
    return field.with_values(np.fft.ifft(v, axis=axis))
