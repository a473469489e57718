"""Gamma matrices for a flat metric with q timelike and p spacelike directions.

The generators are built from tensor products of Pauli matrices
(Jordan-Wigner pattern), giving 2m mutually anticommuting Hermitian
matrices of size 2^m that square to the identity. Timelike slots use them
as they are; spacelike slots are multiplied by i so they square to -I.
All entries are in {0, +-1, +-i}, so every Clifford relation holds exactly
in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

MAX_DIMENSION = 8

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
I2 = np.eye(2, dtype=np.complex128)


@dataclass(frozen=True)
class MetricSignature:
    q: int  # timelike, metric entry +1
    p: int  # spacelike, metric entry -1

    def __post_init__(self):
        if self.q < 1 or self.p < 1:
            raise ValueError(f"need q >= 1 and p >= 1, got q={self.q}, p={self.p}")

    @property
    def dimension(self) -> int:
        return self.q + self.p

    @property
    def metric(self) -> np.ndarray:
        return np.diag([1.0] * self.q + [-1.0] * self.p)

    def square(self, kvec) -> float:
        """g(k, k) = sum of timelike squares minus sum of spacelike squares."""
        k = np.asarray(kvec, dtype=float)
        return float(np.sum(k[: self.q] ** 2) - np.sum(k[self.q :] ** 2))


@dataclass(frozen=True)
class GammaSet:
    signature: MetricSignature
    matrices: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    def __getitem__(self, mu: int) -> np.ndarray:
        return self.matrices[mu]

    def __len__(self) -> int:
        return len(self.matrices)


def _euclidean_generators(count: int) -> list[np.ndarray]:
    m = (count + 1) // 2
    gens = []
    for i in range(m):
        for pauli in (SIGMA_X, SIGMA_Y):
            factors = [SIGMA_Z] * i + [pauli] + [I2] * (m - i - 1)
            gens.append(reduce(np.kron, factors))
    return gens[:count]


def build_gamma_set(sig: MetricSignature) -> GammaSet:
    d = sig.dimension
    if d > MAX_DIMENSION:
        raise ValueError(f"unsupported dimension p+q={d} (max {MAX_DIMENSION})")
    gens = _euclidean_generators(d)
    mats = []
    for mu, e in enumerate(gens):
        g = e if mu < sig.q else 1j * e
        g = g.copy()
        g.setflags(write=False)
        mats.append(g)
    return GammaSet(sig, tuple(mats))


@dataclass(frozen=True)
class CliffordReport:
    max_deviation: float
    worst_pair: tuple[int, int] | None

    @property
    def ok(self) -> bool:
        return self.max_deviation == 0.0


def verify_clifford(gs: GammaSet) -> CliffordReport:
    """Largest entrywise deviation of {g^mu, g^nu} - 2 g^{mu nu} I over all pairs."""
    metric = gs.signature.metric
    eye = np.eye(gs.dim)
    worst, pair = 0.0, None
    for mu in range(len(gs)):
        for nu in range(mu, len(gs)):
            a, b = gs[mu], gs[nu]
            dev = float(np.max(np.abs(a @ b + b @ a - 2 * metric[mu, nu] * eye)))
            if dev > worst:
                worst, pair = dev, (mu, nu)
    return CliffordReport(worst, pair)


def slash(gs: GammaSet, kvec) -> np.ndarray:
    """gamma^mu k_mu for a covector k."""
    k = np.asarray(kvec, dtype=float)
    if k.shape != (len(gs),):
        raise ValueError(f"covector must have length {len(gs)}, got shape {k.shape}")
    return np.einsum("m,mij->ij", k, np.stack(gs.matrices))
