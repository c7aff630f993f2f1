"""Unnormalized complex state vectors built from per-qubit init choices.

Bit order: qubit 0, the first tensor factor, is the MOST significant bit
of the basis index, so (1 0) ⊗ (1 0) ⊗ (1 1) puts its two nonzero
amplitudes at indices 0 and 1. The opposite convention is common in
other simulators; everything in this package assumes this one.

States are kept unnormalized on purpose: encoding produces exact 0/1
amplitudes, and only `probabilities` (and the Grover driver) divide by
the squared norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .errors import DegenerateStateError, ResourceLimitError

# 2^24 amplitudes = 256 MiB of complex128; a desk-scale guard, overridable
# per call via max_qubits.
DEFAULT_QUBIT_CAP = 24

DEFAULT_SUPPORT_EPS = 1e-9


class Factor(Enum):
    """Per-qubit init choice: basis 0, basis 1, or the unnormalized pair."""

    ZERO = "Z"  # (1 0)
    ONE = "O"   # (0 1)
    BOTH = "B"  # (1 1)

    @property
    def vector(self) -> np.ndarray:
        return _FACTOR_VECTORS[self].copy()


_FACTOR_VECTORS = {
    Factor.ZERO: np.array([1.0, 0.0], dtype=np.complex128),
    Factor.ONE: np.array([0.0, 1.0], dtype=np.complex128),
    Factor.BOTH: np.array([1.0, 1.0], dtype=np.complex128),
}


def parse_pattern(text: str) -> tuple[Factor, ...]:
    """Turn a letter string like "ZZB" into a factor tuple."""
    factors = []
    for ch in text:
        try:
            factors.append(Factor(ch.upper()))
        except ValueError:
            raise ValueError(
                f"bad pattern letter {ch!r}: use Z=(1 0), O=(0 1), B=(1 1)"
            ) from None
    return tuple(factors)


@dataclass(eq=False)
class StateVector:
    """2^n complex amplitudes indexed by basis state; not kept normalized."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"qubit count must be >= 0, got {self.n}")
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise ValueError(
                f"expected {1 << self.n} amplitudes for n={self.n}, got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        self.amps = amps

    def __len__(self) -> int:
        return len(self.amps)

    def to_json_dict(self) -> dict:
        """JSON form: {"n": n, "amps": [[re, im], ...]} in basis-index order."""
        return {
            "n": self.n,
            "amps": [[float(a.real), float(a.imag)] for a in self.amps],
        }

    @classmethod
    def from_json_dict(cls, data) -> StateVector:
        if not isinstance(data, dict) or "n" not in data or "amps" not in data:
            raise ValueError('state JSON must look like {"n": <int>, "amps": [[re, im], ...]}')
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"bad qubit count {n!r}")
        raw = data["amps"]
        if not isinstance(raw, list) or len(raw) != (1 << n):
            raise ValueError(f"expected {1 << n} amplitude pairs for n={n}")
        amps = np.empty(1 << n, dtype=np.complex128)
        for k, pair in enumerate(raw):
            if (
                not isinstance(pair, (list, tuple))
                or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
            ):
                raise ValueError(f"amplitude {k} must be a [re, im] number pair")
            amps[k] = complex(pair[0], pair[1])
        return cls(n, amps)


def encode(
    pattern: str | Iterable[Factor], *, max_qubits: int = DEFAULT_QUBIT_CAP
) -> StateVector:
    """Kronecker product of the per-qubit factor vectors, left to right.

    Accepts a Factor sequence or a letter string ("ZZB"). The result has
    amplitudes that are exactly 0.0 or 1.0, with support of size 2^i
    where i counts the BOTH factors.
    """
    factors = parse_pattern(pattern) if isinstance(pattern, str) else tuple(pattern)
    n = len(factors)
    if n < 1:
        raise ValueError("init pattern needs at least one factor")
    if n > max_qubits:
        raise ResourceLimitError(f"{n} qubits exceeds the cap of {max_qubits}")
    amps = np.array([1.0], dtype=np.complex128)
    for factor in factors:
        amps = np.kron(amps, _FACTOR_VECTORS[factor])
    return StateVector(n, amps)


def kron(a: StateVector, b: StateVector, *, max_qubits: int = DEFAULT_QUBIT_CAP) -> StateVector:
    """Tensor product; entry p*2^b.n + q equals a.amps[p] * b.amps[q]."""
    if a.n + b.n > max_qubits:
        raise ResourceLimitError(
            f"{a.n}+{b.n} qubits exceeds the cap of {max_qubits}"
        )
    return StateVector(a.n + b.n, np.kron(a.amps, b.amps))


def norm_squared(psi: StateVector) -> float:
    """Sum of squared amplitude magnitudes."""
    return float(np.real(np.vdot(psi.amps, psi.amps)))


def support(psi: StateVector, eps: float = DEFAULT_SUPPORT_EPS) -> set[int]:
    """Basis indices whose amplitude magnitude exceeds eps."""
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return {int(k) for k in np.flatnonzero(np.abs(psi.amps) > eps)}


def probabilities(psi: StateVector) -> np.ndarray:
    """Measurement distribution |amps|^2 / norm_squared, as a float array."""
    total = norm_squared(psi)
    if total == 0.0:
        raise DegenerateStateError("the all-zero state has no measurement distribution")
    return np.abs(psi.amps) ** 2 / total
