"""Discrete entropy measures built from probabilities alone (k_B = 1)."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ProbVector",
    "shannon",
    "s_plus",
    "s_minus",
    "log_plus",
    "log_minus",
    "tsallis",
    "renyi",
    "s_plus_equiprob_expansion",
    "s_minus_equiprob_expansion",
]

_SUM_TOL = 1e-12


@dataclass(frozen=True)
class ProbVector:
    """A finite probability distribution with every entry in (0, 1]."""

    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        probs = tuple(float(p) for p in self.probs)
        if not probs:
            raise ValueError("a distribution needs at least one state")
        for p in probs:
            if not (math.isfinite(p) and 0.0 < p <= 1.0):
                raise ValueError(f"probabilities must lie in (0, 1], got {p!r}")
        total = math.fsum(probs)
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls, omega: int) -> ProbVector:
        if omega < 1:
            raise ValueError(f"need at least one state, got {omega!r}")
        return cls((1.0 / omega,) * omega)

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)

    def __getitem__(self, index: int) -> float:
        return self.probs[index]


def shannon(dist: ProbVector) -> float:
    """Boltzmann-Gibbs entropy -sum(p ln p)."""
    # + 0.0 folds the IEEE -0.0 of a delta distribution into +0.0
    return -math.fsum(p * math.log(p) for p in dist.probs) + 0.0


def s_plus(dist: ProbVector) -> float:
    """Non-extensive entropy sum(1 - p**p)."""
    return math.fsum(1.0 - p**p for p in dist.probs)


def s_minus(dist: ProbVector) -> float:
    """Non-extensive entropy sum(p**(-p) - 1)."""
    return math.fsum(p ** (-p) - 1.0 for p in dist.probs)


def log_plus(x: float) -> float:
    """Deformed logarithm -(1 - x**x)/x on (0, 1]; pairs with :func:`s_plus`."""
    if not (math.isfinite(x) and 0.0 < x <= 1.0):
        raise ValueError(f"argument must lie in (0, 1], got {x!r}")
    return -(1.0 - x**x) / x


def log_minus(x: float) -> float:
    """Deformed logarithm -(x**(-x) - 1)/x on (0, 1]; pairs with :func:`s_minus`."""
    if not (math.isfinite(x) and 0.0 < x <= 1.0):
        raise ValueError(f"argument must lie in (0, 1], got {x!r}")
    return -(x ** (-x) - 1.0) / x


def _check_q(q: float) -> float:
    q = float(q)
    if not (math.isfinite(q) and q > 0.0) or q == 1.0:
        raise ValueError(f"q must be positive and different from 1, got {q!r}")
    return q


def tsallis(dist: ProbVector, q: float) -> float:
    """Tsallis entropy (1 - sum(p**q)) / (q - 1)."""
    q = _check_q(q)
    return (1.0 - math.fsum(p**q for p in dist.probs)) / (q - 1.0)


def renyi(dist: ProbVector, q: float) -> float:
    """Renyi entropy ln(sum(p**q)) / (1 - q)."""
    q = _check_q(q)
    return math.log(math.fsum(p**q for p in dist.probs)) / (1.0 - q) + 0.0


def _equiprob_expansion(omega: int, nterms: int, second_sign: float) -> float:
    if omega < 2:
        raise ValueError(f"the equiprobable expansion needs omega >= 2, got {omega!r}")
    if nterms not in (1, 2, 3):
        raise ValueError(f"nterms must be 1, 2, or 3, got {nterms!r}")
    s = math.log(omega)
    terms = (
        s,
        second_sign * 0.5 * s * s * math.exp(-s),
        s**3 * math.exp(-2.0 * s) / 6.0,
    )
    return math.fsum(terms[:nterms])


def s_plus_equiprob_expansion(omega: int, nterms: int) -> float:
    """Partial sum S_B - S_B^2 e^(-S_B)/2 + S_B^3 e^(-2 S_B)/6 with S_B = ln(omega)."""
    return _equiprob_expansion(omega, nterms, -1.0)


def s_minus_equiprob_expansion(omega: int, nterms: int) -> float:
    """Partial sum S_B + S_B^2 e^(-S_B)/2 + S_B^3 e^(-2 S_B)/6 with S_B = ln(omega)."""
    return _equiprob_expansion(omega, nterms, +1.0)
