"""Binary symmetric and BPSK/AWGN channels plus syndrome statistics.

The closed-form syndrome moments use f_t(rho) = (1 - (1 - 2 rho)^t) / 2,
the probability that t independent flips have odd parity.  The variance
formula assumes every pair of checks shares at most one bit (Tanner girth
at least 6) and constant check degree 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .gf2 import BitMatrix

__all__ = [
    "BscChannel",
    "AwgnChannel",
    "ChannelModel",
    "transmit",
    "syndrome",
    "f_t",
    "syndrome_mean_formula",
    "syndrome_variance_formula",
    "llr_from_bsc",
    "llr_from_awgn",
    "LLR_CLAMP",
]

LLR_CLAMP = 30.0


@dataclass(frozen=True)
class BscChannel:
    """Binary symmetric channel with crossover probability rho in [0, 1/2]."""

    rho: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.rho <= 0.5:
            raise ValueError(f"crossover probability {self.rho} outside [0, 1/2]")


@dataclass(frozen=True)
class AwgnChannel:
    """BPSK over AWGN with noise standard deviation sigma > 0 (0 -> +1, 1 -> -1)."""

    sigma: float

    def __post_init__(self) -> None:
        if not self.sigma > 0.0:
            raise ValueError("sigma must be positive")


ChannelModel = Union[BscChannel, AwgnChannel]


def transmit(word: np.ndarray, channel: ChannelModel, rng: np.random.Generator) -> np.ndarray:
    """Send a codeword through the channel.

    BSC returns a bit vector with i.i.d. flips; AWGN returns the real
    received vector after BPSK mapping and Gaussian noise.
    """
    word = np.asarray(word, dtype=np.uint8)
    if isinstance(channel, BscChannel):
        flips = rng.random(word.shape[0]) < channel.rho
        return (word ^ flips.astype(np.uint8)).astype(np.uint8)
    symbols = 1.0 - 2.0 * word.astype(np.float64)
    return symbols + channel.sigma * rng.standard_normal(word.shape[0])


def syndrome(h: BitMatrix, y: np.ndarray) -> tuple[np.ndarray, int]:
    """Syndrome bits y H^T and the syndrome weight."""
    y = np.asarray(y, dtype=np.uint8)
    if y.shape[0] != h.ncols:
        raise ValueError(f"word length {y.shape[0]} does not match {h.ncols} columns")
    packed = 0
    for j in np.flatnonzero(y):
        packed |= 1 << int(j)
    bits = np.fromiter(
        ((r & packed).bit_count() & 1 for r in h.rows), dtype=np.uint8, count=h.nrows
    )
    return bits, int(bits.sum())


def f_t(t: int, rho: float) -> float:
    """Probability that t independent flips at rate rho have odd parity."""
    if not isinstance(t, int) or t < 1:
        raise ValueError("t must be a positive integer")
    if not 0.0 <= rho <= 0.5:
        raise ValueError(f"rho {rho} outside [0, 1/2]")
    return (1.0 - (1.0 - 2.0 * rho) ** t) / 2.0


def syndrome_mean_formula(n: int, rho: float) -> float:
    """Expected syndrome weight n * f_3(rho) for n checks of degree 3."""
    return n * f_t(3, rho)


def syndrome_variance_formula(n: int, rho: float) -> float:
    """Syndrome-weight variance n/2 * (7 f_6(rho) - 6 f_4(rho)).

    Valid when the Tanner graph has girth at least 6, so that each check
    overlaps each of its 6 neighbouring checks in exactly one bit.
    """
    return n / 2.0 * (7.0 * f_t(6, rho) - 6.0 * f_t(4, rho))


def llr_from_bsc(bits: np.ndarray, rho: float, clamp: float = LLR_CLAMP) -> np.ndarray:
    """Channel log-likelihood ratios (1 - 2b) ln((1-rho)/rho), clamped.

    rho = 0 would give infinite LLRs; the clamp keeps them at +-``clamp``
    so downstream decoders always see finite input.
    """
    if not 0.0 <= rho <= 0.5:
        raise ValueError(f"rho {rho} outside [0, 1/2]")
    bits = np.asarray(bits, dtype=np.float64)
    with np.errstate(divide="ignore"):
        magnitude = np.log((1.0 - rho) / rho) if rho > 0 else np.inf
    return np.clip((1.0 - 2.0 * bits) * magnitude, -clamp, clamp)


def llr_from_awgn(received: np.ndarray, sigma: float, clamp: float = LLR_CLAMP) -> np.ndarray:
    """Channel LLRs 2 r / sigma^2 for BPSK over AWGN, clamped."""
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    received = np.asarray(received, dtype=np.float64)
    return np.clip(2.0 * received / (sigma * sigma), -clamp, clamp)
