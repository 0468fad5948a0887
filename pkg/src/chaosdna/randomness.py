"""Desk-scale statistical assessment of the symbol generator.

Three first-level tests (monobit frequency, block frequency with M=128 and
the runs test) are applied to bit sequences obtained by expanding each region
symbol s in 1..8 into the 3-bit big-endian code of s-1.  Second-level
aggregation follows the standard methodology: per-test pass proportion with
the band p_hat +- 3*sqrt(p_hat*(1-p_hat)/m) at p_hat = 0.99, and a chi-square
uniformity p-value over the collected first-level p-values (10 bins, 9
degrees of freedom, pass threshold 0.0001).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaincc

from .keystream import generate_key, generate_symbols

TEST_NAMES = ("monobit", "block_frequency", "runs")

SIGNIFICANCE = 0.01
UNIFORMITY_THRESHOLD = 1e-4
MIN_BITS = 100
MIN_PVALUES = 55


def symbols_to_bits(symbols) -> np.ndarray:
    """Region symbols 1..8 -> bits, 3 per symbol, big-endian code of s-1."""
    s = np.asarray(symbols, np.int64)
    if s.size and (s.min() < 1 or s.max() > 8):
        raise ValueError("symbols must lie in 1..8")
    v = s - 1
    bits = np.empty(3 * s.size, np.uint8)
    bits[0::3] = (v >> 2) & 1
    bits[1::3] = (v >> 1) & 1
    bits[2::3] = v & 1
    return bits


def _check_bits(bits) -> np.ndarray:
    b = np.asarray(bits, np.int64)
    if b.size < MIN_BITS:
        raise ValueError(f"need at least {MIN_BITS} bits, got {b.size}")
    if b.size and (b.min() < 0 or b.max() > 1):
        raise ValueError("bit sequence must contain only 0 and 1")
    return b


def monobit_pvalue(bits) -> float:
    b = _check_bits(bits)
    s = abs(int((2 * b - 1).sum()))
    return float(math.erfc(s / math.sqrt(2.0 * b.size)))


def block_frequency_pvalue(bits, m: int = 128) -> float:
    b = _check_bits(bits)
    nblocks = b.size // m
    if nblocks < 1:
        raise ValueError(f"sequence of {b.size} bits is shorter than one {m}-bit block")
    pi = b[: nblocks * m].reshape(nblocks, m).mean(axis=1)
    chi2 = 4.0 * m * ((pi - 0.5) ** 2).sum()
    return float(gammaincc(nblocks / 2.0, chi2 / 2.0))


def runs_pvalue(bits) -> float:
    b = _check_bits(bits)
    n = b.size
    pi = b.mean()
    # prerequisite frequency check; failure is reported as p = 0
    if abs(pi - 0.5) >= 2.0 / math.sqrt(n):
        return 0.0
    v = 1 + int(np.count_nonzero(b[1:] != b[:-1]))
    num = abs(v - 2.0 * n * pi * (1.0 - pi))
    den = 2.0 * math.sqrt(2.0 * n) * pi * (1.0 - pi)
    return float(math.erfc(num / den))


def run_statistical_tests(bits) -> dict[str, float]:
    b = _check_bits(bits)
    return {
        "monobit": monobit_pvalue(b),
        "block_frequency": block_frequency_pvalue(b),
        "runs": runs_pvalue(b),
    }


def pvalue_uniformity(pvalues) -> float:
    """Chi-square uniformity of p-values over 10 equal bins on [0, 1]."""
    p = np.asarray(pvalues, np.float64)
    if p.size < MIN_PVALUES:
        raise ValueError(f"need at least {MIN_PVALUES} p-values, got {p.size}")
    if p.min() < 0.0 or p.max() > 1.0:
        raise ValueError("p-values must lie in [0, 1]")
    idx = np.minimum((p * 10).astype(np.int64), 9)
    counts = np.bincount(idx, minlength=10)
    expected = p.size / 10.0
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    return float(gammaincc(4.5, chi2 / 2.0))


def proportion_band(count: int, p_hat: float = 1.0 - SIGNIFICANCE) -> tuple[float, float]:
    """Acceptance band p_hat +- 3*sqrt(p_hat*(1-p_hat)/count), clamped to [0, 1]."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    half = 3.0 * math.sqrt(p_hat * (1.0 - p_hat) / count)
    return max(0.0, p_hat - half), min(1.0, p_hat + half)


@dataclass(frozen=True)
class BatchAssessment:
    count: int
    bit_length: int
    band: tuple[float, float]
    proportions: dict[str, float]
    p_value_t: dict[str, float]

    def passed(self) -> bool:
        lo, hi = self.band
        return all(lo <= p <= hi for p in self.proportions.values()) and all(
            t > UNIFORMITY_THRESHOLD for t in self.p_value_t.values()
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "count": self.count,
                "bit_length": self.bit_length,
                "band": list(self.band),
                "proportions": self.proportions,
                "p_value_T": self.p_value_t,
                "passed": self.passed(),
            },
            indent=2,
        )


def batch_assess(
    count: int, bit_length: int, rng: random.Random | None = None
) -> BatchAssessment:
    """Generate `count` sequences of `bit_length` bits, each from a fresh
    random key, and aggregate per-test pass proportions and p_value_T."""
    if count < MIN_PVALUES:
        raise ValueError(f"count must be >= {MIN_PVALUES}, got {count}")
    if bit_length < 10_000:
        raise ValueError(f"bit_length must be >= 10000, got {bit_length}")
    rng = rng if rng is not None else random.Random()
    nsym = -(-bit_length // 3)
    pvals: dict[str, list[float]] = {name: [] for name in TEST_NAMES}
    for _ in range(count):
        key = generate_key(rng)
        bits = symbols_to_bits(generate_symbols(key, nsym))[:bit_length]
        for name, p in run_statistical_tests(bits).items():
            pvals[name].append(p)
    proportions = {
        name: sum(p > SIGNIFICANCE for p in ps) / count for name, ps in pvals.items()
    }
    p_value_t = {name: pvalue_uniformity(ps) for name, ps in pvals.items()}
    return BatchAssessment(count, bit_length, proportion_band(count), proportions, p_value_t)
