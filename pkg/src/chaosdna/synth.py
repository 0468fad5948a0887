"""Deterministic synthetic test images.

Stand-ins for the usual photographic test set: smooth shaded content with
high adjacent-pixel correlation and a non-uniform histogram, plus the flat
all-black / all-white extremes.
"""

from __future__ import annotations

import numpy as np


def natural_image(h: int = 200, w: int = 200, seed: int = 0) -> np.ndarray:
    """Smooth, correlated grayscale content (gradients + low-frequency waves
    + mild noise), resembling a natural photograph statistically."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:h, 0:w]
    img = (
        110.0
        + 60.0 * np.sin(2 * np.pi * xx / w * (1.5 + seed % 3))
        + 45.0 * np.cos(2 * np.pi * yy / h * (2.0 + seed % 2))
        + 30.0 * np.sin(2 * np.pi * (xx + yy) / (h + w) * 3.0)
        + 0.2 * xx
        - 0.15 * yy
    )
    # light noise, then a 3x3 box blur to restore local correlation
    img = img + rng.normal(0.0, 6.0, size=(h, w))
    padded = np.pad(img, 1, mode="edge")
    img = sum(
        padded[di : di + h, dj : dj + w] for di in range(3) for dj in range(3)
    ) / 9.0
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def all_black(h: int = 200, w: int = 200) -> np.ndarray:
    return np.zeros((h, w), np.uint8)


def all_white(h: int = 200, w: int = 200) -> np.ndarray:
    return np.full((h, w), 255, np.uint8)


def random_image(h: int, w: int, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, 256, size=(h, w), dtype=np.uint8)
