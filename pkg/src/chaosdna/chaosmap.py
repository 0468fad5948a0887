"""2D conservative chaotic standard map, iterated in IEEE-754 double precision.

The map is

    x' = (x + k*sin(y)) mod 2*pi
    y' = (x' + y)       mod 2*pi

with both coordinates kept in [0, 2*pi).  The modulo is the non-negative
(Euclidean) remainder; Python's float ``%`` already has that convention for a
positive divisor.  Because ``(tiny negative) % 2*pi`` can round up to exactly
2*pi, results equal to the period are wrapped back to 0.0 so the half-open
range invariant holds bit-exactly.

Globally chaotic (no regular islands) for k > 18; that bound is enforced at
key validation, not here.
"""

from __future__ import annotations

import math

TWO_PI = 2.0 * math.pi


def step(x: float, y: float, k: float) -> tuple[float, float]:
    """One iteration of the map.  Note y' is computed from x', not x."""
    x = (x + k * math.sin(y)) % TWO_PI
    if x >= TWO_PI:
        x = 0.0
    y = (x + y) % TWO_PI
    if y >= TWO_PI:
        y = 0.0
    return x, y


def iterate_n(x: float, y: float, k: float, n: int) -> tuple[float, float]:
    """Apply `step` n times (n >= 0); n == 0 returns the state unchanged."""
    if n < 0:
        raise ValueError(f"iteration count must be non-negative, got {n}")
    sin = math.sin
    two_pi = TWO_PI
    for _ in range(n):
        x = (x + k * sin(y)) % two_pi
        if x >= two_pi:
            x = 0.0
        y = (x + y) % two_pi
        if y >= two_pi:
            y = 0.0
    return x, y
