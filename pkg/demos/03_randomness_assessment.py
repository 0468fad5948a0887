"""Statistical assessment of the chaotic symbol generator.

Draws 100 random keys, generates a 100,000-bit sequence from each (region
symbols of the standard-map trajectory, expanded to 3 bits per symbol), and
runs the monobit, block-frequency and runs tests on every sequence.  The
batch passes when each test's pass proportion falls inside the three-sigma
band around 0.99 and the p-values are uniformly distributed.
"""

import random

from chaosdna import randomness

assessment = randomness.batch_assess(100, 100_000, random.Random())
lo, hi = assessment.band
print(f"pass-proportion band: [{lo:.5f}, {hi:.5f}]")
for name in randomness.TEST_NAMES:
    print(
        f"  {name:16s} proportion {assessment.proportions[name]:.2f}"
        f"   p_value_T {assessment.p_value_t[name]:.4f}"
    )
print("overall:", "PASS" if assessment.passed() else "FAIL")
