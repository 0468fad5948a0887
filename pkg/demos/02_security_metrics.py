"""Full security evaluation of one plain/cipher pair.

Encrypts a synthetic photograph and prints the complete metrics report:
histogram uniformity, deviation measures, DNA sequence statistics,
correlations, entropy, perceptual quality, and the differential and
key-sensitivity campaigns.  Takes about half a minute.
"""

import random

from chaosdna import metrics, synth
from chaosdna.cipher import encrypt
from chaosdna.keystream import generate_key

rng = random.Random(2024)
key = generate_key(rng)
plain = synth.natural_image(200, 200, seed=8)
cipher = encrypt(plain, key)

report = metrics.analyze_pair(plain, cipher, key, trials=10, blocksizes=(25, 40, 50), rng=rng)
print(report.to_text())
