import numpy as np
import pytest

from chaosdna import randomness


def bits(s: str) -> np.ndarray:
    return np.array([int(c) for c in s], np.uint8)


class TestSymbolsToBits:
    def test_single_symbols(self):
        assert randomness.symbols_to_bits([1]).tolist() == [0, 0, 0]
        assert randomness.symbols_to_bits([8]).tolist() == [1, 1, 1]

    def test_sequence(self):
        assert randomness.symbols_to_bits([1, 2, 3]).tolist() == [0, 0, 0, 0, 0, 1, 0, 1, 0]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            randomness.symbols_to_bits([0])
        with pytest.raises(ValueError):
            randomness.symbols_to_bits([9])


class TestMonobit:
    def test_alternating_sequence_p_one(self):
        seq = np.tile([0, 1], 5000)
        assert randomness.monobit_pvalue(seq) == 1.0

    def test_all_ones_fails(self):
        assert randomness.monobit_pvalue(np.ones(10_000, np.uint8)) < 1e-10

    def test_nist_worked_example_100_bits(self):
        # first 100 bits of the binary expansion of pi; published p-value 0.109599
        pi_bits = (
            "1100100100001111110110101010001000100001011010001100001000110100"
            "110001001100011001100010100010111000"
        )
        assert randomness.monobit_pvalue(bits(pi_bits)) == pytest.approx(0.109599, abs=1e-6)

    def test_min_length_enforced(self):
        with pytest.raises(ValueError):
            randomness.monobit_pvalue(np.ones(99, np.uint8))


class TestBlockFrequency:
    def test_nist_worked_example(self):
        # epsilon = 0110011010, M = 3; published p-value 0.801252
        p = randomness.block_frequency_pvalue(
            np.concatenate([bits("0110011010")] * 10), m=3
        )
        # the repeated sequence changes the statistic; check the raw example
        chi_seq = bits("0110011010")
        got = _block_freq_unchecked(chi_seq, 3)
        assert got == pytest.approx(0.801252, abs=1e-6)
        assert 0.0 <= p <= 1.0

    def test_uniform_blocks_pass(self):
        seq = np.tile([0, 1], 50_000)
        assert randomness.block_frequency_pvalue(seq) == pytest.approx(1.0)

    def test_block_longer_than_sequence(self):
        with pytest.raises(ValueError):
            randomness.block_frequency_pvalue(np.ones(200, np.uint8), m=1024)


def _block_freq_unchecked(b, m):
    # same statistic without the 100-bit minimum, for the short NIST example
    from scipy.special import gammaincc

    nblocks = b.size // m
    pi = b[: nblocks * m].reshape(nblocks, m).mean(axis=1)
    chi2 = 4.0 * m * ((pi - 0.5) ** 2).sum()
    return float(gammaincc(nblocks / 2.0, chi2 / 2.0))


class TestRuns:
    def test_nist_worked_example(self):
        # epsilon = 1001101011 (n=10): pi=0.6, V=7, p-value 0.147232
        got = _runs_unchecked(bits("1001101011"))
        assert got == pytest.approx(0.147232, abs=1e-6)

    def test_all_ones_prerequisite_fails(self):
        assert randomness.runs_pvalue(np.ones(10_000, np.uint8)) == 0.0

    def test_alternating_fails_runs(self):
        # perfectly alternating: far too many runs
        seq = np.tile([0, 1], 5000)
        assert randomness.runs_pvalue(seq) < 1e-10


def _runs_unchecked(b):
    import math

    n = b.size
    pi = b.mean()
    v = 1 + int(np.count_nonzero(b[1:] != b[:-1]))
    num = abs(v - 2.0 * n * pi * (1.0 - pi))
    den = 2.0 * math.sqrt(2.0 * n) * pi * (1.0 - pi)
    return math.erfc(num / den)


class TestUniformity:
    def test_exactly_uniform_bins(self):
        p = np.concatenate([np.full(100, 0.05 + 0.1 * i) for i in range(10)])
        assert randomness.pvalue_uniformity(p) == pytest.approx(1.0)

    def test_all_in_one_bin_fails(self):
        assert randomness.pvalue_uniformity(np.full(1000, 0.5)) < 1e-10

    def test_minimum_sample_count(self):
        with pytest.raises(ValueError):
            randomness.pvalue_uniformity(np.full(54, 0.5))

    def test_p_equal_one_lands_in_last_bin(self):
        p = np.concatenate([np.full(100, 0.05 + 0.1 * i) for i in range(9)] + [np.full(100, 1.0)])
        assert randomness.pvalue_uniformity(p) == pytest.approx(1.0)


class TestProportionBand:
    def test_band_count_1000(self):
        # 0.99 +- 3*sqrt(0.99*0.01/1000)
        lo, hi = randomness.proportion_band(1000)
        assert lo == pytest.approx(0.9805607, abs=1e-6)
        assert hi == pytest.approx(0.9994393, abs=1e-6)

    def test_quoted_band_corresponds_to_2000_samples(self):
        # the often-quoted interval [0.9833245, 0.9966745] matches the same
        # three-sigma formula evaluated at a sample size of 2000, not 1000
        lo, hi = randomness.proportion_band(2000)
        assert lo == pytest.approx(0.9833245, abs=2e-6)
        assert hi == pytest.approx(0.9966745, abs=2e-6)

    def test_band_count_100_upper_clamped(self):
        lo, hi = randomness.proportion_band(100)
        assert lo == pytest.approx(0.96015, abs=1e-5)
        assert hi == 1.0

    def test_degenerate_count(self):
        with pytest.raises(ValueError):
            randomness.proportion_band(0)


class TestBatchAssess:
    def test_input_validation(self):
        with pytest.raises(ValueError):
            randomness.batch_assess(0, 100_000)
        with pytest.raises(ValueError):
            randomness.batch_assess(100, 500)

    def test_small_batch_shapes(self, rng):
        a = randomness.batch_assess(55, 10_000, rng)
        assert set(a.proportions) == set(randomness.TEST_NAMES)
        assert all(0.0 <= p <= 1.0 for p in a.proportions.values())
        assert all(0.0 <= t <= 1.0 for t in a.p_value_t.values())
        import json

        data = json.loads(a.to_json())
        assert data["count"] == 55
