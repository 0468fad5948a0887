import math

import numpy as np
import pytest

from chaosdna.keystream import (
    KeyValidationError,
    SecretKey,
    derive_schedule,
    format_key,
    generate_key,
    parse_key_text,
    quantize_coordinate,
    region_symbol,
)


class TestRegionSymbol:
    def test_first_cell(self):
        assert region_symbol(0.1, 0.1) == 1

    def test_second_column(self):
        assert region_symbol(1.7, 0.1) == 2

    def test_second_row(self):
        assert region_symbol(0.1, 3.3) == 5

    def test_last_cell(self):
        assert region_symbol(6.28, 6.28) == 8

    def test_range_over_grid(self):
        for x in np.linspace(0, 6.2831853, 40):
            for y in np.linspace(0, 6.2831853, 40):
                assert 1 <= region_symbol(float(x), float(y)) <= 8


class TestQuantize:
    def test_zero(self):
        assert quantize_coordinate(0.0) == 0

    def test_pi(self):
        assert quantize_coordinate(math.pi) == 128

    def test_mid_last_bin(self):
        assert quantize_coordinate(2 * math.pi * (255.5 / 256)) == 255

    def test_upper_clamp(self):
        assert quantize_coordinate(np.nextafter(2 * math.pi, 0)) == 255


class TestKeyValidation:
    def test_valid(self):
        SecretKey(1.0, 2.0, 18.5, 19.0, 20.0, 21.0, 22.0, 1)

    @pytest.mark.parametrize(
        "changes,field",
        [
            (dict(x0=0.0), "X0"),
            (dict(x0=7.0), "X0"),
            (dict(y0=-1.0), "Y0"),
            (dict(k=18.0), "K"),
            (dict(k3=17.5), "K3"),
            (dict(n=0), "N"),
            (dict(n=1000), "N"),
        ],
    )
    def test_out_of_range_names_field(self, changes, field):
        fields = dict(x0=1.0, y0=2.0, k=20.0, k1=20.0, k2=20.0, k3=20.0, k4=20.0, n=10)
        fields.update(changes)
        with pytest.raises(KeyValidationError, match=field):
            SecretKey(**fields)


class TestDeriveSchedule:
    def test_shapes_1x1(self, ref_key):
        s = derive_schedule(ref_key, 1, 1)
        for seq in (s.dotp1, s.dotp2, s.rsq1, s.rsq2, s.rsq3, s.rsq4):
            assert len(seq) == 1
        for seq in (s.rsq1, s.rsq2, s.rsq3, s.rsq4):
            assert 1 <= seq[0] <= 8

    def test_frozen_reference_vector(self, ref_key):
        s = derive_schedule(ref_key, 2, 2)
        assert s.dotp1.tolist() == [255, 195, 192, 174]
        assert s.dotp2.tolist() == [9, 205, 141, 60]
        assert s.rsq1.tolist() == [4, 6, 6, 2]
        assert s.rsq2.tolist() == [1, 3, 1, 7]
        assert s.rsq3.tolist() == [8, 4, 4, 6]
        assert s.rsq4.tolist() == [3, 6, 5, 2]

    def test_segment_independence_of_k4(self, ref_key):
        a = derive_schedule(ref_key, 8, 8)
        b = derive_schedule(ref_key.replace(k4=25.0), 8, 8)
        assert np.array_equal(a.dotp1, b.dotp1)
        assert np.array_equal(a.dotp2, b.dotp2)
        assert np.array_equal(a.rsq1, b.rsq1)
        assert np.array_equal(a.rsq2, b.rsq2)
        assert np.array_equal(a.rsq3, b.rsq3)
        assert not np.array_equal(a.rsq4, b.rsq4)

    def test_segment_independence_of_k2(self, ref_key):
        a = derive_schedule(ref_key, 8, 8)
        b = derive_schedule(ref_key.replace(k2=25.0), 8, 8)
        assert np.array_equal(a.dotp1, b.dotp1)
        assert np.array_equal(a.rsq1, b.rsq1)
        assert not np.array_equal(a.rsq2, b.rsq2)

    @pytest.mark.parametrize(
        "changes",
        [dict(x0=1.0 + 1e-14), dict(y0=2.0 + 1e-14), dict(k=20.0 + 1e-14), dict(n=11)],
    )
    def test_global_sensitivity(self, ref_key, changes):
        # a perturbation ahead of all segments should scramble everything:
        # >= 95% of positions differ in at least one of the six sequences
        h = w = 200
        a = derive_schedule(ref_key, h, w)
        b = derive_schedule(ref_key.replace(**changes), h, w)
        stacked_a = np.stack([a.dotp1, a.dotp2, a.rsq1, a.rsq2, a.rsq3, a.rsq4])
        stacked_b = np.stack([b.dotp1, b.dotp2, b.rsq1, b.rsq2, b.rsq3, b.rsq4])
        frac = np.mean((stacked_a != stacked_b).any(axis=0))
        assert frac >= 0.95

    def test_symbol_uniformity(self, ref_key):
        s = derive_schedule(ref_key, 200, 200)
        symbols = np.concatenate([s.rsq1, s.rsq2, s.rsq3, s.rsq4])
        assert symbols.size >= 1e5
        freqs = np.bincount(symbols, minlength=9)[1:] / symbols.size
        assert np.all(np.abs(freqs - 0.125) < 0.01)

    def test_bad_dimensions(self, ref_key):
        with pytest.raises(ValueError):
            derive_schedule(ref_key, 0, 4)


class TestKeyFile:
    def test_round_trip_bit_for_bit(self, rng):
        for _ in range(20):
            key = generate_key(rng)
            assert parse_key_text(format_key(key)) == key

    def test_generated_keys_valid(self, rng):
        for _ in range(50):
            key = generate_key(rng)
            assert 0 < key.x0 < 2 * math.pi
            assert key.k > 18.0
            assert 0 < key.n < 1000

    def test_low_k_rejected(self):
        text = "X0=1\nY0=2\nK=17.5\nK1=20\nK2=20\nK3=20\nK4=20\nN=5\n"
        with pytest.raises(KeyValidationError, match="K must exceed 18.0"):
            parse_key_text(text)

    def test_n_upper_bound_strict(self):
        text = "X0=1\nY0=2\nK=20\nK1=20\nK2=20\nK3=20\nK4=20\nN=1000\n"
        with pytest.raises(KeyValidationError, match="N"):
            parse_key_text(text)

    def test_duplicate_field_rejected(self):
        text = "X0=1\nX0=1\nY0=2\nK=20\nK1=20\nK2=20\nK3=20\nK4=20\nN=5\n"
        with pytest.raises(KeyValidationError, match="duplicate"):
            parse_key_text(text)

    def test_unknown_field_rejected(self):
        text = "X0=1\nY0=2\nK=20\nK1=20\nK2=20\nK3=20\nK4=20\nN=5\nZ=1\n"
        with pytest.raises(KeyValidationError, match="unknown"):
            parse_key_text(text)

    def test_missing_field_rejected(self):
        text = "X0=1\nY0=2\nK=20\nK1=20\nK2=20\nK3=20\nN=5\n"
        with pytest.raises(KeyValidationError, match="missing.*K4"):
            parse_key_text(text)
