import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nmlcausal.nml import (
    LOG_STAR_CONSTANT,
    categorical_nll,
    check_counts,
    log_multinomial_complexity,
    log_star,
    sc_categorical,
)
from oracles import brute_complexity


@pytest.mark.parametrize("K", range(1, 5))
@pytest.mark.parametrize("n", range(1, 9))
def test_complexity_matches_enumeration(K, n):
    expected = math.log2(brute_complexity(K, n))
    got = log_multinomial_complexity(K, n)
    assert got == pytest.approx(expected, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("K,n,value", [(2, 2, 2.5), (3, 2, 4.5), (4, 2, 7.0)])
def test_complexity_spot_values(K, n, value):
    assert abs(log_multinomial_complexity(K, n) - math.log2(value)) < 1e-12


def test_single_category_is_free():
    assert log_multinomial_complexity(1, 5) == 0.0
    assert log_multinomial_complexity(1, 10**6) == 0.0


def test_large_inputs_stay_finite():
    v = log_multinomial_complexity(1024, 10**5)
    assert math.isfinite(v) and v > log_multinomial_complexity(512, 10**5)


@pytest.mark.parametrize("bad", [0, -1])
def test_complexity_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        log_multinomial_complexity(bad, 3)
    with pytest.raises(ValueError):
        log_multinomial_complexity(2, bad)


def test_complexity_rejects_non_integers():
    with pytest.raises(TypeError):
        log_multinomial_complexity(2.5, 3)
    with pytest.raises(TypeError):
        log_multinomial_complexity(True, 3)


@given(st.integers(1, 40), st.integers(1, 300))
def test_complexity_monotone(K, n):
    assert log_multinomial_complexity(K + 1, n) >= log_multinomial_complexity(K, n) - 1e-12
    if K >= 2:
        assert log_multinomial_complexity(K, n + 1) >= log_multinomial_complexity(K, n) - 1e-12


def test_log_star_values():
    base = math.log2(LOG_STAR_CONSTANT)
    assert log_star(1) == pytest.approx(base)
    assert log_star(1) == pytest.approx(1.5186, abs=1e-4)
    assert log_star(2) == pytest.approx(base + 1)
    assert log_star(16) == pytest.approx(base + 4 + 2 + 1)
    assert log_star(16) == pytest.approx(8.5186, abs=1e-4)


@given(st.integers(2, 10**6))
def test_log_star_strictly_increasing(m):
    assert log_star(m + 1) > log_star(m)


def test_log_star_rejects_zero():
    with pytest.raises(ValueError):
        log_star(0)


@pytest.mark.parametrize(
    "counts,bits",
    [((2, 0), 0.0), ((1, 1), 2.0), ((3, 1), -(3 * math.log2(0.75) + math.log2(0.25))), ((5,), 0.0)],
)
def test_categorical_nll(counts, bits):
    assert categorical_nll(counts) == pytest.approx(bits, abs=1e-12)


def test_categorical_nll_example_value():
    assert categorical_nll((3, 1)) == pytest.approx(3.2451, abs=1e-4)


def test_sc_categorical_examples():
    assert sc_categorical((1, 1)) == pytest.approx(2.0 + math.log2(2.5))
    assert sc_categorical((7,)) == 0.0
    expected = categorical_nll((2, 1, 1)) + math.log2(brute_complexity(3, 4))
    # 2 log2 2 + 2 log2 4, evaluated by hand
    assert categorical_nll((2, 1, 1)) == pytest.approx(6.0, abs=1e-12)
    assert sc_categorical((2, 1, 1)) == pytest.approx(expected, rel=1e-12)


@given(st.lists(st.integers(0, 50), min_size=1, max_size=8).filter(lambda c: sum(c) > 0), st.randoms())
def test_nll_permutation_invariant(counts, rnd):
    shuffled = list(counts)
    rnd.shuffle(shuffled)
    assert categorical_nll(shuffled) == pytest.approx(categorical_nll(counts), abs=1e-9)


@pytest.mark.parametrize("bad", [[], [0, 0], [-1, 2], [1.5, 2], [[1, 2]]])
def test_check_counts_rejects(bad):
    with pytest.raises(ValueError):
        check_counts(bad)


def test_check_counts_accepts_integral_floats():
    assert check_counts(np.array([1.0, 2.0])).dtype == np.int64
