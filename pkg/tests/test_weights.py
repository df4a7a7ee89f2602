from __future__ import annotations

import math
from fractions import Fraction

import pytest

from localturan.weights import (
    clique_weight,
    cycle_order_weight,
    cycle_size_weight,
    frohmader_weight,
    frohmader_weight_squared,
    gen_binom,
    path_order_weight,
    path_size_weight,
    star_weight,
)


def test_gen_binom_examples():
    assert gen_binom(Fraction(5, 2), 2) == Fraction(15, 8)  # 1.875
    assert gen_binom(1.5, 3) == 0.0
    assert gen_binom(7, 3) == 35
    assert gen_binom(Fraction(3, 2), 3) == 0
    assert gen_binom(4, 0) == 1
    with pytest.raises(ValueError):
        gen_binom(2, -1)


def test_gen_binom_matches_integer_binomials():
    for n in range(12):
        for k in range(12):
            assert gen_binom(n, k) == math.comb(n, k)


def test_gen_binom_is_increasing_on_domain():
    for k in range(1, 7):
        prev = None
        x = Fraction(k - 1)
        while x <= k + 8:
            val = gen_binom(x, k)
            if prev is not None:
                assert val > prev
            prev = val
            x += Fraction(1, 4)


def test_doubling_inequality_grid():
    # 2^n binom(x, n) <= binom(2x, n), strict when 2x + 1 > n >= 2
    xs = [Fraction(i, 2) for i in range(21)]  # 0, 0.5, ..., 10
    for x in xs:
        for n in range(9):
            lhs = 2**n * gen_binom(x, n)
            rhs = gen_binom(2 * x, n)
            assert lhs <= rhs, (x, n)
            if 2 * x + 1 > n >= 2:
                assert lhs < rhs, (x, n)


def test_clique_weight_examples():
    assert clique_weight(2, 2) == 4
    assert clique_weight(4, 3) == 16
    assert clique_weight(3, 2) == 3
    with pytest.raises(ValueError):
        clique_weight(2, 3)


def test_clique_weight_reduction_at_t2():
    # alpha^2 / binom(alpha,2) == 2*alpha/(alpha-1)
    for alpha in range(2, 30):
        assert clique_weight(alpha, 2) == Fraction(2 * alpha, alpha - 1)


def test_path_weights_examples():
    assert path_order_weight(4, 2) == Fraction(1, 4)
    assert path_order_weight(2, 3) == 1
    assert path_order_weight(4, 3) == Fraction(1, 6)
    assert path_size_weight(2, 3) == 1
    assert path_size_weight(4, 3) == Fraction(1, 3)
    assert path_size_weight(5, 4) == Fraction(1, 6)
    with pytest.raises(ValueError):
        path_size_weight(4, 2)
    with pytest.raises(ValueError):
        path_order_weight(1, 3)


def test_star_weight_examples():
    assert star_weight(3, 2, 1) == Fraction(1, 3)
    assert star_weight(3, 3, 1) == Fraction(1, 3)  # theta=r-1 with r=4, t=3
    assert star_weight(4, 3, 2) == Fraction(1, 3)  # r=5, t=3, u=2
    assert star_weight(1, 2, 2) == 1  # degenerate u = t
    with pytest.raises(ValueError):
        star_weight(1, 3, 1)
    with pytest.raises(ValueError):
        star_weight(3, 2, 3)


def test_minimum_size_values():
    for t in range(2, 7):
        assert clique_weight(t, t) == t**t
        assert path_order_weight(t - 1, t) == 1
        for u in range(1, t + 1):
            assert star_weight(t - 1, t, u) == 1


def test_frohmader_weight_examples():
    assert frohmader_weight(3, 2) == 1
    assert abs(frohmader_weight(3, 3) - 3**1.5) < 1e-12
    assert frohmader_weight(4, 4) == 36
    assert isinstance(frohmader_weight(4, 4), Fraction)
    assert isinstance(frohmader_weight(4, 3), float)
    assert frohmader_weight_squared(3, 3) == 27
    with pytest.raises(ValueError):
        frohmader_weight(2, 3)


def test_cycle_weight_examples():
    assert cycle_order_weight(3, 2) == Fraction(2, 3)
    assert cycle_order_weight(4, 3) == Fraction(3, 4)
    assert cycle_order_weight(5, 2) == Fraction(2, 5)
    assert cycle_size_weight(3, 3) == 3
    assert cycle_size_weight(4, 3) == Fraction(3, 2)
    assert cycle_size_weight(4, 2) == 1
    with pytest.raises(ValueError):
        cycle_order_weight(0, 2)
    with pytest.raises(ValueError):
        cycle_size_weight(2, 3)


def test_weights_strictly_decreasing_in_size():
    for t in range(2, 9):
        for size in range(t, 50):
            assert clique_weight(size + 1, t) < clique_weight(size, t)
        for size in range(max(t - 1, 1), 50):
            assert path_order_weight(size + 1, t) < path_order_weight(size, t)
            for u in range(1, min(t, 2) + 1):
                if t >= u:
                    assert star_weight(size + 1, t, u) <= star_weight(size, t, u)
                    if t > u:
                        assert star_weight(size + 1, t, u) < star_weight(size, t, u)
        if t >= 3:
            for size in range(t - 1, 50):
                assert path_size_weight(size + 1, t) < path_size_weight(size, t)
        for size in range(max(t, 3), 50):
            assert cycle_order_weight(size + 1, t) < cycle_order_weight(size, t)
            assert cycle_size_weight(size + 1, t) <= cycle_size_weight(size, t)
            if t >= 3:
                assert cycle_size_weight(size + 1, t) < cycle_size_weight(size, t)
        for size in range(t, 50):
            assert frohmader_weight(size + 1, t) <= frohmader_weight(size, t)
            if t >= 3:
                assert frohmader_weight(size + 1, t) < frohmader_weight(size, t)
