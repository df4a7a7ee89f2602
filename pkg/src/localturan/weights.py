"""Generalized binomial coefficients and the localized weight functions.

All weights that are rational are computed with ``fractions.Fraction`` end to
end, so equality against a bound is an exact comparison, never a tolerance
check.  The only genuinely irrational weights are the Frohmader weights at
odd clique size and the hypergraph weights; those use floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def gen_binom(x, k: int):
    """Generalized binomial coefficient: x(x-1)...(x-k+1)/k! for x >= k-1,
    and exactly 0 for x < k-1.

    Exact (Fraction) for int/Fraction input, float for float input.  The
    falling-factorial product is evaluated directly; no gamma functions.
    """
    if k < 0:
        raise ValueError("lower index must be non-negative")
    if isinstance(x, float):
        if x < k - 1:
            return 0.0
        prod = 1.0
        for i in range(k):
            prod *= x - i
        return prod / math.factorial(k)
    x = Fraction(x)
    if x < k - 1:
        return Fraction(0)
    prod = Fraction(1)
    for i in range(k):
        prod *= x - i
    return prod / math.factorial(k)


def clique_weight(alpha_val: int, t: int) -> Fraction:
    """alpha^t / binom(alpha, t); strictly decreasing in alpha."""
    if t < 2:
        raise ValueError("clique size must be at least 2")
    if alpha_val < t:
        raise ValueError(f"alpha={alpha_val} below clique size t={t}")
    return Fraction(alpha_val**t, math.comb(alpha_val, t))


def path_order_weight(beta_val: int, t: int) -> Fraction:
    """1 / binom(beta, t-1), for the fixed-order path bound."""
    if t < 2:
        raise ValueError("clique size must be at least 2")
    if beta_val < t - 1:
        raise ValueError(f"beta={beta_val} below t-1={t - 1}")
    return Fraction(1, math.comb(beta_val, t - 1))


def path_size_weight(beta_val: int, t: int) -> Fraction:
    """1 / binom(beta-1, t-2), for the fixed-size path bound."""
    if t < 3:
        raise ValueError("fixed-size path weights need clique size at least 3")
    if beta_val < t - 1:
        raise ValueError(f"beta={beta_val} below t-1={t - 1}")
    return Fraction(1, math.comb(beta_val - 1, t - 2))


def star_weight(theta_val: int, t: int, u: int) -> Fraction:
    """1 / binom(theta-u+1, t-u), for the star bound with u selected
    dominating vertices.

    u may equal t (the all-dominating degenerate case, where the weight is
    constantly 1).
    """
    if u < 1:
        raise ValueError("u must be at least 1")
    if t < u:
        raise ValueError(f"u={u} exceeds pattern order t={t}")
    if theta_val < t - 1:
        raise ValueError(f"theta={theta_val} below t-1={t - 1}")
    return Fraction(1, math.comb(theta_val - u + 1, t - u))


def frohmader_weight(alpha_val: int, t: int):
    """binom(alpha,2)^{t/2} / binom(alpha,t): exact Fraction for even t,
    float for odd t (the value is irrational)."""
    if t < 2:
        raise ValueError("clique size must be at least 2")
    if alpha_val < t:
        raise ValueError(f"alpha={alpha_val} below clique size t={t}")
    pairs = math.comb(alpha_val, 2)
    denom = math.comb(alpha_val, t)
    if t % 2 == 0:
        return Fraction(pairs ** (t // 2), denom)
    return pairs ** (t / 2) / denom


def frohmader_weight_squared(alpha_val: int, t: int) -> Fraction:
    """Exact square of the Frohmader weight, used for exact comparisons of
    single-alpha sums at odd t."""
    if alpha_val < t:
        raise ValueError(f"alpha={alpha_val} below clique size t={t}")
    pairs = math.comb(alpha_val, 2)
    denom = math.comb(alpha_val, t)
    return Fraction(pairs**t, denom**2)


def cycle_order_weight(gamma_val: int, t: int) -> Fraction:
    """(gamma-1) / binom(gamma, t).

    A clique contained in some cycle always has gamma >= max(3, t); a value
    below t signals the no-containing-cycle case, which has no defined
    weight (the search modules handle the convention).
    """
    if t < 2:
        raise ValueError("clique size must be at least 2")
    if gamma_val < t:
        raise ValueError(f"gamma={gamma_val} below clique size t={t}: "
                         "no cycle contains the clique")
    return Fraction(gamma_val - 1, math.comb(gamma_val, t))


def cycle_size_weight(gamma_val: int, t: int) -> Fraction:
    """binom(gamma,2) / binom(gamma, t); same domain as cycle_order_weight."""
    if t < 2:
        raise ValueError("clique size must be at least 2")
    if gamma_val < t:
        raise ValueError(f"gamma={gamma_val} below clique size t={t}: "
                         "no cycle contains the clique")
    return Fraction(math.comb(gamma_val, 2), math.comb(gamma_val, t))
