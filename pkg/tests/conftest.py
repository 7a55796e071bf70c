"""Shared random-draw helpers and frozen fixtures for exact test data."""

from fractions import Fraction as F

from sphquad.params import CaseTag, NormalizedParams

# (angles, band modulus, certified lambda in the common chart) with lambda
# exactly rational, so the developing-map certificates can run in the exact
# model end to end.  Frozen from tests/oracles/developing_system.py
# (mine_exact_instances): kappa=0 rows have linear certificates with root 0;
# the rest are quadratic certificates with square discriminant.
EXACT_WRONSKIAN_INSTANCES = [
    ((F(1, 2), 2, 2, F(5, 2)), F(1, 3), F(0)),
    ((F(1, 2), 2, 2, F(5, 2)), F(-1, 2), F(0)),
    ((F(4, 3), 2, 3, F(13, 3)), F(2, 5), F(0)),
    ((F(1, 2), 3, 3, F(9, 2)), F(-3), F(0)),
    ((F(3, 4), 2, 2, F(11, 4)), F(1, 7), F(0)),
    ((F(5, 4), 2, 3, F(17, 4)), F(12, 7), F(0)),
    ((F(1, 3), 3, 3, F(13, 3)), F(5), F(0)),
    ((F(1, 2), 2, 2, F(1, 2)), F(1, 6), F(-2, 3)),
    ((F(1, 2), 2, 2, F(1, 2)), F(1, 6), F(1, 4)),
    ((F(1, 2), 2, 2, F(1, 2)), F(2, 5), F(-4, 5)),
    ((F(1, 2), 2, 2, F(1, 2)), F(2, 5), F(1, 2)),
    ((F(1, 2), 2, 2, F(1, 2)), F(5, 2), F(-5, 4)),
    ((F(1, 2), 2, 2, F(1, 2)), F(5, 2), F(2)),
    ((F(1, 2), 3, 3, F(3, 2)), F(1, 3), F(-4, 3)),
    ((F(1, 2), 3, 3, F(3, 2)), F(1, 3), F(1)),
    ((F(1, 2), 3, 3, F(3, 2)), F(1, 7), F(-1)),
    ((F(1, 2), 3, 3, F(3, 2)), F(1, 7), F(4, 7)),
    ((F(1, 3), 2, 3, F(4, 3)), F(-1, 4), F(-3, 4)),
    ((F(1, 3), 2, 3, F(4, 3)), F(-1, 4), F(-2, 3)),
    ((F(1, 3), 2, 3, F(4, 3)), F(-1, 5), F(-1)),
    ((F(1, 3), 2, 3, F(4, 3)), F(-1, 5), F(-2, 5)),
    ((F(1, 2), 2, 4, F(5, 2)), F(-2, 3), F(-3, 2)),
    ((F(1, 2), 2, 4, F(5, 2)), F(-2, 3), F(-4, 3)),
    ((F(1, 2), 2, 4, F(5, 2)), F(-1, 2), F(-2)),
    ((F(1, 2), 2, 4, F(5, 2)), F(-1, 2), F(-3, 4)),
    ((F(1, 2), 2, 4, F(5, 2)), F(-3, 5), F(-9, 5)),
    ((F(1, 2), 2, 4, F(5, 2)), F(-3, 5), F(-1)),
    ((F(65, 32), 2, 6, F(65, 32)), F(9), F(-4)),
    ((F(65, 32), 2, 6, F(65, 32)), F(9), F(81, 4)),
]


def draw_params(rng, mmax=8, allow_case_b=True) -> NormalizedParams:
    """A random valid exact parameter tuple, mixing both parity cases."""
    while True:
        m = rng.randint(1, mmax)
        n = rng.randint(m, mmax)
        kappa = rng.randint(0, (m + n) // 2)
        if allow_case_b and rng.random() < 0.3:
            smax = m + n - 2 * kappa
            if smax < 1:
                continue
            den = rng.choice([2, 3, 5, 7, 9])
            j = rng.randint(1, max(1, (den * smax) // 2))
            if j % den == 0:
                j = j - 1 if j > 1 else j + 1
            if j % den == 0 or 2 * j > den * smax:
                continue
            sigma = -F(j, den) - 1
            case = CaseTag.B
        else:
            sigma = F(rng.randint(1, 60), rng.choice([2, 3, 5, 7, 8, 9, 16, 32]))
            if sigma.denominator == 1:
                sigma += F(1, 3)
            case = CaseTag.A
        return NormalizedParams(m=m, n=n, kappa=kappa, sigma=sigma, case=case)


def draw_modulus(rng, positive=None) -> F:
    """A random rational band modulus avoiding the degenerate values 0, 1."""
    while True:
        t = F(rng.randint(-30, 30), rng.randint(1, 9))
        if t in (0, 1):
            continue
        if positive is True and t <= 0:
            continue
        if positive is False and t >= 0:
            continue
        return t
