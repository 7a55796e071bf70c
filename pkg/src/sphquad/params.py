"""Angle-data algebra for spherical quadrilaterals with two integer angles.

A quadrilateral metric of curvature +1 on the sphere has four conic corners
with angle parameters ``alpha0, alpha1, alpha2, alpha3`` (angle / pi).  This
package studies the case where ``alpha1`` and ``alpha2`` are integers while
``alpha0`` and ``alpha3`` are not.  This module holds:

* the existence test for such metrics (a parity case split with an
  integrality condition and a linear inequality on the angles);
* the reduction of an admissible angle set to normalized integer data
  ``(m, n, kappa)`` plus one non-integer parameter ``sigma``, and the inverse
  recovery of the angles;
* closed-form count bounds: the upper bound ``min(alpha1, alpha2, kappa+1)``
  for all metrics, and the lower bound for metrics symmetric under an
  anti-conformal involution when the singular points sit on a circle in
  separating position;
* small self-contained utilities used by sanity tests (spherical-triangle
  existence, and degree feasibility when every corner is an integer).

Conventions
-----------
``m = min(alpha1, alpha2) - 1`` and ``n = max(alpha1, alpha2) - 1``, so
``0 <= m <= n``.  In case A (see :class:`CaseTag`),

    sigma = min(alpha0, alpha3) - 1,
    2*kappa = alpha1 + alpha2 - 2 - |alpha0 - alpha3|,

and in case B,

    sigma = -min(alpha0, alpha3) - 1,
    2*kappa = alpha1 + alpha2 - 2 - (alpha0 + alpha3).

Exact inputs (``fractions.Fraction``) get exact arithmetic throughout;
floats fall back to a 1e-9 integrality tolerance.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, float, Fraction]

#: integrality tolerance for double-precision angle inputs
INT_TOL = 1e-9


class InvalidAngles(ValueError):
    """Angle data violates the structural contract of this module."""


class NotRealizable(ValueError):
    """No metric (or count) exists for the given data."""


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction))


def is_integral(x: Scalar) -> bool:
    """Exact integrality for Fraction/int; 1e-9 tolerance for floats."""
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    return abs(x - round(x)) <= INT_TOL


def floor_int(x: Scalar) -> int:
    """Integer part [x] (floor), exact for rationals."""
    if isinstance(x, Fraction):
        return x.numerator // x.denominator
    return math.floor(x)


def as_int(x: Scalar) -> int:
    """Round a provably integral scalar to int, guarding the tolerance."""
    if not is_integral(x):
        raise InvalidAngles(f"expected an integer value, got {x!r}")
    if isinstance(x, Fraction):
        return int(x)
    return int(round(x))


class CaseTag(enum.Enum):
    """Parity case of the existence theorem.

    Case A: ``alpha1+alpha2+[alpha0]+[alpha3]`` even and ``alpha0-alpha3``
    integer.  Case B: that sum odd and ``alpha0+alpha3`` integer.
    """

    A = "A"
    B = "B"


@dataclass(frozen=True)
class AngleSet:
    """The four angle parameters; ``alpha1, alpha2`` integer, the others not.

    The existence theory needs ``alpha1, alpha2 >= 2``; order-1 values are
    representable (so parameter recovery can round-trip degenerate data) but
    are rejected by :func:`existence_check` and :func:`normalize`.
    """

    alpha0: Scalar
    alpha1: int
    alpha2: int
    alpha3: Scalar

    def __post_init__(self):
        if not (is_integral(self.alpha1) and is_integral(self.alpha2)):
            raise InvalidAngles("alpha1 and alpha2 must be integers")
        object.__setattr__(self, "alpha1", as_int(self.alpha1))
        object.__setattr__(self, "alpha2", as_int(self.alpha2))
        if self.alpha1 < 1 or self.alpha2 < 1:
            raise InvalidAngles("alpha1 and alpha2 must be >= 1")
        for name in ("alpha0", "alpha3"):
            v = getattr(self, name)
            if not v > 0:
                raise InvalidAngles(f"{name} must be positive")
            if is_integral(v):
                raise InvalidAngles(
                    f"{name} must be non-integer (the all-integer theory is out of scope)"
                )

    @property
    def exact(self) -> bool:
        return is_exact(self.alpha0) and is_exact(self.alpha3)

    def as_tuple(self) -> tuple[Scalar, int, int, Scalar]:
        return (self.alpha0, self.alpha1, self.alpha2, self.alpha3)


@dataclass(frozen=True)
class ExistenceResult:
    exists: bool
    case: CaseTag | None


@dataclass(frozen=True)
class NormalizedParams:
    """Reduced parameters (m, n, kappa, sigma) with their case tag.

    Invariants: ``0 <= m <= n``, ``0 <= 2*kappa <= m+n``,
    ``sigma + 1 >= kappa - (m+n)/2``, sigma non-integer, and
    ``[sigma] >= -1`` exactly in case A.
    """

    m: int
    n: int
    kappa: int
    sigma: Scalar
    case: CaseTag

    def __post_init__(self):
        if not (0 <= self.m <= self.n):
            raise InvalidAngles("need 0 <= m <= n")
        if not (0 <= 2 * self.kappa <= self.m + self.n):
            raise InvalidAngles("need 0 <= 2*kappa <= m+n")
        if is_integral(self.sigma):
            raise InvalidAngles("sigma must be non-integer")
        slack = 0 if is_exact(self.sigma) else INT_TOL
        if not (self.sigma + 1 >= self.kappa - Fraction(self.m + self.n, 2) - slack):
            raise InvalidAngles("need sigma+1 >= kappa-(m+n)/2")
        fs = floor_int(self.sigma)
        if self.case is CaseTag.A and fs < -1:
            raise InvalidAngles("case A needs [sigma] >= -1")
        if self.case is CaseTag.B and fs >= -1:
            raise InvalidAngles("case B needs [sigma] < -1")

    @property
    def exact(self) -> bool:
        return is_exact(self.sigma)


@dataclass(frozen=True)
class ExponentData:
    """Exponents at infinity of the four-singularity equation, and their product A."""

    alpha_prime: Scalar
    alpha_dprime: Scalar
    A: Scalar


def existence_check(angles: AngleSet) -> ExistenceResult:
    """Decide whether a metric with these angles exists, and its parity case.

    Case A (parity even) additionally needs ``alpha0 - alpha3`` integral and
    ``|alpha0 - alpha3| + 2 <= alpha1 + alpha2``; case B (parity odd) needs
    ``alpha0 + alpha3`` integral and ``alpha0 + alpha3 + 2 <= alpha1 +
    alpha2``.  Boundary equality counts as existent.
    """
    a0, a1, a2, a3 = angles.as_tuple()
    if a1 < 2 or a2 < 2:
        raise InvalidAngles("existence theory requires alpha1, alpha2 >= 2")
    parity = (a1 + a2 + floor_int(a0) + floor_int(a3)) % 2
    slack = 0 if angles.exact else INT_TOL
    if parity == 0:
        diff = a0 - a3
        if not is_integral(diff):
            return ExistenceResult(False, None)
        if abs(diff) + 2 <= a1 + a2 + slack:
            return ExistenceResult(True, CaseTag.A)
        return ExistenceResult(False, None)
    total = a0 + a3
    if not is_integral(total):
        return ExistenceResult(False, None)
    if total + 2 <= a1 + a2 + slack:
        return ExistenceResult(True, CaseTag.B)
    return ExistenceResult(False, None)


def normalize(angles: AngleSet) -> NormalizedParams:
    """Reduce an admissible angle set to ``NormalizedParams``.

    Raises :class:`NotRealizable` when :func:`existence_check` fails.
    """
    res = existence_check(angles)
    if not res.exists:
        raise NotRealizable(f"no metric exists for angles {angles.as_tuple()}")
    a0, a1, a2, a3 = angles.as_tuple()
    m = min(a1, a2) - 1
    n = max(a1, a2) - 1
    if res.case is CaseTag.A:
        sigma = min(a0, a3) - 1
        two_kappa = a1 + a2 - 2 - abs(a0 - a3)
    else:
        sigma = -min(a0, a3) - 1
        two_kappa = a1 + a2 - 2 - (a0 + a3)
    if not is_integral(two_kappa) or as_int(two_kappa) % 2 != 0:
        raise NotRealizable(f"kappa is not a nonnegative integer for {angles.as_tuple()}")
    kappa = as_int(two_kappa) // 2
    return NormalizedParams(m=m, n=n, kappa=kappa, sigma=sigma, case=res.case)


def denormalize(params: NormalizedParams) -> AngleSet:
    """Recover angles: ``(alpha0, alpha3) = (|sigma+1|, |m+n+sigma+1-2*kappa|)``,
    ``(alpha1, alpha2) = (m+1, n+1)``; inverse of :func:`normalize` up to
    swapping within each pair."""
    s1 = params.sigma + 1
    a0 = s1 if s1 > 0 else -s1
    w = params.m + params.n + params.sigma + 1 - 2 * params.kappa
    a3 = w if w > 0 else -w
    return AngleSet(alpha0=a0, alpha1=params.m + 1, alpha2=params.n + 1, alpha3=a3)


def exponent_data(angles: AngleSet) -> ExponentData:
    """Exponents at infinity: ``alpha' = (2 + a3 - a0 - a1 - a2)/2`` and
    ``alpha'' = (2 - a3 - a0 - a1 - a2)/2``; their difference is ``alpha3``,
    ``alpha''`` is negative, and ``A = alpha'*alpha'' = alpha''*(alpha3+alpha'')``."""
    a0, a1, a2, a3 = angles.as_tuple()
    half = Fraction(1, 2) if angles.exact else 0.5
    ap = (2 + a3 - a0 - a1 - a2) * half
    app = (2 - a3 - a0 - a1 - a2) * half
    return ExponentData(alpha_prime=ap, alpha_dprime=app, A=ap * app)


def upper_bound(params: NormalizedParams) -> int:
    """Maximal number of metric classes: ``min(alpha1, alpha2, kappa+1)``."""
    return min(params.m + 1, params.kappa + 1)


def chain_defect(angles: AngleSet) -> Scalar:
    """The defect ``delta = max(alpha1+alpha2-[alpha0]-[alpha3], 0) / 2``."""
    a0, a1, a2, a3 = angles.as_tuple()
    raw = a1 + a2 - floor_int(a0) - floor_int(a3)
    if raw < 0:
        return Fraction(0)
    return Fraction(raw, 2)


def real_lower_bound(angles: AngleSet) -> int:
    """Lower bound for symmetric metrics in the separating configuration:
    ``min(alpha1,alpha2,kappa+1) - 2*[min(alpha1,alpha2,delta)/2]``."""
    params = normalize(angles)
    delta = chain_defect(angles)
    cut = min(Fraction(angles.alpha1), Fraction(angles.alpha2), delta)
    lower = upper_bound(params) - 2 * floor_int(cut / 2)
    return max(lower, 0)


def triangle_exists(a0: float, a1: float, a2: float) -> bool:
    """Existence of a spherical triangle with non-integer angle parameters:

        cos^2(pi*a0) + cos^2(pi*a1) + cos^2(pi*a2)
            + 2*cos(pi*a0)*cos(pi*a1)*cos(pi*a2) < 1   (strict).
    """
    c0 = math.cos(math.pi * float(a0))
    c1 = math.cos(math.pi * float(a1))
    c2 = math.cos(math.pi * float(a2))
    return c0 * c0 + c1 * c1 + c2 * c2 + 2 * c0 * c1 * c2 < 1


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    degree: int | None


def rational_feasible(orders: list[int]) -> FeasibilityResult:
    """Degree feasibility when every corner is an integer.

    A rational map realizing integer corner orders ``alpha_j`` needs
    ``2 + sum(alpha_j - 1) = 2d`` and ``alpha_j <= d`` for all j.
    """
    total = 2 + sum(a - 1 for a in orders)
    if total % 2 != 0 or total <= 0:
        return FeasibilityResult(False, None)
    d = total // 2
    if any(a > d for a in orders):
        return FeasibilityResult(False, d)
    return FeasibilityResult(True, d)


# ---------------------------------------------------------------------------
# Corner orders for the combinatorial (net) counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CornerOrders:
    """Integer corner orders ``A0..A3`` with the derived half-integers.

    ``delta = (A1+A3-A0-A2)/2``, ``sigma_net = (A2+A3-A0-A1)/2`` and
    ``rho = (A2+A3-|A1-A0|)/2``; all three are integers exactly when the two
    non-integer corners map to distinct vertices of the partition.
    """

    A0: int
    A1: int
    A2: int
    A3: int

    def __post_init__(self):
        for name in ("A0", "A1", "A2", "A3"):
            v = getattr(self, name)
            if not (isinstance(v, int) and v >= 0):
                raise InvalidAngles(f"{name} must be a nonnegative integer")

    @property
    def delta(self) -> Fraction:
        return Fraction(self.A1 + self.A3 - self.A0 - self.A2, 2)

    @property
    def sigma_net(self) -> Fraction:
        return Fraction(self.A2 + self.A3 - self.A0 - self.A1, 2)

    @property
    def rho(self) -> Fraction:
        return Fraction(self.A2 + self.A3 - abs(self.A1 - self.A0), 2)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.A0, self.A1, self.A2, self.A3)


def adjacent_orders(angles: AngleSet) -> CornerOrders:
    """Order map used for quadrilaterals with adjacent non-integer corners:
    ``(A0, A1, A2, A3) = ([alpha3], [alpha0], alpha1, alpha2)``."""
    return CornerOrders(
        A0=floor_int(angles.alpha3),
        A1=floor_int(angles.alpha0),
        A2=angles.alpha1,
        A3=angles.alpha2,
    )


def chain_orders(angles: AngleSet) -> CornerOrders:
    """Order map used for chain counting with opposite non-integer corners:
    ``(A0, A1, A2, A3) = ([alpha0], alpha1, [alpha3], alpha2)``."""
    return CornerOrders(
        A0=floor_int(angles.alpha0),
        A1=angles.alpha1,
        A2=floor_int(angles.alpha3),
        A3=angles.alpha2,
    )
