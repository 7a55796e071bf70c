"""Reconstructing the developing map from a certified accessory value.

At every certified accessory value the equation has a terminating series
solution at the corner at 0 for each of the two local exponents: a
polynomial ``h`` of degree ``kappa`` (exponent 0), and a twisted solution
``z**(sigma+1) * qt`` with ``qt`` a polynomial of degree ``m + n - kappa``
(exponent ``sigma + 1``).  Their ratio

    f = z**(sigma+1) * qt / h

is the developing map of the quadrilateral.  With ``e = |sigma + 1|`` and
``alpha = e - floor(e)`` in (0, 1), the map is represented as
``f = z**alpha * P / Q`` with coprime polynomials; the convention here puts
the whole-power factor ``z**floor(e)`` in the numerator, so that ``f`` has a
zero (not a pole) at the origin.  This choice also makes the exponent-count
solution unique: composing with the rotation ``w -> -1/w`` gives the mirror
representation with a pole at 0, which satisfies the same angle equations.

Correctness is certified by the critical-point identity

    z*(P'Q - PQ') + alpha*P*Q
        = c * z**max(p0,q0) * (z-1)**(alpha1-1) * (z-a)**(alpha2-1),

an exact polynomial identity in the rational model (the right-hand side
lists the forced critical points: the corners carry multiplicities
``alpha1 - 1`` and ``alpha2 - 1``, and both sides have degree ``p + q``, so
there are no free critical points).  ``a`` is the modulus in the chart the
pair's polynomials live in -- the band chart seating the corners at
``0, 1, a, infinity`` with the ``alpha1``-corner at 1 (see
:mod:`sphquad.spectra` for the chart maps).

All accessory values are taken in the common certificate chart used by
:mod:`sphquad.heun` and :mod:`sphquad.spectra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from sphquad import polys as P
from sphquad.heun import (
    DegenerateModulus,
    HeunForm,
    band_origin0,
    band_quasi_origin0,
    shift_to_corner0,
    shift_to_twisted,
)
from sphquad.params import (
    AngleSet,
    NormalizedParams,
    Scalar,
    as_int,
    existence_check,
    floor_int,
    is_exact,
    is_integral,
)

__all__ = [
    "NoSolution",
    "MultipleSolutions",
    "TerminationFailed",
    "ExponentSolution",
    "TwistedSolution",
    "DevelopingPair",
    "WronskianResidual",
    "solve_exponent_system",
    "polynomial_solution",
    "quasipolynomial_solution",
    "assemble_developing_pair",
    "exponent_system_ok",
    "wronskian_verify",
    "veronese_degree",
]

#: relative tolerance for the double model (termination and Wronskian fit)
RESIDUAL_TOL = 1e-8


class NoSolution(ValueError):
    """The angle equations have no admissible exponent solution."""


class MultipleSolutions(ValueError):
    """The angle equations are satisfied by more than one normalized
    exponent solution (signals an internal inconsistency)."""


class TerminationFailed(ValueError):
    """The series recurrence does not terminate at the given value --
    the value is not a certified accessory value."""


@dataclass(frozen=True)
class ExponentSolution:
    """Degrees and exponent of the representation ``f = z**alpha * P/Q``.

    ``p0``/``q0`` are the multiplicities of zero of ``P``/``Q`` at the
    origin; the normalization (zero of ``f`` at the origin) forces
    ``q0 = 0`` and ``p0 = floor(alpha0)``.
    """

    p: int
    q: int
    p0: int
    q0: int
    alpha: Scalar


@dataclass(frozen=True)
class TwistedSolution:
    """Terminating twisted series ``z**exponent * (polynomial)``."""

    exponent: Scalar
    coeffs: tuple


@dataclass(frozen=True)
class DevelopingPair:
    """Polynomials of the representation ``f = z**alpha * P/Q``."""

    P: tuple
    Q: tuple
    alpha: Scalar

    @property
    def p(self) -> int:
        return P.pdeg(list(self.P))

    @property
    def q(self) -> int:
        return P.pdeg(list(self.Q))

    @property
    def p0(self) -> int:
        return _zero_order(self.P)

    @property
    def q0(self) -> int:
        return _zero_order(self.Q)

    def coprime(self) -> bool:
        """True when P and Q share no root (rational data only).

        Computed through the Euclidean remainder sequence: a constant gcd
        is equivalent to a nonvanishing resultant.
        """
        return P.pdeg(P.pgcd(list(self.P), list(self.Q))) == 0


@dataclass(frozen=True)
class WronskianResidual:
    """Both sides of the critical-point identity and their gap.

    ``lhs`` is ``z(P'Q - PQ') + alpha*P*Q``; ``rhs_model`` is the fitted
    ``c * z**max(p0,q0) * (z-1)**(alpha1-1) * (z-a)**(alpha2-1)``;
    ``residual_norm`` is the largest coefficient of their difference.
    """

    lhs: tuple
    rhs_model: tuple
    c: Scalar
    residual_norm: Scalar
    ok: bool


def _zero_order(coeffs) -> int:
    for i, x in enumerate(coeffs):
        if x != 0:
            return i
    return 0


# ---------------------------------------------------------------------------
# Exponent bookkeeping
# ---------------------------------------------------------------------------

def solve_exponent_system(angles: AngleSet) -> ExponentSolution:
    """The unique normalized solution of the angle equations.

    Solves ``alpha0 = |p0 - q0 + alpha|``, ``alpha1 + alpha2 - 2 =
    p + q - max(p0, q0)``, ``alpha3 = |p - q + alpha|`` in nonnegative
    integers with ``min(p0, q0) = 0``, ``p0 <= p``, ``q0 <= q`` and
    ``alpha in (0, 1)``, normalized so the origin is a zero of the map
    (``p0 - q0 + alpha = alpha0 > 0``).  The mirror representation (pole at
    the origin) is excluded by the normalization; without it every solvable
    angle set would admit exactly two solutions.
    """
    if not existence_check(angles).exists:
        raise NoSolution(f"no spherical quadrilateral with angles {angles}")
    a0, a1, a2, a3 = angles.alpha0, angles.alpha1, angles.alpha2, angles.alpha3
    p0 = floor_int(a0)
    alpha = a0 - p0
    total = a1 + a2 - 2 + p0  # p + q
    found = []
    for sgn in (1, -1):
        diff = sgn * a3 - alpha  # p - q
        if not is_integral(diff):
            continue
        d = as_int(diff)
        if (total + d) % 2:
            continue
        p, q = (total + d) // 2, (total - d) // 2
        if p >= p0 and q >= 0:
            found.append(ExponentSolution(p=p, q=q, p0=p0, q0=0, alpha=alpha))
    if not found:
        raise NoSolution(f"angle equations unsolvable for {angles}")
    if len(found) > 1:
        raise MultipleSolutions(f"{len(found)} normalized solutions for {angles}")
    return found[0]


def veronese_degree(p: int, q: int) -> int:
    """Number of complex solutions of the critical-point projection
    problem for degrees ``(p, q)``."""
    return comb(p + q, p)


# ---------------------------------------------------------------------------
# Terminating series solutions
# ---------------------------------------------------------------------------

def _terminating_series(band, mu, top: int) -> tuple:
    """Coefficients 0..top of the series, requiring exact termination.

    Forward-solves the three-term recurrence from coefficient 0 and checks
    the closing row, which must vanish for the series to terminate at
    degree ``top``.  Exact data demands an exactly zero closing row; double
    data allows a relative residual of ``RESIDUAL_TOL``.
    """
    exact = band.form.exact and is_exact(mu)
    h = [Fraction(1) if exact else 1.0]
    for s in range(top):
        acc = (mu - band.ahat(s)) * h[s]
        if s:
            acc = acc - band.c(s - 1) * h[s - 1]
        den = band.b(s)
        h.append(Fraction(acc, 1) / den if exact else acc / den)
    if top == 0:
        terms = [(band.ahat(0) - mu) * h[0]]
    else:
        terms = [band.c(top - 1) * h[top - 1], (band.ahat(top) - mu) * h[top]]
    residual = sum(terms)
    if exact:
        ok = residual == 0
    else:
        scale = max([1.0] + [abs(float(x)) for x in terms])
        ok = abs(residual) <= RESIDUAL_TOL * scale
    if not ok:
        raise TerminationFailed(
            f"closing-row residual {residual} at top index {top}"
        )
    return tuple(h)


def _check_modulus(t: Scalar) -> None:
    if t == 0 or t == 1:
        raise DegenerateModulus(f"series solutions are undefined at modulus {t}")


def _unwrap_form(form: HeunForm):
    if form.reflected:
        raise ValueError(
            "series at the corner at 0 require an unreflected form"
        )
    _check_modulus(form.t)
    return form.params, form.t


def polynomial_solution(form: HeunForm, lam: Scalar) -> tuple:
    """The degree-``kappa`` polynomial solution at accessory value ``lam``.

    The expansion is always taken at the corner at 0 of the form's chart
    (only ``form.params`` and ``form.t`` are consulted).  ``lam`` must be a
    certified value -- a root of a certificate polynomial in the common
    chart; otherwise the recurrence cannot terminate and
    ``TerminationFailed`` is raised.
    """
    params, t = _unwrap_form(form)
    mu = lam + shift_to_corner0(params)
    return _terminating_series(band_origin0(params, t), mu, params.kappa)


def quasipolynomial_solution(form: HeunForm, lam: Scalar) -> TwistedSolution:
    """The twisted solution ``z**(sigma+1) * qt`` at accessory value ``lam``,
    with ``deg qt = m + n - kappa``.  Same chart and certification
    conventions as :func:`polynomial_solution`."""
    params, t = _unwrap_form(form)
    mu = lam + shift_to_twisted(params, t)
    top = params.m + params.n - params.kappa
    coeffs = _terminating_series(band_quasi_origin0(params, t), mu, top)
    return TwistedSolution(exponent=params.sigma + 1, coeffs=coeffs)


def assemble_developing_pair(params: NormalizedParams, t: Scalar, lam: Scalar) -> DevelopingPair:
    """Build ``f = z**alpha * P/Q`` from the two terminating solutions.

    The twisted factor goes to the numerator when its exponent is positive
    and to the denominator otherwise, keeping the zero of ``f`` at the
    origin (the normalization of :func:`solve_exponent_system`).
    """
    h = polynomial_solution(band_origin0(params, t).form, lam)
    tw = quasipolynomial_solution(band_quasi_origin0(params, t).form, lam)
    e = abs(params.sigma + 1)
    whole = floor_int(e)
    alpha = e - whole
    if params.sigma + 1 > 0:
        num, den = tw.coeffs, h
    else:
        num, den = h, tw.coeffs
    zero = Fraction(0) if isinstance(num[0], Fraction) else 0.0
    return DevelopingPair(
        P=(zero,) * whole + tuple(num), Q=tuple(den), alpha=alpha
    )


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

def exponent_system_ok(pair: DevelopingPair, angles: AngleSet) -> bool:
    """Whether the pair's degrees satisfy the angle equations for
    ``angles`` (in the seated order: ``alpha1``-corner at 1)."""
    p, q, p0, q0 = pair.p, pair.q, pair.p0, pair.q0

    def close(x, y) -> bool:
        if is_exact(x) and is_exact(y):
            return x == y
        return abs(float(x) - float(y)) <= 1e-9

    return (
        close(abs(p0 - q0 + pair.alpha), angles.alpha0)
        and close(abs(p - q + pair.alpha), angles.alpha3)
        and p + q - max(p0, q0) == angles.alpha1 + angles.alpha2 - 2
    )


def wronskian_verify(pair: DevelopingPair, a: Scalar, angles: AngleSet) -> WronskianResidual:
    """Certify the critical-point identity for the pair at modulus ``a``.

    The scalar ``c`` is fitted from the leading coefficients (the model
    side is monic by construction); the result is ``ok`` when the residual
    is exactly zero (rational data) or at most ``RESIDUAL_TOL`` relative to
    the left side (double data).
    """
    Pc, Qc = list(pair.P), list(pair.Q)
    lhs = P.padd(
        P.pmul([0, 1], P.psub(P.pmul(P.pderiv(Pc), Qc), P.pmul(Pc, P.pderiv(Qc)))),
        P.pscale(P.pmul(Pc, Qc), pair.alpha),
    )
    lhs = P.ptrim(lhs)
    base = [1]
    for _ in range(angles.alpha1 - 1):
        base = P.pmul(base, [-1, 1])
    for _ in range(angles.alpha2 - 1):
        base = P.pmul(base, [-a, 1])
    base = [0] * max(pair.p0, pair.q0) + base
    c = lhs[-1] if lhs else 0
    rhs = P.pscale(base, c)
    diff = P.psub(lhs, rhs)
    residual = max((abs(x) for x in diff), default=0)
    exact = all(is_exact(x) for x in lhs) and is_exact(a) and is_exact(c)
    if exact:
        ok = residual == 0
    else:
        scale = max([1.0] + [abs(float(x)) for x in lhs])
        ok = float(residual) <= RESIDUAL_TOL * scale
    return WronskianResidual(
        lhs=tuple(lhs), rhs_model=tuple(rhs), c=c, residual_norm=residual, ok=ok
    )
