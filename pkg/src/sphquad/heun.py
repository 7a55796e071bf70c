"""Certificate polynomials for the accessory parameter.

The Fuchsian equation attached to an admissible angle set has four singular
points; put the two non-integer corners at 0 and infinity and the two
integer corners at 1 and at a movable point whose position is encoded by a
modulus ``t``.  Around each singular point the equation has a distinguished
power-series solution whose coefficients satisfy a three-term recurrence in
the accessory parameter ``lambda``; writing the recurrence as an infinite
tridiagonal matrix (a *band*), the accessory values where the series
degenerates to a (quasi-)polynomial, or where a logarithm is suppressed, are
exactly the eigenvalues of a finite *window* of the band.  Those windows are
closed either because a subdiagonal entry vanishes just past the window (an
invariant subspace: the series truncates) or because a superdiagonal entry
vanishes there (a quotient block: the obstruction row).

Four windows certify the same finite set of accessory values, with degrees

    ORIGIN0: kappa+1, ORIGIN1: m+1, ORIGIN_A: n+1, QUASI_ORIGIN0: m+n-kappa+1,

and every reported polynomial is expressed in one fixed chart for lambda:
the chart adapted to the first integer corner (the ORIGIN1 window needs no
shift).  The other three constructions are shifted/scaled onto that chart,
so the polynomial produced by the minimal window divides every other one.

Modulus conventions: ``t > 0`` corresponds to non-separating position of the
singular points on a circle, ``t < 0`` to separating position; ``t`` in
``{0, 1}`` means two singular points collide and the four-window consistency
degenerates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from sphquad.params import NormalizedParams, Scalar, is_exact
from sphquad.polys import charpoly_tridiag, pdivides

__all__ = [
    "Origin",
    "HeunForm",
    "JacobiBand",
    "TruncatedJacobi",
    "CertPoly",
    "DegenerateModulus",
    "band_origin0",
    "band_origin1",
    "band_origin1_reflected",
    "band_quasi_origin0",
    "cert_poly",
    "min_cert_poly",
    "all_cert_polys",
    "natural_window",
    "shift_to_corner0",
    "shift_to_twisted",
    "reflection_offset",
]


class DegenerateModulus(ValueError):
    """The modulus makes two singular points collide for this construction."""


class Origin(enum.Enum):
    """Which local expansion a band (or certificate window) encodes.

    ORIGIN0
        Exponent-0 series at the non-integer corner placed at 0.
    ORIGIN1
        Series in the chart that moves the smaller integer corner to the
        origin; its window closes on the obstruction row that decides
        whether a logarithm appears.
    ORIGIN_A
        Same construction adapted to the movable integer corner (reached by
        the coordinate swap z -> z/t, which exchanges the two integer
        corners and inverts the modulus).
    QUASI_ORIGIN0
        Twisted series ``z**(sigma+1) * (power series)`` at the corner at 0.
    """

    ORIGIN0 = "origin0"
    ORIGIN1 = "origin1"
    ORIGIN_A = "origin_a"
    QUASI_ORIGIN0 = "quasi_origin0"


@dataclass(frozen=True, eq=False)
class HeunForm:
    """Tag describing which expansion of which equation a band encodes."""

    origin: Origin
    params: NormalizedParams
    t: Scalar
    reflected: bool = False

    @property
    def exact(self) -> bool:
        return self.params.exact and is_exact(self.t)


@dataclass(frozen=True, eq=False)
class JacobiBand:
    """Infinite tridiagonal recurrence matrix, entries given by callables.

    Row ``s`` of the matrix holds ``c(s-1)`` at column ``s-1``, ``ahat(s)``
    on the diagonal and ``b(s)`` at column ``s+1``; an eigenvector is a
    solution of ``c(s-1) h(s-1) + ahat(s) h(s) + b(s) h(s+1) = lam h(s)``.
    """

    form: HeunForm
    b: Callable[[int], Scalar]
    ahat: Callable[[int], Scalar]
    c: Callable[[int], Scalar]

    def truncate(self, lo: int, hi: int) -> "TruncatedJacobi":
        """Finite window ``[lo, hi]``; raises unless the window is closed.

        The window must not exchange spectrum with the rest of the band:
        at each end either the outgoing subdiagonal coupling (``c``) or the
        incoming superdiagonal coupling (``b``) must vanish.  The vanishing
        entries are always structural integer factors, so exact comparison
        is safe for float data too.
        """
        if not (0 <= lo <= hi):
            raise ValueError(f"bad window [{lo}, {hi}]")
        if lo > 0 and self.b(lo - 1) != 0 and self.c(lo - 1) != 0:
            raise ValueError(f"window [{lo}, {hi}] is open at the bottom")
        if self.b(hi) != 0 and self.c(hi) != 0:
            raise ValueError(f"window [{lo}, {hi}] is open at the top")
        return TruncatedJacobi(
            form=self.form,
            lo=lo,
            hi=hi,
            diag=tuple(self.ahat(s) for s in range(lo, hi + 1)),
            sub=tuple(self.c(s) for s in range(lo, hi)),
            sup=tuple(self.b(s) for s in range(lo, hi)),
        )


@dataclass(frozen=True, eq=False)
class TruncatedJacobi:
    """A closed finite window of a band, with exact entry lists.

    ``sub[j]`` couples index ``lo+j+1`` back to ``lo+j`` and ``sup[j]``
    couples ``lo+j`` up to ``lo+j+1``.
    """

    form: HeunForm
    lo: int
    hi: int
    diag: tuple
    sub: tuple
    sup: tuple

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def shifted(self, delta: Scalar) -> "TruncatedJacobi":
        """The window of ``J + delta*I`` (diagonal shift only)."""
        return TruncatedJacobi(
            self.form, self.lo, self.hi,
            tuple(d + delta for d in self.diag), self.sub, self.sup,
        )

    def scaled(self, factor: Scalar) -> "TruncatedJacobi":
        """The window of ``factor * J``."""
        return TruncatedJacobi(
            self.form, self.lo, self.hi,
            tuple(factor * d for d in self.diag),
            tuple(factor * x for x in self.sub),
            tuple(factor * x for x in self.sup),
        )

    def charpoly(self) -> list:
        """Monic characteristic polynomial, ascending coefficients."""
        return charpoly_tridiag(list(self.diag), sub=list(self.sub), sup=list(self.sup))

    def offdiag_products(self) -> list:
        """Products ``sub[j]*sup[j]``; their sign pattern drives the
        real-root certificates."""
        return [x * y for x, y in zip(self.sub, self.sup)]

    def to_dense(self):
        import numpy as np

        d = self.size
        J = np.zeros((d, d))
        for i in range(d):
            J[i, i] = float(self.diag[i])
        for i in range(d - 1):
            J[i + 1, i] = float(self.sub[i])
            J[i, i + 1] = float(self.sup[i])
        return J


@dataclass(frozen=True)
class CertPoly:
    """A certificate polynomial in the common lambda chart.

    Monic with ascending coefficients; its roots are accessory-parameter
    values at which the expansion tagged by ``origin`` degenerates.
    """

    origin: Origin
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]


# ---------------------------------------------------------------------------
# Band constructors
# ---------------------------------------------------------------------------

def band_origin0(params: NormalizedParams, t: Scalar) -> JacobiBand:
    """Recurrence band of the exponent-0 series at the corner at 0."""
    m, n, k, sg = params.m, params.n, params.kappa, params.sigma

    def b(s: int) -> Scalar:
        return t * (s + 1) * (s - sg)

    def ahat(s: int) -> Scalar:
        return -s * ((t + 1) * (s - 1 - sg) - m * t - n)

    def c(s: int) -> Scalar:
        return (s - k) * (s + k - sg - m - n - 1)

    return JacobiBand(HeunForm(Origin.ORIGIN0, params, t), b, ahat, c)


def _band_origin1_raw(sg: Scalar, m: int, n: int, k: int, t: Scalar,
                      form: HeunForm) -> JacobiBand:
    # Chart with the integer corner of order m+1 at the origin; also reused
    # with (m, n, t) -> (n, m, 1/t) for the movable-corner construction.
    def b(s: int) -> Scalar:
        return t * (s + 1) * (s - m)

    def ahat(s: int) -> Scalar:
        return -s * (s + sg + 1 + n - 2 * k + t * (s - 1 - m - sg))

    def c(s: int) -> Scalar:
        return (k - s) * (k - n - s - 1)

    return JacobiBand(form, b, ahat, c)


def band_origin1(params: NormalizedParams, t: Scalar) -> JacobiBand:
    """Recurrence band in the chart adapted to the smaller integer corner.

    This band defines the common lambda chart: its window ``[0, m]`` closes
    on the obstruction row (superdiagonal zero) and needs no shift.
    """
    return _band_origin1_raw(
        params.sigma, params.m, params.n, params.kappa, t,
        HeunForm(Origin.ORIGIN1, params, t),
    )


def band_origin1_reflected(params: NormalizedParams, t: Scalar) -> JacobiBand:
    """Band of the reflected equation (modulus ``1 - t``).

    Its window ``[0, kappa]`` certifies the same accessory values after the
    involution ``lambda -> reflection_offset(params) - lambda``; the window
    entries have a different sign pattern, which is what the real-root
    bound in separating position runs on.
    """
    m, n, k, sg = params.m, params.n, params.kappa, params.sigma
    r = 1 - t

    def b(s: int) -> Scalar:
        return r * (s + 1) * (s - sg)

    def ahat(s: int) -> Scalar:
        return -s * ((s + m + n + 1 - 2 * k) + r * (s - m - sg - 1))

    def c(s: int) -> Scalar:
        return (k - s) * (k - n - s - 1)

    return JacobiBand(HeunForm(Origin.ORIGIN1, params, t, reflected=True), b, ahat, c)


def band_quasi_origin0(params: NormalizedParams, t: Scalar) -> JacobiBand:
    """Recurrence band of the twisted series ``z**(sigma+1) * sum h_s z^s``."""
    m, n, k, sg = params.m, params.n, params.kappa, params.sigma

    def b(s: int) -> Scalar:
        return t * (s + 1) * (s + sg + 2)

    def ahat(s: int) -> Scalar:
        return -s * ((t + 1) * (s + sg + 1) - m * t - n)

    def c(s: int) -> Scalar:
        return (s + sg + 1 - k) * (s + k - m - n)

    return JacobiBand(HeunForm(Origin.QUASI_ORIGIN0, params, t), b, ahat, c)


# ---------------------------------------------------------------------------
# Chart shifts
# ---------------------------------------------------------------------------

def shift_to_corner0(params: NormalizedParams) -> Scalar:
    """Offset between the ORIGIN0 eigenvalue chart and the common chart:
    ``lambda_origin0 = lambda + shift_to_corner0(params)``.  Independent of
    the modulus."""
    k = params.kappa
    return k * (params.sigma + params.n + 1 - k)


def shift_to_twisted(params: NormalizedParams, t: Scalar) -> Scalar:
    """Offset for the twisted (QUASI_ORIGIN0) chart:
    ``lambda_twisted = lambda + shift_to_twisted(params, t)``."""
    return shift_to_corner0(params) - (params.sigma + 1) * (params.m * t + params.n)


def _shift_to_swapped(params: NormalizedParams) -> Scalar:
    # offset analogous to shift_to_corner0 after the m <-> n swap
    k = params.kappa
    return k * (params.sigma + params.m + 1 - k)


def reflection_offset(params: NormalizedParams) -> Scalar:
    """Constant ``kappa*(kappa - n - 1)`` of the involution relating the
    reflected band's eigenvalues to the common chart."""
    return params.kappa * (params.kappa - params.n - 1)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

def natural_window(origin: Origin, params: NormalizedParams) -> int:
    """Top index of the closed window for each construction."""
    if origin is Origin.ORIGIN0:
        return params.kappa
    if origin is Origin.ORIGIN1:
        return params.m
    if origin is Origin.ORIGIN_A:
        return params.n
    return params.m + params.n - params.kappa


#: tie-break order when several certificates reach the minimal degree
_PREFERENCE = (Origin.ORIGIN0, Origin.ORIGIN1, Origin.ORIGIN_A, Origin.QUASI_ORIGIN0)


def cert_poly(params: NormalizedParams, t: Scalar, origin: Origin) -> CertPoly:
    """Certificate polynomial of one construction, in the common chart.

    The modulus values 0 and 1 are collisions of singular points; the
    certificates are not defined there (the triangular limits remain
    available through the band constructors and ``truncate``).
    """
    if t == 0 or t == 1:
        raise DegenerateModulus(f"certificates are undefined at modulus {t}")
    hi = natural_window(origin, params)
    if origin is Origin.ORIGIN0:
        win = band_origin0(params, t).truncate(0, hi)
        win = win.shifted(-shift_to_corner0(params))
    elif origin is Origin.ORIGIN1:
        win = band_origin1(params, t).truncate(0, hi)
    elif origin is Origin.ORIGIN_A:
        swapped = _band_origin1_raw(
            params.sigma, params.n, params.m, params.kappa,
            1 / t if isinstance(t, float) else Fraction(1) / t,
            HeunForm(Origin.ORIGIN_A, params, t),
        )
        win = swapped.truncate(0, hi)
        win = win.scaled(t).shifted(t * _shift_to_swapped(params) - shift_to_corner0(params))
    else:
        win = band_quasi_origin0(params, t).truncate(0, hi)
        win = win.shifted((params.sigma + 1) * (params.m * t + params.n)
                          - shift_to_corner0(params))
    return CertPoly(origin, tuple(win.charpoly()))


def all_cert_polys(params: NormalizedParams, t: Scalar) -> dict[Origin, CertPoly]:
    """All four certificate constructions keyed by origin."""
    return {o: cert_poly(params, t, o) for o in _PREFERENCE}


def min_cert_poly(params: NormalizedParams, t: Scalar) -> CertPoly:
    """The minimal-degree certificate; ties break in the order
    ORIGIN0, ORIGIN1, ORIGIN_A, QUASI_ORIGIN0.

    Its degree is ``min(m, kappa) + 1`` and, for exact data, it divides
    every other certificate polynomial.
    """
    degrees = {o: natural_window(o, params) + 1 for o in _PREFERENCE}
    best = min(_PREFERENCE, key=lambda o: (degrees[o], _PREFERENCE.index(o)))
    return cert_poly(params, t, best)


def divides_all(params: NormalizedParams, t: Scalar) -> bool:
    """Exact check that the minimal certificate divides the other three."""
    certs = all_cert_polys(params, t)
    low = min_cert_poly(params, t)
    return all(pdivides(list(low.coeffs), list(c.coeffs)) for c in certs.values())
