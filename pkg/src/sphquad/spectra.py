"""Solving and certifying the real accessory-parameter spectrum.

The admissible accessory values at a given modulus are the roots of the
minimal certificate polynomial (see :mod:`sphquad.heun`); this module counts
and locates the real ones, certifies counts through a diagonal congruence of
the certificate window, and traces the real spectrum along a sweep of the
modulus.

Two scalar models are supported everywhere:

``exact``
    Rational data end to end; real roots are counted by Sturm chains and
    located by bisection.  This is the ground truth.
``double``
    numpy companion-matrix roots with one Newton polish; roots closer than
    ``1e-7 * (1 + |lambda|)`` are merged and a root counts as real when
    ``|Im| <= 1e-7 * (1 + |lambda|)``.

Congruence certificates: a tridiagonal window ``J`` with nonzero subdiagonal
satisfies ``J^T R = R J`` for the diagonal matrix built from
``r_0 = 1, r_j = r_{j-1} * sup[j-1] / sub[j-1]``.  When every product
``sub[j]*sup[j]`` is positive, ``J`` is similar to a real symmetric matrix
(all eigenvalues real and simple); in general the number of nonreal
eigenvalue pairs is at most ``min(#positive r, #negative r)``, which under a
sign pattern of ``p`` positive products followed by negatives equals
``floor((size - 1 - p + 1) / 2)``.

Modulus charts: library functions take the band modulus ``t``; positions of
the four singular points on a circle are non-separating for ``t > 0`` and
separating for ``t < 0``.  The command-line layer uses the equivalent figure
chart ``a = 1 / (1 - t)``, where separating position means ``0 < a < 1``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sphquad import polys as P
from sphquad.heun import (
    DegenerateModulus,
    Origin,
    TruncatedJacobi,
    all_cert_polys,
    band_origin1,
    min_cert_poly,
)
from sphquad import params as PM
from sphquad.params import NormalizedParams, Scalar, is_exact

__all__ = [
    "CongruenceDiag",
    "SpectrumReport",
    "CountReport",
    "VerifyReport",
    "CurveSample",
    "symmetrize_check",
    "pontryagin_bound",
    "solve_lambda",
    "count_real",
    "verify_unitary",
    "curve_trace",
    "write_curve_csv",
    "figure_to_band",
    "band_to_figure",
    "certificate_window",
]

#: relative tolerance for double-model root classification and merging
DOUBLE_TOL = 1e-7

#: environment variable capping the sweep thread pool
THREADS_ENV = "HEUN_THREADS"


def figure_to_band(a: Scalar) -> Scalar:
    """Convert the figure-chart position ``a`` to the band modulus
    ``t = 1 - 1/a``; raises for ``a = 0``."""
    if a == 0:
        raise DegenerateModulus("figure position 0 is a singular point")
    if is_exact(a):
        return 1 - Fraction(1) / Fraction(a)
    return 1.0 - 1.0 / a


def band_to_figure(t: Scalar) -> Scalar:
    """Inverse chart map ``a = 1 / (1 - t)``."""
    if t == 1:
        raise DegenerateModulus("band modulus 1 is degenerate")
    if is_exact(t):
        return Fraction(1) / (1 - Fraction(t))
    return 1.0 / (1.0 - t)


def certificate_window(params: NormalizedParams, t: Scalar) -> TruncatedJacobi:
    """The window ``[0, min(m, kappa)]`` of the integer-corner band.

    Its characteristic polynomial equals the minimal certificate for every
    modulus, and its entry signs drive the real-root certificates.
    """
    return band_origin1(params, t).truncate(0, min(params.m, params.kappa))


# ---------------------------------------------------------------------------
# Congruence diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceDiag:
    """Diagonal congruence data of a window (Sylvester-style certificate).

    ``entries`` are the diagonal values ``r_j`` (exact when the window is
    exact); ``pattern_prefix`` is the number of leading positive off-diagonal
    products when they form a positive-then-negative pattern, else None.
    """

    entries: tuple
    n_negative: int
    all_positive: bool
    pattern_prefix: int | None
    ok: bool

    @property
    def nonreal_pair_bound(self) -> int:
        neg = self.n_negative
        return min(len(self.entries) - neg, neg)


def symmetrize_check(window: TruncatedJacobi) -> CongruenceDiag:
    """Build and verify the diagonal congruence of a window.

    Requires a nowhere-zero subdiagonal (split the window at zero couplings
    first; see :func:`pontryagin_bound`).
    """
    if any(x == 0 for x in window.sub):
        raise ValueError("zero subdiagonal entry: congruence undefined")
    entries = [1]
    for b_j, c_j in zip(window.sup, window.sub):
        entries.append(entries[-1] * P._exact_div(b_j, c_j))
    products = window.offdiag_products()
    # verify r_{j+1} * sub[j] == r_j * sup[j]
    ok = True
    for j in range(len(products)):
        lhs = entries[j + 1] * window.sub[j]
        rhs = entries[j] * window.sup[j]
        if is_exact(lhs) and is_exact(rhs):
            ok = ok and lhs == rhs
        else:
            ok = ok and abs(float(lhs) - float(rhs)) <= 1e-9 * (1 + abs(float(rhs)))
    n_neg = sum(1 for r in entries if r < 0)
    all_pos = all(x > 0 for x in products)
    # positive prefix followed by all-negative tail, else None
    k = 0
    while k < len(products) and products[k] > 0:
        k += 1
    if all(x < 0 for x in products[k:]):
        prefix = k
    else:
        prefix = None
    return CongruenceDiag(
        entries=tuple(entries),
        n_negative=n_neg,
        all_positive=all_pos,
        pattern_prefix=prefix,
        ok=ok,
    )


def _blocks(window: TruncatedJacobi) -> Iterable[TruncatedJacobi]:
    """Split a window at vanishing off-diagonal couplings.

    A zero ``sub[j]`` or ``sup[j]`` makes the window block-triangular, so
    the spectrum is the union of the blocks' spectra.
    """
    start = 0
    for j, prod in enumerate(window.offdiag_products()):
        if prod == 0:
            yield TruncatedJacobi(
                window.form, window.lo + start, window.lo + j,
                window.diag[start:j + 1], window.sub[start:j], window.sup[start:j],
            )
            start = j + 1
    yield TruncatedJacobi(
        window.form, window.lo + start, window.hi,
        window.diag[start:], window.sub[start:], window.sup[start:],
    )


def pontryagin_bound(window: TruncatedJacobi) -> int:
    """Upper bound for the number of nonreal eigenvalue pairs of a window.

    Splits at zero couplings, then bounds each block by the signature of its
    diagonal congruence.  A block whose products are all positive
    contributes zero; a positive-prefix/negative-tail pattern with ``p``
    positive products in a block of size ``s`` contributes
    ``floor((s - p) / 2)``.
    """
    total = 0
    for block in _blocks(window):
        if block.size <= 1:
            continue
        signs = [1]
        for prod in block.offdiag_products():
            signs.append(signs[-1] * (1 if prod > 0 else -1))
        neg = sum(1 for s in signs if s < 0)
        total += min(len(signs) - neg, neg)
    return total


# ---------------------------------------------------------------------------
# Spectrum solving
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumReport:
    """Real accessory spectrum at one modulus."""

    t: float
    model: str
    origin: Origin
    degree: int
    real_count: int
    nonreal_pairs: int
    lam_real: tuple[float, ...]
    simple: bool


def _require_model(params: NormalizedParams, t: Scalar, model: str) -> None:
    if model not in ("exact", "double"):
        raise ValueError(f"unknown scalar model {model!r}")
    if model == "exact" and not (params.exact and is_exact(t)):
        raise ValueError("exact model requires rational sigma and modulus")


def _solve_exact(cert: Sequence) -> tuple[list[Fraction], int, bool]:
    coeffs = list(cert)
    roots = P.real_roots_exact(coeffs, eps=Fraction(1, 10**30))
    real_distinct = len(roots)
    mult_total = sum(m for _, m in roots)
    nonreal_pairs = (P.pdeg(coeffs) - mult_total) // 2
    simple = all(m == 1 for _, m in roots) and P.is_squarefree(coeffs)
    return [r for r, _ in roots], nonreal_pairs, simple


def _horner2(coeffs: Sequence[float], z: complex) -> tuple[complex, complex]:
    acc = 0j
    dacc = 0j
    for c in reversed(coeffs):
        dacc = dacc * z + acc
        acc = acc * z + c
    return acc, dacc


def _solve_double(cert: Sequence[float]) -> tuple[list[float], int, bool]:
    import numpy as np

    coeffs = [float(c) for c in cert]
    raw = np.roots(np.array(coeffs[::-1]))
    polished = []
    for z in raw:
        z = complex(z)
        f, df = _horner2(coeffs, z)
        if df != 0:
            step = f / df
            if abs(step) < 1:  # reject wild corrections near multiple roots
                z = z - step
        polished.append(z)
    polished.sort(key=lambda z: (z.real, z.imag))
    # merge coincident roots
    merged: list[tuple[complex, int]] = []
    for z in polished:
        if merged and abs(z - merged[-1][0]) <= DOUBLE_TOL * (1 + abs(z)):
            zprev, k = merged[-1]
            merged[-1] = ((zprev * k + z) / (k + 1), k + 1)
        else:
            merged.append((z, 1))
    reals = [z.real for z, _ in merged if abs(z.imag) <= DOUBLE_TOL * (1 + abs(z))]
    nonreal = sum(1 for z, _ in merged if abs(z.imag) > DOUBLE_TOL * (1 + abs(z)))
    simple = all(k == 1 for _, k in merged)
    return sorted(reals), nonreal // 2, simple


def solve_lambda(params: NormalizedParams, t: Scalar, model: str = "exact") -> SpectrumReport:
    """Real roots of the minimal certificate at band modulus ``t``."""
    _require_model(params, t, model)
    cert = min_cert_poly(params, t)
    if model == "exact":
        roots, pairs, simple = _solve_exact(cert.coeffs)
        lam = tuple(float(r) for r in roots)
    else:
        reals, pairs, simple = _solve_double(cert.as_floats())
        lam = tuple(reals)
    return SpectrumReport(
        t=float(t),
        model=model,
        origin=cert.origin,
        degree=cert.degree,
        real_count=len(lam),
        nonreal_pairs=pairs,
        lam_real=lam,
        simple=simple,
    )


@dataclass(frozen=True)
class CountReport:
    """Real-solution count at one modulus, with its a-priori bounds."""

    real_count: int
    lower: int
    upper: int
    within_bounds: bool


def count_real(params: NormalizedParams, t: Scalar, model: str = "exact") -> CountReport:
    """Count distinct real accessory values and compare against the bounds.

    For ``t > 0`` (non-separating position) the count must equal the upper
    bound; for ``t < 0`` (separating) it must be at least the chain lower
    bound.
    """
    rep = solve_lambda(params, t, model)
    upper = PM.upper_bound(params)
    if t > 0:
        lower = upper
    else:
        lower = PM.real_lower_bound(PM.denormalize(params))
    return CountReport(
        real_count=rep.real_count,
        lower=lower,
        upper=upper,
        within_bounds=lower <= rep.real_count <= upper,
    )


# ---------------------------------------------------------------------------
# Certificate verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyReport:
    """Residuals of all four certificate constructions."""

    mode: str
    residuals: dict
    ok: bool


def verify_unitary(params: NormalizedParams, t: Scalar, lam=None) -> VerifyReport:
    """Cross-verify the four certificate constructions at modulus ``t``.

    With ``lam=None`` and exact data, checks that the squarefree part of the
    minimal certificate divides each construction exactly (one division
    certifies every root simultaneously); residuals are the largest
    remainder coefficients, so all must be exactly zero.  With a numeric
    ``lam``, evaluates every construction at ``lam`` and compares against
    ``DOUBLE_TOL`` times the coefficient norm.
    """
    certs = all_cert_polys(params, t)
    residuals: dict = {}
    if lam is None:
        if not (params.exact and is_exact(t)):
            raise ValueError("divisibility verification requires rational data")
        low = P.psquarefree(list(min_cert_poly(params, t).coeffs))
        for origin, cert in certs.items():
            _, rem = P.pdivmod(list(cert.coeffs), low)
            residuals[origin.value] = 0.0 if not rem else max(abs(float(c)) for c in rem)
        ok = all(r == 0.0 for r in residuals.values())
        return VerifyReport(mode="exact", residuals=residuals, ok=ok)
    ok = True
    for origin, cert in certs.items():
        coeffs = cert.as_floats()
        val = abs(_horner2(coeffs, complex(lam))[0])
        norm = max(abs(c) for c in coeffs)
        residuals[origin.value] = val
        ok = ok and val <= DOUBLE_TOL * norm
    return VerifyReport(mode="double", residuals=residuals, ok=ok)


# ---------------------------------------------------------------------------
# Curve tracing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveSample:
    """One sweep sample in the figure chart.

    ``real_count == -1`` marks a failed sample (the CSV writer emits it with
    empty lambda cells); successful samples carry the sorted real values.
    """

    a: float
    degree: int
    real_count: int
    lam_real: tuple[float, ...]
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.real_count >= 0


def _thread_count(requested: int | None, njobs: int) -> int:
    if requested is not None:
        return max(1, min(requested, njobs))
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, min(int(env), njobs))
        except ValueError:
            pass
    return max(1, min(4, os.cpu_count() or 1, njobs))


def curve_trace(
    params: NormalizedParams,
    figure_grid: Sequence[Scalar],
    model: str = "double",
    threads: int | None = None,
) -> list[CurveSample]:
    """Solve the spectrum along a sweep of figure-chart positions.

    Samples are returned in input order; failures (degenerate positions,
    model errors) become failure records rather than exceptions.  The pool
    size is capped by the ``HEUN_THREADS`` environment variable.
    """
    degree = min(params.m, params.kappa) + 1

    def run(a: Scalar) -> CurveSample:
        try:
            t = figure_to_band(a)
            rep = solve_lambda(params, t, model)
            return CurveSample(
                a=float(a), degree=rep.degree,
                real_count=rep.real_count, lam_real=rep.lam_real,
            )
        except Exception as exc:  # per-sample failure record
            return CurveSample(
                a=float(a), degree=degree, real_count=-1, lam_real=(),
                error=f"{type(exc).__name__}: {exc}",
            )

    grid = list(figure_grid)
    nthreads = _thread_count(threads, len(grid))
    if nthreads <= 1 or len(grid) <= 1:
        return [run(a) for a in grid]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        return list(pool.map(run, grid))


def write_curve_csv(samples: Sequence[CurveSample], fh) -> None:
    """Write sweep samples as CSV: ``a,degree,real_count,lambda_1..lambda_D``.

    ``D`` is the certificate degree (constant over a sweep); rows list the
    real values in ascending order, padded with empty cells, and failed
    samples have ``real_count = -1`` with all lambda cells empty.  Floats
    are rendered with 17 significant digits, so the round-trip is lossless.
    """
    D = samples[0].degree if samples else 0
    header = ["a", "degree", "real_count"] + [f"lambda_{i+1}" for i in range(D)]
    fh.write(",".join(header) + "\n")
    for s in samples:
        cells = ["%.17g" % s.a, str(s.degree), str(s.real_count)]
        lams = list(s.lam_real)[:D] if s.ok else []
        cells += ["%.17g" % x for x in lams]
        cells += [""] * (D - len(lams))
        fh.write(",".join(cells) + "\n")
