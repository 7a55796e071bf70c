"""Independent re-derivation of the recurrence bands from the ODE itself.

The closed-form band entries in ``sphquad.heun`` were worked out by hand
from the action of

    L[y] = z(z-1)(z-A) y'' - [p(z-1)(z-A) + q z(z-A) + r z(z-1)] y' + K z y

on power series at z = 0: L[z^s] only has components along z^(s-1), z^s and
z^(s+1), so L is tridiagonal on coefficient vectors.  This script recomputes
those components by explicit polynomial expansion (no closed forms) and
checks them against the library's band constructors under the parameter maps

    origin0:    (p, q, r, K, A) = (sg, m, n, k*(sg+m+n+1-k),      t)
    origin1:    (p, q, r, K, A) = (m, sg, 2k-m-n-sg-2, k*(k-n-1), t)
    reflected:  (p, q, r, K, A) = (sg, m, 2k-m-n-sg-2, k*(k-n-1), 1-t)
    quasi:      (p, q, r, K, A) = (-sg-2, m, n, (k-sg-1)*(m+n-k), t)

It also prints the values frozen into tests/test_heun.py.

Run:  python3 tests/oracles/band_from_ode.py
"""

import random
import sys
from fractions import Fraction as F

sys.path.insert(0, "src")

from sphquad import heun as H
from sphquad.params import AngleSet, CaseTag, NormalizedParams, normalize
from sphquad.polys import charpoly_tridiag, padd, pmul, pscale


def ode_entries(p, q, r, K, A, s):
    """(c_{s-1}-slot, ahat_s-slot, b_s-slot) contributions of L[z^s].

    Returns the coefficients of L[z^s] on z^(s+1), z^s, z^(s-1); by the
    band convention these are c_s, ahat_s and b_{s-1} respectively.
    """
    second = pmul([-1, 1], [-A, 1])  # (z-1)(z-A)
    drift = padd(
        padd(pscale(pmul([-1, 1], [-A, 1]), p), pscale(pmul([0, 1], [-A, 1]), q)),
        pscale(pmul([0, 1], [-1, 1]), r),
    )
    # L[z^s] = z^(s-1) * [ s(s-1) second - s drift + K z^2 ]
    vec = padd(pscale(second, s * (s - 1)), pscale(drift, -s))
    vec = padd(vec, [0, 0, K])
    vec = vec + [0] * (3 - len(vec))
    return vec[2], vec[1], vec[0]  # onto z^(s+1), z^s, z^(s-1)


def check_band(band, p, q, r, K, A, smax=12):
    for s in range(smax + 1):
        c_s, ahat_s, b_sm1 = ode_entries(p, q, r, K, A, s)
        assert band.ahat(s) == ahat_s, (s, band.ahat(s), ahat_s)
        assert band.c(s) == c_s, (s, band.c(s), c_s)
        if s > 0:
            assert band.b(s - 1) == b_sm1, (s, band.b(s - 1), b_sm1)


def maps(params, t):
    m, n, k, sg = params.m, params.n, params.kappa, params.sigma
    return {
        "origin0": (H.band_origin0(params, t), (sg, m, n, k * (sg + m + n + 1 - k), t)),
        "origin1": (H.band_origin1(params, t), (m, sg, 2 * k - m - n - sg - 2, k * (k - n - 1), t)),
        "reflected": (H.band_origin1_reflected(params, t), (sg, m, 2 * k - m - n - sg - 2, k * (k - n - 1), 1 - t)),
        "quasi": (H.band_quasi_origin0(params, t), (-sg - 2, m, n, (k - sg - 1) * (m + n - k), t)),
    }


def main():
    rng = random.Random(20250819)
    for trial in range(200):
        m = rng.randint(1, 8)
        n = rng.randint(m, 8)
        k = rng.randint(0, (m + n) // 2)
        sg = F(rng.randint(-60, 60), rng.choice([2, 3, 5, 7, 16, 32]))
        if sg.denominator == 1:
            sg += F(1, 3)
        case = CaseTag.A if sg > -1 else CaseTag.B
        if case is CaseTag.B and not (sg + 1 >= k - F(m + n, 2)):
            continue
        params = NormalizedParams(m=m, n=n, kappa=k, sigma=sg, case=case)
        t = F(rng.randint(-40, 40), rng.randint(1, 9))
        for name, (band, pm) in maps(params, t).items():
            check_band(band, *pm)
    print("band closed forms match ODE expansion on 200 random draws")

    # frozen values for tests/test_heun.py
    q = normalize(AngleSet(F(65, 32), 4, 6, F(65, 32)))
    _, _, b1 = ode_entries(q.sigma, q.m, q.n, q.kappa * (q.sigma + q.m + q.n + 1 - q.kappa), F(1, 2), 2)
    print("origin0 superdiagonal b_1 at t=1/2:", b1)

    pmap = (q.m, q.sigma, 2 * q.kappa - q.m - q.n - q.sigma - 2, q.kappa * (q.kappa - q.n - 1), F(0))
    diag = [ode_entries(*pmap, s)[1] for s in range(4)]
    sub = [ode_entries(*pmap, s)[0] for s in range(3)]
    sup = [ode_entries(*pmap, s + 1)[2] for s in range(3)]
    print("origin1 window [0,3] entries at t=0: diag", diag, "sub", sub, "sup", sup)
    print("charpoly:", charpoly_tridiag(diag, sub=sub, sup=sup))
    print("diagonal (eigenvalues, since the superdiagonal vanishes at t=0):", diag)


if __name__ == "__main__":
    main()
