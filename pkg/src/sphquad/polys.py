"""Dense univariate polynomial arithmetic over an exact or floating field.

Polynomials are plain Python lists of coefficients in ascending order
(``cs[i]`` multiplies ``x**i``), with no trailing zero coefficients; the
zero polynomial is the empty list.  All routines are generic over the
coefficient type: ``fractions.Fraction`` gives exact arithmetic, ``float``
gives double precision, and :class:`PolyMod` elements give arithmetic in a
quotient ring.  Only the Sturm-sequence routines insist on exact
coefficients — sign counting over floats is meaningless.

Examples
--------
>>> from fractions import Fraction as F
>>> p = [F(-1), F(0), F(1)]          # x**2 - 1
>>> peval(p, F(3))
Fraction(8, 1)
>>> count_real_roots(p)
2
>>> pdivmod(p, [F(-1), F(1)])        # (x**2-1) = (x+1)(x-1)
([Fraction(1, 1), Fraction(1, 1)], [])
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def ptrim(cs: Sequence) -> list:
    """Drop trailing zero coefficients (exact comparison with 0)."""
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def pdeg(cs: Sequence) -> int:
    """Degree of a trimmed polynomial; the zero polynomial has degree -1."""
    return len(cs) - 1


def padd(f: Sequence, g: Sequence) -> list:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(a + b)
    return ptrim(out)


def pneg(f: Sequence) -> list:
    return [-a for a in f]


def psub(f: Sequence, g: Sequence) -> list:
    return padd(f, pneg(g))


def pscale(f: Sequence, c) -> list:
    if c == 0:
        return []
    return ptrim([a * c for a in f])


def pmul(f: Sequence, g: Sequence) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return ptrim(out)


def peval(f: Sequence, x):
    """Evaluate by Horner's rule.  Returns 0 for the zero polynomial."""
    acc = 0
    for c in reversed(list(f)):
        acc = acc * x + c
    return acc


def pderiv(f: Sequence) -> list:
    return ptrim([i * f[i] for i in range(1, len(f))])


def pmonic(f: Sequence) -> list:
    f = ptrim(f)
    if not f:
        return f
    lc = f[-1]
    if lc == 1:
        return list(f)
    return [_exact_div(c, lc) for c in f]


def _exact_div(a, b):
    # int/int true division would silently produce float; keep it rational
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a / b


def pdivmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    """Euclidean division ``num = q*den + r`` with deg r < deg den.

    Coefficients must support exact division (Fraction or float); raises
    ZeroDivisionError on a zero divisor.
    """
    den = ptrim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(ptrim(num))
    dd = len(den) - 1
    lc = den[-1]
    if len(rem) - 1 < dd:
        return [], rem
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = _exact_div(rem[i], lc)
        quot[i - dd] = c
        if c != 0:
            for j in range(dd + 1):
                rem[i - dd + j] = rem[i - dd + j] - c * den[j]
    return ptrim(quot), ptrim(rem)


def pdivides(den: Sequence, num: Sequence) -> bool:
    """True iff ``den`` divides ``num`` exactly (zero remainder)."""
    _, r = pdivmod(num, den)
    return not r


def pgcd(f: Sequence, g: Sequence) -> list:
    """Monic gcd over a field (use with exact coefficients only)."""
    a, b = ptrim(f), ptrim(g)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def psquarefree(f: Sequence) -> list:
    """The squarefree part f / gcd(f, f')."""
    f = ptrim(f)
    if pdeg(f) <= 0:
        return list(f)
    g = pgcd(f, pderiv(f))
    if pdeg(g) == 0:
        return list(f)
    q, _ = pdivmod(f, g)
    return q


def is_squarefree(f: Sequence) -> bool:
    return pdeg(pgcd(f, pderiv(f))) == 0


def squarefree_decomposition(f: Sequence) -> list[tuple[list, int]]:
    """Yun's algorithm: return [(g_i, i)] with f = lc * prod g_i**i, g_i squarefree.

    Only nontrivial factors (deg >= 1) are listed.
    """
    f = pmonic(f)
    if pdeg(f) <= 0:
        return []
    out = []
    df = pderiv(f)
    a = pgcd(f, df)
    b = pdivmod(f, a)[0]
    c = pdivmod(df, a)[0]
    d = psub(c, pderiv(b))
    i = 1
    while pdeg(b) > 0:
        g = pgcd(b, d)
        if pdeg(g) > 0:
            out.append((g, i))
        b2 = pdivmod(b, g)[0]
        c2 = pdivmod(d, g)[0]
        b, c = b2, c2
        d = psub(c, pderiv(b))
        i += 1
    return out


def taylor_shift(f: Sequence, h) -> list:
    """Return the coefficient list of f(x + h) (synthetic Horner shift)."""
    out = list(ptrim(f))
    n = len(out)
    if n == 0 or h == 0:
        return out
    # repeated synthetic division by (x - (-h))
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + h * out[j + 1]
    return ptrim(out)


def pscale_var(f: Sequence, u) -> list:
    """Return the coefficient list of f(u*x)."""
    out = []
    uk = 1
    for c in ptrim(f):
        out.append(c * uk)
        uk = uk * u
    return ptrim(out)


def charpoly_tridiag(diag: Sequence, sub: Sequence, sup: Sequence) -> list:
    """Monic characteristic polynomial det(x*I - J) of a tridiagonal matrix.

    ``diag`` has length d+1, ``sub`` and ``sup`` length d (sub[j] sits below
    the diagonal at row j+1, sup[j] above it at row j).  Uses the classical
    three-term recurrence on leading principal minors,

        p_k(x) = (x - diag[k-1]) p_{k-1}(x) - sub[k-2]*sup[k-2] p_{k-2}(x),

    carried out in coefficient space, so it is exact over Fraction.
    """
    d1 = len(diag)
    if len(sub) != d1 - 1 or len(sup) != d1 - 1:
        raise ValueError("off-diagonal length must be len(diag) - 1")
    prev: list = [1]
    if d1 == 0:
        return prev
    cur = [-diag[0], 1]
    for k in range(1, d1):
        term = pmul([-diag[k], 1], cur)
        w = sub[k - 1] * sup[k - 1]
        nxt = psub(term, pscale(prev, w))
        prev, cur = cur, nxt
    return cur


# ---------------------------------------------------------------------------
# Sturm sequences (exact coefficients only)
# ---------------------------------------------------------------------------

def sturm_chain(f: Sequence) -> list[list]:
    """Canonical Sturm chain [f, f', -rem(f, f'), ...]."""
    f = ptrim(f)
    chain = [list(f)]
    if pdeg(f) < 1:
        return chain
    chain.append(pderiv(f))
    while pdeg(chain[-1]) >= 0:
        r = pdivmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append(pneg(r))
    return chain


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _variations(signs: list[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


def sign_variations_at(chain: list[list], x) -> int:
    return _variations([_sign(peval(p, x)) for p in chain])


def sign_variations_at_inf(chain: list[list], positive: bool) -> int:
    signs = []
    for p in chain:
        if not p:
            signs.append(0)
            continue
        s = _sign(p[-1])
        if not positive and (pdeg(p) % 2 == 1):
            s = -s
        signs.append(s)
    return _variations(signs)


def count_real_roots_interval(f: Sequence, lo=None, hi=None) -> int:
    """Number of distinct real roots of f in (lo, hi]; None means +-infinity.

    f need not be squarefree — the chain's gcd structure handles
    multiplicities, counting each distinct root once.
    """
    f = ptrim(f)
    if pdeg(f) < 1:
        return 0
    chain = sturm_chain(f)
    va = sign_variations_at(chain, lo) if lo is not None else sign_variations_at_inf(chain, False)
    vb = sign_variations_at(chain, hi) if hi is not None else sign_variations_at_inf(chain, True)
    return va - vb


def count_real_roots(f: Sequence) -> int:
    """Number of distinct real roots of f over the whole real line."""
    return count_real_roots_interval(f, None, None)


def cauchy_root_bound(f: Sequence) -> Fraction:
    """A bound B with all real roots of f in [-B, B]."""
    f = ptrim(f)
    if pdeg(f) < 1:
        return Fraction(1)
    lc = abs(f[-1])
    m = max(abs(c) for c in f[:-1]) if len(f) > 1 else 0
    return 1 + Fraction(m) / Fraction(lc)


def isolate_real_roots(f: Sequence) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (lo, hi], one per distinct real root of f."""
    f = psquarefree(ptrim(f))
    total = count_real_roots(f)
    if total == 0:
        return []
    chain = sturm_chain(f)
    bound = cauchy_root_bound(f)
    lo, hi = -bound - 1, bound

    def var(x):
        return sign_variations_at(chain, x)

    out: list[tuple[Fraction, Fraction]] = []
    stack = [(Fraction(lo), Fraction(hi), var(lo), var(hi))]
    while stack:
        a, b, va, vb = stack.pop()
        nroots = va - vb
        if nroots == 0:
            continue
        if nroots == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        vm = var(mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    out.sort()
    return out


def refine_root(f: Sequence, lo: Fraction, hi: Fraction, eps: Fraction) -> Fraction:
    """Bisect the isolating interval (lo, hi] of squarefree f to width < eps."""
    flo = peval(f, lo)
    if flo == 0:
        # roots live in half-open intervals, but guard the endpoint anyway
        return lo
    while hi - lo >= eps:
        mid = (lo + hi) / 2
        fm = peval(f, mid)
        if fm == 0:
            return mid
        if _sign(fm) == _sign(flo):
            lo = mid
            flo = fm
        else:
            hi = mid
    return (lo + hi) / 2


def real_roots_exact(f: Sequence, eps: Fraction = Fraction(1, 10**24)) -> list[tuple[Fraction, int]]:
    """Sorted (approximation, multiplicity) pairs for the real roots of f.

    Approximations are rational midpoints of bisected isolating intervals
    with width < eps; multiplicities come from the squarefree decomposition.
    """
    roots: list[tuple[Fraction, int]] = []
    for g, mult in squarefree_decomposition(f):
        for lo, hi in isolate_real_roots(g):
            roots.append((refine_root(g, lo, hi, eps), mult))
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# Quotient-ring elements Q[x]/(F)
# ---------------------------------------------------------------------------

class PolyMod:
    """An element of Q[x]/(F) for a fixed monic squarefree modulus F.

    Supports ring operations and division by plain scalars, which is all the
    three-term recurrences need.  Two elements interoperate only when they
    share the same modulus.

    >>> from fractions import Fraction as F
    >>> mod = [F(-2), F(0), F(1)]      # x**2 - 2
    >>> x = PolyMod.generator(mod)
    >>> (x * x - 2).is_zero()
    True
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, coeffs: Sequence, modulus: Sequence):
        self.modulus = tuple(modulus)
        cs = ptrim(coeffs)
        if pdeg(cs) >= pdeg(list(modulus)):
            cs = pdivmod(cs, list(modulus))[1]
        self.coeffs = tuple(cs)

    @classmethod
    def generator(cls, modulus: Sequence) -> "PolyMod":
        return cls([0, 1], modulus)

    @classmethod
    def const(cls, modulus: Sequence, c) -> "PolyMod":
        return cls([c], modulus)

    def _coerce(self, other) -> "PolyMod":
        if isinstance(other, PolyMod):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other
        return PolyMod([other], self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return PolyMod(padd(list(self.coeffs), list(o.coeffs)), self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return PolyMod(pneg(list(self.coeffs)), self.modulus)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        return PolyMod(pmul(list(self.coeffs), list(o.coeffs)), self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PolyMod):
            raise TypeError("PolyMod division is restricted to scalar divisors")
        return PolyMod([_exact_div(c, other) for c in self.coeffs], self.modulus)

    def __eq__(self, other):
        if isinstance(other, PolyMod):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        return self.coeffs == tuple(ptrim([other]))

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        return f"PolyMod({list(self.coeffs)!r} mod deg{pdeg(list(self.modulus))})"
