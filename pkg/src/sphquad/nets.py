"""Combinatorics of quadrilateral nets, independent of the analytic side.

The net of a spherical polygon is modelled on a disk: the polygon's corners
``a_0 .. a_{n-1}`` sit on the boundary circle at positions ``0 .. n-1`` and
side ``L_j`` spans positions ``(j-1, j)`` for ``j = 1 .. n`` (indices mod n).
An *arc* ``(i, j)`` joins corner ``a_i`` to an interior point of side ``L_j``;
with a distinguished index ``k`` it is of the first kind when ``0 < i < k <
j <= n`` and of the second kind when ``0 < j <= k < i < n``.  An ``(n,
k)``-type is an ordered multiset of such arcs; it is valid when no two arcs
are forced to cross, i.e. when every two arcs with distinct endpoints can be
drawn disjointly in the disk.  Two arcs are forced to cross exactly when
their endpoint chords strictly interleave on the boundary circle.

A valid type carries at most ``n-2`` arcs; the ones attaining the bound
(maximal types) are generated from tagged compositions of ``n-2``
(:class:`IJSequence`): each group peels off a fan of arcs emanating from the
corner that is currently extreme on one side (tag ``I``) or on the other
(tag ``J``), and the arcs are recorded in the canonical interior order,
starting with the arc closest to the base corner ``a_0``.  The number of
maximal types satisfies the recurrence implemented in :func:`count_maximal`.

The second half of the module counts combinatorial classes of quadrilaterals
with exactly two non-integer angles directly from their corner orders
``A0..A3`` (:class:`sphquad.params.CornerOrders`):

* adjacent non-integer corners: closed-form counts (:func:`count_adjacent`)
  and a brute-force enumerator over the three block-decomposition families
  (:func:`enumerate_quad_classes_adjacent`) that must agree;
* opposite non-integer corners: quadrilaterals are grouped into chains
  (paths of classes linked by corner-to-vertex degenerations).  Chains whose
  both ends degenerate towards modulus 0 (``aa``) are counted by
  :func:`count_aa_chains`, each being represented by a unique distinguished
  class of the ``U`` family (:func:`enumerate_aa_classes`); the remaining
  ``ab`` chains follow by subtraction from the analytic total
  (:func:`count_ab_chains`).

Only the ``U`` family of :class:`QuadClass` has order formulas implemented;
the other families participate in validation but their enumeration is not
needed for any count produced here.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .params import CornerOrders, NotRealizable, floor_int

__all__ = [
    "NegativeCount",
    "NKType",
    "IJSequence",
    "QuadClass",
    "CornerOrderMap",
    "arcs_forced_cross",
    "validate_type",
    "ij_sequences",
    "build_type",
    "enumerate_maximal_types",
    "count_maximal",
    "gf_coefficient",
    "count_lemma_solutions",
    "count_adjacent",
    "count_aa_chains",
    "count_ab_chains",
    "enumerate_quad_classes_adjacent",
    "enumerate_aa_classes",
]

logger = logging.getLogger(__name__)

# The corner-order record lives in params (it is produced from angle sets);
# this alias names its role on the combinatorial side.
CornerOrderMap = CornerOrders


class NegativeCount(ValueError):
    """A subtraction count came out negative: the inputs are inconsistent."""


# ---------------------------------------------------------------------------
# (n, k)-types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NKType:
    """An ordered multiset of corner-to-side arcs on ``n`` boundary positions.

    ``pairs`` holds ``(i, j, multiplicity)`` entries in canonical interior
    order; consecutive copies of the same arc are merged into one entry.
    """

    n: int
    k: int
    pairs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 2):
            raise ValueError("need an integer n >= 2")
        if not (isinstance(self.k, int) and 0 < self.k < self.n):
            raise ValueError("need an integer 0 < k < n")
        for entry in self.pairs:
            if len(entry) != 3 or not all(isinstance(v, int) for v in entry):
                raise ValueError("pairs must be (i, j, multiplicity) integer triples")
            if entry[2] < 1:
                raise ValueError("arc multiplicities must be >= 1")

    @classmethod
    def from_arcs(cls, n: int, k: int, arcs) -> "NKType":
        """Build a type from a plain arc sequence, merging consecutive repeats."""
        merged: list[list[int]] = []
        for i, j in arcs:
            if merged and merged[-1][0] == i and merged[-1][1] == j:
                merged[-1][2] += 1
            else:
                merged.append([i, j, 1])
        return cls(n, k, tuple((i, j, m) for i, j, m in merged))

    @property
    def arc_count(self) -> int:
        """Total number of arcs, counted with multiplicity."""
        return sum(mult for _, _, mult in self.pairs)

    def arcs(self) -> list[tuple[int, int]]:
        """The arc sequence with multiplicities expanded."""
        return [(i, j) for i, j, mult in self.pairs for _ in range(mult)]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "pairs": [[i, j, m] for i, j, m in self.pairs]}


def arcs_forced_cross(n: int, first: tuple[int, int], second: tuple[int, int]) -> bool:
    """Whether two arcs must cross however they are drawn in the disk.

    Arc ``(i, j)`` is represented by the chord from boundary position ``i``
    (corner) to position ``j - 1/2`` (midpoint of side ``L_j``).  Arcs
    sharing a corner or a side can always be drawn nested, so only chords
    with four distinct endpoints are tested; those cross exactly when the
    endpoints interleave.  Positions are doubled to stay in integers.
    """
    i0, j0 = first
    i1, j1 = second
    if i0 % n == i1 % n or j0 % n == j1 % n:
        return False
    size = 2 * n
    a, b = (2 * i0) % size, (2 * j0 - 1) % size
    c, d = (2 * i1) % size, (2 * j1 - 1) % size
    span = (b - a) % size

    def inside(x: int) -> bool:
        return 0 < (x - a) % size < span

    return inside(c) != inside(d)


def validate_type(t: NKType) -> bool:
    """Whether every arc is in range and no two arcs are forced to cross.

    These conditions are necessary for a type to be the net of an actual
    quadrilateral, and the maximal-type generator only emits types passing
    them; they are not claimed to be sufficient on their own.
    """
    for i, j, mult in t.pairs:
        if mult < 1:
            return False
        first_kind = 0 < i < t.k < j <= t.n
        second_kind = 0 < j <= t.k < i < t.n
        if not (first_kind or second_kind):
            return False
    if t.arc_count > t.n - 2:
        return False
    flat = [(i, j) for i, j, _ in t.pairs]
    for (a0, a1) in itertools.combinations(flat, 2):
        if arcs_forced_cross(t.n, a0, a1):
            return False
    return True


# ---------------------------------------------------------------------------
# Maximal types: tagged compositions and their realization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IJSequence:
    """A composition into positive groups, each tagged ``"I"`` or ``"J"``."""

    groups: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for tag, size in self.groups:
            if tag not in ("I", "J"):
                raise ValueError("group tags must be 'I' or 'J'")
            if not (isinstance(size, int) and size >= 1):
                raise ValueError("group sizes must be positive integers")

    @property
    def total(self) -> int:
        return sum(size for _, size in self.groups)

    def tag_count(self, tag: str) -> int:
        return sum(1 for t, _ in self.groups if t == tag)

    def fits(self, n: int, k: int) -> bool:
        """Format constraints for an (n, k)-type encoding."""
        return (
            self.total == n - 2
            and self.tag_count("I") < k
            and self.tag_count("J") < n - k
        )


def _compositions(total: int):
    """All ordered tuples of positive integers with the given sum."""
    if total == 0:
        yield ()
        return
    for cuts in itertools.product((False, True), repeat=total - 1):
        parts = []
        size = 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def ij_sequences(n: int, k: int) -> list[IJSequence]:
    """All tagged compositions satisfying the (n, k) format constraints."""
    if n < 2 or not 0 < k < n:
        raise ValueError("need n >= 2 and 0 < k < n")
    out = []
    for parts in _compositions(n - 2):
        for tags in itertools.product("IJ", repeat=len(parts)):
            seq = IJSequence(tuple(zip(tags, parts)))
            if seq.fits(n, k):
                out.append(seq)
    return out


def build_type(n: int, k: int, seq: IJSequence) -> NKType | None:
    """Realize a tagged composition as a maximal type, or ``None``.

    The state keeps the current reduced size ``(N, K)`` together with label
    maps sending current corner and side indices back to the original ones.
    An ``I`` group of size ``s`` fans ``s`` arcs from the current corner 1 to
    the last ``s`` sides; a ``J`` group fans ``s`` arcs from the current
    corner ``N-1`` to the first ``s`` sides.  A group is admissible only
    while the fan stays clear of the distinguished index, and the encoding
    succeeds when the reduction ends at ``K == 1``.  Arcs are emitted in
    canonical interior order.
    """
    N, K = n, k
    cmap = list(range(N + 1))
    smap = list(range(N + 1))
    arcs: list[tuple[int, int]] = []
    for tag, s in seq.groups:
        if tag == "I":
            if not (K >= 2 and N - s + 1 > K):
                return None
            for j in range(N, N - s, -1):
                arcs.append((cmap[1], smap[j]))
            cmap = [0] + [cmap[i + 1] for i in range(1, N - s + 1)]
            smap = [0] + [smap[j + 1] for j in range(1, N - s + 1)]
            N, K = N - s, K - 1
        else:
            if not (s <= K and N - 1 > K):
                return None
            for j in range(1, s + 1):
                arcs.append((cmap[N - 1], smap[j]))
            cmap = [0] + [cmap[i + s - 1] for i in range(1, N - s + 1)]
            smap = [0] + [smap[j + s - 1] for j in range(1, N - s + 1)]
            N, K = N - s, K - s + 1
    if K != 1:
        return None
    return NKType.from_arcs(n, k, arcs)


def enumerate_maximal_types(n: int, k: int) -> list[NKType]:
    """All maximal (n, k)-types (exactly ``n-2`` arcs), deduplicated."""
    found: dict[tuple, NKType] = {}
    for seq in ij_sequences(n, k):
        t = build_type(n, k, seq)
        if t is not None and validate_type(t) and t.pairs not in found:
            found[t.pairs] = t
    return sorted(found.values(), key=lambda t: t.pairs)


@functools.cache
def count_maximal(n: int, k: int) -> int:
    """Number of maximal (n, k)-types by the peeling recurrence.

    ``M(n,k) = sum_{m=1}^{k} M(n-m, k-m+1) + sum_{m=1}^{n-k} M(n-m, n-k-m+1)``
    with base ``M(2,1) = 1``; out-of-range terms (``n' < 2``, ``k' <= 0`` or
    ``k' >= n'``) contribute 0.
    """
    if n == 2 and k == 1:
        return 1
    if n < 2 or k <= 0 or k >= n:
        return 0
    total = 0
    for m in range(1, k + 1):
        total += count_maximal(n - m, k - m + 1)
    for m in range(1, n - k + 1):
        total += count_maximal(n - m, n - k - m + 1)
    return total


def gf_coefficient(k: int, l: int) -> int:
    """Coefficient of ``x^k y^l`` in the closed-form generating function

        (1-x)(1-y) / ((1-x)(1-y) - x(1-y) - y(1-x)).

    The raw series coefficient is returned as is.  It does not always agree
    with :func:`count_maximal` under the indexing ``M(k+l, k)`` — already at
    ``(1, 1)`` the series gives 2 while ``M(2, 1) = 1`` — so disagreements
    are logged for inspection rather than corrected.
    """
    if k < 0 or l < 0:
        raise ValueError("need k >= 0 and l >= 0")
    # numerator 1 - x - y + xy; denominator 1 - 2x - 2y + 3xy
    table = [[0] * (l + 1) for _ in range(k + 1)]
    for i in range(k + 1):
        for j in range(l + 1):
            num = (1, -1, -1, 1)[(i > 0) + 2 * (j > 0)] if i <= 1 and j <= 1 else 0
            acc = num
            if i > 0:
                acc += 2 * table[i - 1][j]
            if j > 0:
                acc += 2 * table[i][j - 1]
            if i > 0 and j > 0:
                acc -= 3 * table[i - 1][j - 1]
            table[i][j] = acc
    raw = table[k][l]
    if k >= 1 and l >= 1:
        recurrence = count_maximal(k + l, k)
        if raw != recurrence:
            logger.info(
                "generating-function coefficient (%d,%d) = %d differs from "
                "recurrence count M(%d,%d) = %d",
                k, l, raw, k + l, k, recurrence,
            )
    return raw


# ---------------------------------------------------------------------------
# Counting lemma
# ---------------------------------------------------------------------------

def count_lemma_solutions(p: int, q: int, r: int, s: int) -> int:
    """Positive solutions (x, y, z, t) of the cyclic side-sharing system

        x + y = p + 1,  y + z = q + 1,  z + t = r + 1,  t + x = s + 1,

    which requires ``p + r == q + s`` and then has exactly ``min(p, q, r,
    s)`` solutions.
    """
    if min(p, q, r, s) < 1:
        raise ValueError("need positive p, q, r, s")
    if p + r != q + s:
        raise ValueError("need p + r == q + s")
    return min(p, q, r, s)


# ---------------------------------------------------------------------------
# Adjacent non-integer corners: closed count and family enumeration
# ---------------------------------------------------------------------------

def count_adjacent(orders: CornerOrders, same_vertex: bool = False) -> int:
    """Number of combinatorial classes of quadrilaterals with adjacent
    non-integer corners and the given corner orders.

    With the two non-integer corners developing to distinct intersection
    points, realizability needs ``rho`` a positive integer and the count is
    ``min(A2, A3, rho)``.  With both developing to the same point it needs
    ``sigma_net - 1`` positive and non-integer, and the count is ``min(A2,
    A3, [sigma_net])``.
    """
    if orders.A2 <= 0 or orders.A3 <= 0:
        raise ValueError("adjacent counting needs A2 > 0 and A3 > 0")
    if same_vertex:
        sig = orders.sigma_net
        if sig.denominator == 1:
            raise NotRealizable("same-vertex classes need sigma_net non-integer")
        if sig <= 1:
            raise NotRealizable("same-vertex classes need sigma_net > 1")
        return min(orders.A2, orders.A3, floor_int(sig))
    rho = orders.rho
    if rho.denominator != 1:
        raise NotRealizable("distinct-vertex classes need rho integral")
    if rho <= 0:
        raise NotRealizable("distinct-vertex classes need rho > 0")
    return min(orders.A2, orders.A3, int(rho))


def enumerate_quad_classes_adjacent(orders: CornerOrders) -> list[tuple]:
    """Brute-force solutions of the three block-decomposition families.

    Every class decomposes into an irreducible core plus digons, in one of
    three ways; solving the corner-order equations for each family gives
    parameter tuples

    * ``("a", i, j, k, l, m, mu)`` with ``A0 = i+m``, ``A1 = i+j+k+1``,
      ``A2 = k+l+1``, ``A3 = j+l+m+mu+2`` and ``i > 0`` only if ``mu = 0``;
    * ``("b", i, j, k, l, m, mu)``: the mirror of family "a", with the same
      equations after swapping ``A0 <-> A1`` and ``A2 <-> A3``;
    * ``("c", i, k, l, m, mu, nu)`` with ``A0 = i+m``, ``A1 = i+k``,
      ``A2 = k+l+nu+1``, ``A3 = l+m+mu+1`` and ``i > 0`` only if
      ``mu = nu = 0``.

    The list length equals :func:`count_adjacent` whenever the orders are
    realizable, and is empty otherwise.
    """
    a0, a1, a2, a3 = orders.as_tuple()
    out: list[tuple] = []
    for swap in (False, True):
        A0, A1, A2, A3 = (a1, a0, a3, a2) if swap else (a0, a1, a2, a3)
        for i in range(A0 + 1):
            m = A0 - i
            for j in range(A1 - i):
                k = A1 - 1 - i - j
                l = A2 - 1 - k
                if l < 0:
                    continue
                mu = A3 - 2 - j - l - m
                if mu < 0 or (i > 0 and mu != 0):
                    continue
                out.append(("b" if swap else "a", i, j, k, l, m, mu))
    for i in range(min(a0, a1) + 1):
        m = a0 - i
        k = a1 - i
        for l in range(a2 - k):
            nu = a2 - 1 - k - l
            mu = a3 - 1 - l - m
            if mu < 0 or (i > 0 and (mu or nu)):
                continue
            out.append(("c", i, k, l, m, mu, nu))
    return out


# ---------------------------------------------------------------------------
# Opposite non-integer corners: quadrilateral classes and chain counts
# ---------------------------------------------------------------------------

_FAMILIES = ("U", "Ubar", "X", "Xbar", "TNabla", "TT", "TTbar")

# digon slot (into (i, k, l, m)) -> angle parameter it constrains, and the
# largest value that parameter may take while the slot is occupied: a digon
# on a side bordering a triangular block collapses into the block unless the
# block's index is small enough.
_ATTACHMENT_RULES: dict[str, tuple[tuple[int, str, int], ...]] = {
    "U": ((0, "mu", 1), (2, "nu", 1)),
    "Ubar": ((1, "nu", 1), (3, "mu", 1)),
    "X": ((0, "mu", 1), (1, "nu", 1)),
    "Xbar": ((2, "nu", 1), (3, "mu", 1)),
    "TNabla": (),
    "TT": ((0, "mu", 0), (1, "nu", 0)),
    "TTbar": ((3, "mu", 0), (2, "nu", 0)),
}


@dataclass(frozen=True)
class QuadClass:
    """A combinatorial class of quadrilaterals with opposite non-integer
    corners: an irreducible core of one of seven families, ``kappa``
    pseudo-diagonals, and digons ``(i, k, l, m)`` attached to sides
    ``L1..L4``."""

    family: str
    mu: int
    nu: int
    kappa: int
    digons: tuple[int, int, int, int]

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        values = (self.mu, self.nu, self.kappa, *self.digons)
        if len(self.digons) != 4 or not all(isinstance(v, int) and v >= 0 for v in values):
            raise ValueError("mu, nu, kappa and the four digon counts must be >= 0")
        for slot, name, bound in _ATTACHMENT_RULES[self.family]:
            if self.digons[slot] > 0 and getattr(self, name) > bound:
                raise ValueError(
                    f"family {self.family}: digon slot {slot} occupied needs {name} <= {bound}"
                )

    def corner_orders(self) -> CornerOrders:
        """Corner orders ``A0..A3``; implemented for the ``U`` family only."""
        if self.family != "U":
            raise NotImplementedError("corner orders are only derived for the U family")
        i, k, l, m = self.digons
        return CornerOrders(
            A0=i + m,
            A1=i + k + self.nu + 2 * self.kappa + 1,
            A2=k + l,
            A3=l + m + self.mu + 2 * self.kappa + 1,
        )

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "mu": self.mu,
            "nu": self.nu,
            "kappa": self.kappa,
            "digons": list(self.digons),
        }


def enumerate_aa_classes(orders: CornerOrders) -> list[QuadClass]:
    """The distinguished ``U``-family classes with the given corner orders.

    A chain degenerates towards modulus 0 at both ends exactly when it
    contains a class of the ``U`` family with ``mu >= 1``, ``nu >= 1`` and
    ``min(i, l) = 0``, and it contains exactly one such class, so this list
    has one entry per aa-chain and its length equals
    :func:`count_aa_chains`.
    """
    A0, A1, A2, A3 = orders.as_tuple()
    out: list[QuadClass] = []
    for i in range(A0 + 1):
        m = A0 - i
        for k in range(A2 + 1):
            l = A2 - k
            if i > 0 and l > 0:
                continue
            top = A1 - i - k - 2
            for kappa in range(top // 2 + 1 if top >= 0 else 0):
                nu = A1 - i - k - 2 * kappa - 1
                mu = A3 - l - m - 2 * kappa - 1
                if mu < 1 or nu < 1:
                    continue
                if (i > 0 and mu != 1) or (l > 0 and nu != 1):
                    continue
                out.append(QuadClass("U", mu, nu, kappa, (i, k, l, m)))
    return out


def count_aa_chains(orders: CornerOrders) -> int:
    """Closed-form count of chains degenerating to modulus 0 at both ends:
    ``[min(A1, A3, delta) / 2]`` with ``delta = max(0, (A1+A3-A0-A2)/2)``."""
    delta = max(Fraction(0), orders.delta)
    cut = min(Fraction(orders.A1), Fraction(orders.A3), delta)
    return floor_int(cut / 2)


def count_ab_chains(orders: CornerOrders, total: int) -> int:
    """Chains with one end at each modulus limit: ``total - 2 * aa``.

    ``total`` is the analytic class count ``min(alpha1, alpha2, kappa+1)``
    for the angle set behind the orders; each aa-chain and its mirror use up
    two of those classes, the rest are ab-chains.
    """
    ab = total - 2 * count_aa_chains(orders)
    if ab < 0:
        raise NegativeCount(
            f"total {total} cannot cover twice the aa-chain count; orders {orders.as_tuple()}"
        )
    return ab
