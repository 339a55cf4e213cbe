"""Heisenberg Fock characters and lattice (coset) characters.

A level-k Fock module attached to a lattice point lam contributes a single
finite torus weight k*iota(lam); its graded dimension over that weight is the
number of multipartitions into rank-many colours, and the whole tower sits at
the absolute q-offset k*(lam,lam)/2.  A lattice-coset character is the sum of
these towers over all points of the coset, re-normalized to start at q^0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .charring import QCharacter
from .rootsys import Coweight, OrbitCapExceeded, RootSystem

DEFAULT_POINT_CAP = 10**6


def multipartition_counts(colors: int, depth: int) -> list:
    """Coefficients of prod_{n>=1} (1-q^n)^(-colors) up to q^depth."""
    out = [1] + [0] * depth
    for n in range(1, depth + 1):
        for _ in range(colors):
            for d in range(n, depth + 1):
                out[d] += out[d - n]
    return out


def fock_character(rs: RootSystem, lam: Coweight, k: int, depth) -> QCharacter:
    """Level-k Fock tower over lam, truncated at absolute q-exponent ``depth``.

    All states share the finite weight k*iota(lam); the tower starts at
    q-offset k*(lam,lam)/2 and its graded multiplicities count rank-coloured
    multipartitions.  The result is always flagged truncated.
    """
    if k < 1:
        raise ValueError("level must be a positive integer")
    depth = Fraction(depth)
    offset = Fraction(k) * rs.coform(lam, lam) / 2
    wt = k * rs.iota(lam)
    span = depth - offset
    terms = []
    if span >= 0:
        counts = multipartition_counts(rs.rank, int(span))
        terms = [(wt, offset + d, c) for d, c in enumerate(counts)]
    return QCharacter(rs, k, terms, depth=depth, truncated=True)


@dataclass(frozen=True)
class LatticeCoset:
    """Coset shift + coroot lattice inside the coweight lattice of rs."""

    rs: RootSystem
    shift: Coweight

    def __post_init__(self):
        rs, shift = self.rs, self.shift
        if not rs.in_coweight_lattice(shift):
            raise ValueError("coset shift must lie in the coweight lattice")
        if rs.is_simply_laced():
            for beta in rs.positive_coroots:
                norm = rs.coform(beta, beta)
                assert norm.denominator == 1 and norm.numerator % 2 == 0

    def key(self):
        return self.rs.coset_key(self.shift)


def coset_points_up_to(rs: RootSystem, shift: Coweight, bound: Fraction,
                       cap: int = DEFAULT_POINT_CAP) -> list:
    """All lattice points shift + (coroot lattice) with (x,x)/2 <= bound.

    Box search over coroot coordinates with a Cauchy-Schwarz bound per
    coordinate; the quadratic form is evaluated in scaled integer arithmetic.
    """
    l = rs.rank
    gram = [[rs.coform(rs.simple_coroot(i), rs.simple_coroot(j))
             for j in range(1, l + 1)] for i in range(1, l + 1)]
    for row in gram:
        for x in row:
            assert x.denominator == 1
    gram = [[int(x) for x in row] for row in gram]
    from .rootsys import _invert_matrix
    graminv = _invert_matrix(gram)
    two_b = 2 * Fraction(bound)
    if two_b < 0:
        return []
    # common denominator for the shift so the form evaluates in integers
    s = 1
    for c in shift.coords:
        s = s * c.denominator // math.gcd(s, c.denominator)
    shift_int = [int(c * s) for c in shift.coords]
    limit_sq = [two_b * graminv[i][i] for i in range(l)]
    ranges = []
    for i in range(l):
        num = limit_sq[i]
        hi = math.isqrt(math.ceil(num)) + 1
        lo_i = math.ceil(-hi - Fraction(shift_int[i], s))
        hi_i = math.floor(hi - Fraction(shift_int[i], s))
        ranges.append(range(lo_i, hi_i + 1))
    out = []
    bound_scaled = two_b * s * s
    count = 0
    for combo in _iter_box(ranges):
        count += 1
        if count > cap:
            raise OrbitCapExceeded("lattice point enumeration exceeds cap of %d" % cap)
        x = [shift_int[i] + s * combo[i] for i in range(l)]
        val = 0
        for i in range(l):
            xi = x[i]
            if not xi:
                continue
            row = gram[i]
            val += xi * sum(row[j] * x[j] for j in range(l) if x[j])
        if val <= bound_scaled:
            out.append(Coweight(tuple(Fraction(xi, s) for xi in x)))
    out.sort(key=lambda c: c.coords)
    return out


def _iter_box(ranges):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _iter_box(ranges[1:]):
            yield (head,) + tail


def minimal_coset_norm_half(rs: RootSystem, shift: Coweight,
                            cap: int = DEFAULT_POINT_CAP) -> Fraction:
    """min (x,x)/2 over the coset; the shift itself bounds the search."""
    b0 = rs.coform(shift, shift) / 2
    pts = coset_points_up_to(rs, shift, b0, cap=cap)
    return min(rs.coform(x, x) / 2 for x in pts)


def lattice_character(coset: LatticeCoset, depth,
                      cap: int = DEFAULT_POINT_CAP) -> QCharacter:
    """Level-one character of the coset module: the sum of Fock towers over all
    coset points, normalized so the minimal q-exponent is 0 and complete
    through (normalized) depth ``depth``."""
    rs = coset.rs
    depth = Fraction(depth)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    base = minimal_coset_norm_half(rs, coset.shift, cap=cap)
    bound = depth + base
    acc = QCharacter(rs, 1, [], depth=bound, truncated=True)
    for pt in coset_points_up_to(rs, coset.shift, bound, cap=cap):
        acc = acc + fock_character(rs, pt, 1, bound)
    out = acc.normalized()
    # re-register the truncation boundary in normalized coordinates
    return QCharacter._raw(rs, 1, out._terms, depth, True)
