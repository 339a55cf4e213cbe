"""Finite crystallographic root systems with exact rational arithmetic.

Conventions: roots (checked symbols in the classical literature) live on the
weight side and coroots on the coweight side.  The invariant form on the
weight side is normalized so long roots have squared length 2; the map
``iota`` sends a coroot a to 2*(root of a)/(root norm).  Dynkin diagrams are
labelled following Bourbaki (Plates I-IX); for the E series the chain is
1-3-4-5-6(-7-8) with node 2 attached to node 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

_VALID_RANKS = {
    "A": lambda l: l >= 1,
    "B": lambda l: l >= 2,
    "C": lambda l: l >= 2,
    "D": lambda l: l >= 3,
    "E": lambda l: l in (6, 7, 8),
    "F": lambda l: l == 4,
    "G": lambda l: l == 2,
}

DEFAULT_ORBIT_CAP = 10**6


class OrbitCapExceeded(RuntimeError):
    """A Weyl-orbit or lattice enumeration grew past its configured cap."""


def _frac_tuple(coords) -> tuple:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class Weight:
    """Vector on the root side, stored in simple-root coordinates."""

    coords: tuple

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, c):
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True)
class Coweight:
    """Vector on the coroot side, stored in simple-coroot coordinates."""

    coords: tuple

    def __add__(self, other):
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Coweight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Coweight(tuple(-a for a in self.coords))

    def __mul__(self, c):
        c = Fraction(c)
        return Coweight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


def weight(coords) -> Weight:
    return Weight(_frac_tuple(coords))


def coweight(coords) -> Coweight:
    return Coweight(_frac_tuple(coords))


def _invert_matrix(mat):
    # Gauss-Jordan over Fraction; mat is square and invertible here.
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _cartan_matrix(type_label: str, rank: int):
    """Entries cartan[i][j] = <alpha_i, alpha-check_j> (coroot i on root j), 0-based."""
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2

    def bond(i, j):
        a[i][j] = -1
        a[j][i] = -1

    if type_label in ("A", "B", "C"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if type_label == "B" and rank >= 2:
            # last root short: coroot of the long neighbour pairs to -1, short coroot to -2
            a[rank - 1][rank - 2] = -2
        if type_label == "C" and rank >= 2:
            a[rank - 2][rank - 1] = -2
    elif type_label == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif type_label == "E":
        # Bourbaki: chain 1-3-4-5-...-rank, node 2 attached to node 4
        chain = [0] + list(range(2, rank))
        for x, y in zip(chain, chain[1:]):
            bond(x, y)
        bond(1, 3)
    elif type_label == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        a[2][1] = -2  # roots 3,4 short
    elif type_label == "G":
        a[0][1] = -3  # root 1 short
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


class RootSystem:
    """Cartan datum of a simple type, with roots generated by reflection closure.

    Stores simple roots/coroots, the full set of positive roots with their
    coroots, the normalized invariant form, fundamental (co)weights, the
    highest root and its coroot, the fundamental group of the adjoint form
    and the longest Weyl element.
    """

    def __init__(self, type_label: str, rank: int):
        type_label = str(type_label).upper()
        if type_label not in _VALID_RANKS:
            raise ValueError("unknown simple type %r (expected one of A-G)" % type_label)
        if not isinstance(rank, int) or not _VALID_RANKS[type_label](rank):
            raise ValueError("invalid rank %r for type %s" % (rank, type_label))
        self.type_label = type_label
        self.rank = rank
        self.cartan = _cartan_matrix(type_label, rank)
        self._cartan_inv = _invert_matrix(self.cartan)
        self.root_norm_halves = self._symmetrize()  # d_i = (root_i, root_i)*/2
        self._generate_roots()
        self._build_fundamental()
        self._build_pi1()
        self._build_scalings()
        self.longest_word = self._longest_element_word()
        self._weyl_cache = None

    # -- construction ---------------------------------------------------

    def _symmetrize(self):
        # propagate d over the Dynkin graph so that d_i * A[i][j] = d_j * A[j][i],
        # then rescale so max d = 1 (long roots get squared length 2)
        l = self.rank
        d = [None] * l
        d[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(l):
                if i != j and self.cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(self.cartan[i][j], self.cartan[j][i])
                    todo.append(j)
        top = max(d)
        d = tuple(x / top for x in d)
        for i in range(l):
            for j in range(l):
                assert d[i] * self.cartan[i][j] == d[j] * self.cartan[j][i]
        return d

    def _generate_roots(self):
        l = self.rank
        simple_pairs = []
        for i in range(l):
            root = tuple(Fraction(int(j == i)) for j in range(l))
            coroot = tuple(Fraction(int(j == i)) for j in range(l))
            simple_pairs.append((root, coroot))
        seen = dict(simple_pairs)
        queue = list(simple_pairs)
        while queue:
            root, coroot = queue.pop()
            for i in range(l):
                r2 = self._reflect_root_coords(i, root)
                if r2 not in seen:
                    c2 = self._reflect_coroot_coords(i, coroot)
                    seen[r2] = c2
                    queue.append((r2, c2))
        pos = sorted(r for r in seen if all(c >= 0 for c in r))
        assert 2 * len(pos) == len(seen)
        self._coroot_of = {Weight(r): Coweight(seen[r]) for r in pos}
        self.positive_roots = tuple(sorted(self._coroot_of, key=lambda w: w.coords))
        self.positive_coroots = tuple(self._coroot_of[r] for r in self.positive_roots)
        by_height = max(self.positive_roots, key=lambda w: (sum(w.coords), w.coords))
        assert sum(1 for w in self.positive_roots
                   if sum(w.coords) == sum(by_height.coords)) == 1
        self.highest_root = by_height
        self.highest_root_coroot = self._coroot_of[by_height]
        assert self.root_norm(self.highest_root) == 2

    def _reflect_root_coords(self, i, r):
        # s_i on the weight side: subtract <alpha_i, x> alpha-check_i
        m = sum(self.cartan[i][j] * r[j] for j in range(self.rank))
        return tuple(c - m if j == i else c for j, c in enumerate(r))

    def _reflect_coroot_coords(self, i, c):
        m = sum(c[j] * self.cartan[j][i] for j in range(self.rank))
        return tuple(x - m if j == i else x for j, x in enumerate(c))

    def _build_fundamental(self):
        l = self.rank
        inv = self._cartan_inv
        # fundamental weight i: column i of A^-1 in simple-root coordinates
        self.fundamental_weights = tuple(
            Weight(tuple(inv[j][i] for j in range(l))) for i in range(l))
        # fundamental coweight i: row i of A^-1 in simple-coroot coordinates
        self.fundamental_coweights = tuple(
            Coweight(tuple(inv[i][j] for j in range(l))) for i in range(l))
        self.rho_weight = Weight(tuple(sum(col) for col in zip(
            *(w.coords for w in self.fundamental_weights))))
        self.rho_coweight = Coweight(tuple(sum(col) for col in zip(
            *(c.coords for c in self.fundamental_coweights))))
        # dual Coxeter number: 1 + height of the highest root's coroot
        self.dual_coxeter = 1 + int(sum(self.highest_root_coroot.coords))

    def _build_pi1(self):
        # pi_1 of the adjoint form = coweight lattice / coroot lattice; cosets
        # generated by the fundamental coweights taken mod 1 in coroot coordinates
        keys = {self.coset_key(Coweight(tuple(Fraction(0) for _ in range(self.rank))))}
        frontier = [self.coset_key(c) for c in self.fundamental_coweights]
        changed = True
        while changed:
            changed = False
            for a in list(keys):
                for g in frontier:
                    s = tuple((x + y) % 1 for x, y in zip(a, g))
                    if s not in keys:
                        keys.add(s)
                        changed = True
        self.pi1_order = len(keys)
        self.pi1_coset_keys = tuple(sorted(keys))

    def _build_scalings(self):
        dens = [1]
        for w in self.fundamental_weights:
            dens.extend(c.denominator for c in w.coords)
        for c in self.fundamental_coweights:
            dens.extend(x.denominator for x in self.iota(c).coords)
        wden = 1
        for d in dens:
            wden = wden * d // _gcd(wden, d)
        self.weight_denominator = wden
        qdens = [1]
        for c in self.fundamental_coweights:
            for c2 in self.fundamental_coweights:
                qdens.append((self.coform(c, c2) / 2).denominator)
        qden = 1
        for d in qdens:
            qden = qden * d // _gcd(qden, d)
        self.q_denominator = qden

    def _longest_element_word(self):
        # lower rho-coweight to the antidominant chamber, recording reflections
        cur = self.rho_coweight
        word = []
        while True:
            for i in range(1, self.rank + 1):
                if self.pair(cur, self.simple_root(i)) > 0:
                    cur = self.reflect_coweight(i, cur)
                    word.append(i)
                    break
            else:
                return tuple(word)

    # -- basic data access ----------------------------------------------

    def simple_root(self, i: int) -> Weight:
        """Simple root for node i (1-based, Bourbaki labels)."""
        return Weight(tuple(Fraction(int(j == i - 1)) for j in range(self.rank)))

    def simple_coroot(self, i: int) -> Coweight:
        return Coweight(tuple(Fraction(int(j == i - 1)) for j in range(self.rank)))

    def fundamental_weight(self, i: int) -> Weight:
        return self.fundamental_weights[i - 1]

    def fundamental_coweight(self, i: int) -> Coweight:
        return self.fundamental_coweights[i - 1]

    def is_simply_laced(self) -> bool:
        return all(d == 1 for d in self.root_norm_halves)

    # -- pairings and forms ----------------------------------------------

    def pair(self, co: Coweight, wt: Weight) -> Fraction:
        """Natural pairing <coweight, weight>."""
        l = self.rank
        return sum((co.coords[i] * self.cartan[i][j] * wt.coords[j]
                    for i in range(l) for j in range(l)
                    if wt.coords[j] and co.coords[i]), Fraction(0))

    def form(self, a: Weight, b: Weight) -> Fraction:
        """Normalized invariant form on the weight side, long roots of norm 2."""
        l = self.rank
        return sum((self.root_norm_halves[i] * self.cartan[i][j]
                    * a.coords[i] * b.coords[j]
                    for i in range(l) for j in range(l)
                    if a.coords[i] and b.coords[j]), Fraction(0))

    def coform(self, a: Coweight, b: Coweight) -> Fraction:
        """Induced form on the coweight side: (a, b) = <a, iota(b)>."""
        return self.pair(a, self.iota(b))

    def root_norm(self, r: Weight) -> Fraction:
        return self.form(r, r)

    def iota(self, co: Coweight) -> Weight:
        """Form isomorphism coweights -> weights; diag(1/d_i) in the simple bases."""
        return Weight(tuple(c / d for c, d in zip(co.coords, self.root_norm_halves)))

    def iota_inv(self, wt: Weight) -> Coweight:
        return Coweight(tuple(c * d for c, d in zip(wt.coords, self.root_norm_halves)))

    def coroot_of(self, r: Weight) -> Coweight:
        """Coroot of a (positive or negative) root."""
        if r in self._coroot_of:
            return self._coroot_of[r]
        if -r in self._coroot_of:
            return -self._coroot_of[-r]
        raise ValueError("%r is not a root of %s%d" % (r, self.type_label, self.rank))

    def is_root(self, r: Weight) -> bool:
        return r in self._coroot_of or -r in self._coroot_of

    # -- coordinates ------------------------------------------------------

    def weight_from_fundamental(self, coeffs) -> Weight:
        coeffs = _frac_tuple(coeffs)
        acc = tuple(sum(c * w.coords[j] for c, w in zip(coeffs, self.fundamental_weights))
                    for j in range(self.rank))
        return Weight(acc)

    def coweight_from_fundamental(self, coeffs) -> Coweight:
        coeffs = _frac_tuple(coeffs)
        acc = tuple(sum(c * w.coords[j] for c, w in zip(coeffs, self.fundamental_coweights))
                    for j in range(self.rank))
        return Coweight(acc)

    def weight_fundamental_coords(self, wt: Weight) -> tuple:
        """Values of the simple coroots on wt."""
        return tuple(self.pair(self.simple_coroot(i), wt) for i in range(1, self.rank + 1))

    def coweight_fundamental_coords(self, co: Coweight) -> tuple:
        """Values of co on the simple roots."""
        return tuple(self.pair(co, self.simple_root(j)) for j in range(1, self.rank + 1))

    # -- reflections, dominance, orbits ------------------------------------

    def reflect_weight(self, i: int, wt: Weight) -> Weight:
        m = self.pair(self.simple_coroot(i), wt)
        return wt - m * self.simple_root(i)

    def reflect_coweight(self, i: int, co: Coweight) -> Coweight:
        m = self.pair(co, self.simple_root(i))
        return co - m * self.simple_coroot(i)

    def is_dominant_coweight(self, co: Coweight) -> bool:
        return all(c >= 0 for c in self.coweight_fundamental_coords(co))

    def is_dominant_weight(self, wt: Weight) -> bool:
        return all(c >= 0 for c in self.weight_fundamental_coords(wt))

    def in_coweight_lattice(self, co: Coweight) -> bool:
        return all(c.denominator == 1 for c in self.coweight_fundamental_coords(co))

    def in_coroot_lattice(self, co: Coweight) -> bool:
        return all(c.denominator == 1 for c in co.coords)

    def dominance_leq(self, mu: Coweight, lam: Coweight) -> bool:
        """mu <= lam iff lam - mu is a nonnegative integer sum of simple coroots."""
        for c in (lam - mu).coords:
            if c.denominator != 1 or c < 0:
                return False
        return True

    def dominant_part(self, co: Coweight) -> Coweight:
        cur = co
        while True:
            fc = self.coweight_fundamental_coords(cur)
            for i in range(self.rank):
                if fc[i] < 0:
                    cur = self.reflect_coweight(i + 1, cur)
                    break
            else:
                return cur

    def dominant_part_weight(self, wt: Weight) -> Weight:
        cur = wt
        while True:
            fc = self.weight_fundamental_coords(cur)
            for i in range(self.rank):
                if fc[i] < 0:
                    cur = self.reflect_weight(i + 1, cur)
                    break
            else:
                return cur

    def weyl_orbit(self, co: Coweight, cap: int = DEFAULT_ORBIT_CAP) -> frozenset:
        seen = {co}
        queue = [co]
        while queue:
            cur = queue.pop()
            for i in range(1, self.rank + 1):
                nxt = self.reflect_coweight(i, cur)
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise OrbitCapExceeded(
                            "Weyl orbit exceeds cap of %d elements" % cap)
                    seen.add(nxt)
                    queue.append(nxt)
        return frozenset(seen)

    def weyl_orbit_weight(self, wt: Weight, cap: int = DEFAULT_ORBIT_CAP) -> frozenset:
        seen = {wt}
        queue = [wt]
        while queue:
            cur = queue.pop()
            for i in range(1, self.rank + 1):
                nxt = self.reflect_weight(i, cur)
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise OrbitCapExceeded(
                            "Weyl orbit exceeds cap of %d elements" % cap)
                    seen.add(nxt)
                    queue.append(nxt)
        return frozenset(seen)

    def apply_word_coweight(self, word, co: Coweight) -> Coweight:
        for i in reversed(word):
            co = self.reflect_coweight(i, co)
        return co

    def weyl_elements(self, cap: int = 10**6):
        """All Weyl elements as (integer matrix on simple-root coordinates, sign)
        pairs, generated by reflection closure."""
        if self._weyl_cache is not None:
            return self._weyl_cache
        l = self.rank
        ident = tuple(tuple(int(i == j) for j in range(l)) for i in range(l))
        gens = []
        for i in range(1, l + 1):
            cols = [self._reflect_root_coords(i - 1,
                    tuple(Fraction(int(r == j)) for r in range(l))) for j in range(l)]
            gens.append(tuple(tuple(int(cols[j][r]) for j in range(l))
                              for r in range(l)))
        seen = {ident: 1}
        queue = [ident]
        while queue:
            m = queue.pop()
            s = seen[m]
            for g in gens:
                gm = tuple(tuple(sum(g[r][k] * m[k][c] for k in range(l))
                                 for c in range(l)) for r in range(l))
                if gm not in seen:
                    if len(seen) >= cap:
                        raise OrbitCapExceeded("Weyl group exceeds cap of %d" % cap)
                    seen[gm] = -s
                    queue.append(gm)
        self._weyl_cache = tuple(sorted(seen.items()))
        return self._weyl_cache

    def apply_matrix_weight(self, mat, wt: Weight) -> Weight:
        l = self.rank
        return Weight(tuple(sum(mat[r][k] * wt.coords[k] for k in range(l))
                            for r in range(l)))

    # -- fundamental group -------------------------------------------------

    def coset_key(self, co: Coweight) -> tuple:
        """Class of co in (coweight lattice)/(coroot lattice), as coordinates mod 1."""
        return tuple(c % 1 for c in co.coords)

    def minuscule_reps(self) -> dict:
        """One minuscule coweight per fundamental-group coset (0 for the trivial one).

        A dominant coweight is minuscule iff it pairs to at most 1 with every
        positive root, i.e. iff its mark in the highest root is 1.
        """
        zero = Coweight(tuple(Fraction(0) for _ in range(self.rank)))
        reps = {self.coset_key(zero): zero}
        theta_marks = self.highest_root.coords
        for i in range(1, self.rank + 1):
            if theta_marks[i - 1] == 1:
                om = self.fundamental_coweight(i)
                key = self.coset_key(om)
                assert key not in reps, "two minuscule coweights in one coset"
                reps[key] = om
        assert len(reps) == self.pi1_order, "minuscule coweights do not exhaust pi1"
        return reps

    # -- finite irreducible characters --------------------------------------

    def dominant_weights_below(self, hi: Weight) -> list:
        """Dominant weights mu <= hi (weight-side dominance), hi included."""
        out = {hi}
        frontier = [hi]
        while frontier:
            nxt = []
            for w in frontier:
                for r in self.positive_roots:
                    w2 = w - r
                    if w2 not in out and self.is_dominant_weight(w2):
                        out.add(w2)
                        nxt.append(w2)
            frontier = nxt
        return sorted(out, key=lambda w: (-sum(w.coords), w.coords))

    def finite_weyl_character(self, nu: Weight) -> dict:
        """Weight multiplicities of the irreducible with highest weight nu.

        Freudenthal recursion over dominant weights, spread over Weyl orbits;
        exact integers throughout.
        """
        fc = self.weight_fundamental_coords(nu)
        if any(c < 0 or c.denominator != 1 for c in fc):
            raise ValueError("highest weight must be dominant integral, got %r" % (fc,))
        rho = self.rho_weight
        top = self.form(nu + rho, nu + rho)
        doms = self.dominant_weights_below(nu)
        mult = {nu: 1}
        for mu in doms:
            if mu == nu:
                continue
            acc = Fraction(0)
            for alpha in self.positive_roots:
                j = 1
                while True:
                    w2 = mu + j * alpha
                    m2 = mult.get(self.dominant_part_weight(w2), 0)
                    if m2 == 0 and self.form(w2, w2) > top:
                        break
                    if m2:
                        acc += m2 * self.form(w2, alpha)
                    j += 1
            denom = top - self.form(mu + rho, mu + rho)
            val = 2 * acc / denom
            assert val.denominator == 1 and val > 0
            mult[mu] = int(val)
        full = {}
        for mu, m in mult.items():
            for w in self.weyl_orbit_weight(mu):
                full[w] = m
        return full

    def weyl_dimension(self, nu: Weight) -> int:
        """Dimension of the irreducible with highest weight nu (product formula)."""
        rho = self.rho_weight
        num = Fraction(1)
        for alpha in self.positive_roots:
            num *= self.form(nu + rho, alpha) / self.form(rho, alpha)
        assert num.denominator == 1
        return int(num)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _build_cached(type_label: str, rank: int) -> RootSystem:
    return RootSystem(type_label, rank)


def build_root_system(type_label, rank) -> RootSystem:
    """Construct (and cache) the root system of the given simple type; repeated
    calls return the same instance, so characters built over it stay compatible."""
    return _build_cached(str(type_label).upper(), rank)
