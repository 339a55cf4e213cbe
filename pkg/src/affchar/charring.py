"""Exact q-graded character ring.

A QCharacter is a finitely supported integer combination of terms
e^(finite weight) * q^(q_exp), where q = e^(-delta) grades by depth below the
highest-weight line.  Coefficients are arbitrary-precision integers and both
weight coordinates and q-exponents are exact rationals, stored internally as
integers against per-root-system denominators so that dictionary keys stay
cheap.  A character carries its level as metadata (the affine Demazure
operator at node 0 needs it) and an optional truncation depth; the truncated
flag is sticky through arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .rootsys import RootSystem, Weight


class TruncatedCharacterError(ValueError):
    """Raised when an operation requires an untruncated character."""


def _wkey(rs: RootSystem, wt: Weight) -> tuple:
    den = rs.weight_denominator
    out = []
    for c in wt.coords:
        v = c * den
        if v.denominator != 1:
            raise ValueError("weight %r is not in the supported lattice" % (wt,))
        out.append(int(v))
    return tuple(out)


def _qnum(rs: RootSystem, q) -> int:
    v = Fraction(q) * rs.q_denominator
    if v.denominator != 1:
        raise ValueError("q-exponent %r has unsupported denominator" % (q,))
    return int(v)


class QCharacter:
    __slots__ = ("rs", "level", "depth", "truncated", "_terms")

    def __init__(self, rs, level, terms=None, depth=None, truncated=False):
        self.rs = rs
        self.level = level
        self.depth = None if depth is None else Fraction(depth)
        self.truncated = truncated
        data = {}
        if terms:
            qden = rs.q_denominator
            bound = None if self.depth is None else self.depth * qden
            for wt, q, coeff in terms:
                if coeff == 0:
                    continue
                key = (_qnum(rs, q),) + _wkey(rs, wt)
                if bound is not None and key[0] > bound:
                    self.truncated = True
                    continue
                data[key] = data.get(key, 0) + coeff
        self._terms = {k: v for k, v in data.items() if v}

    @classmethod
    def _raw(cls, rs, level, term_dict, depth, truncated):
        self = cls.__new__(cls)
        self.rs = rs
        self.level = level
        self.depth = depth
        self.truncated = truncated
        self._terms = term_dict
        return self

    @classmethod
    def unit(cls, rs, level: int = 0) -> "QCharacter":
        zero = Weight(tuple(Fraction(0) for _ in range(rs.rank)))
        return cls(rs, level, [(zero, Fraction(0), 1)])

    # -- inspection -------------------------------------------------------

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Yield (weight, q_exp, coeff) in canonical order (q asc, weight lex)."""
        den = self.rs.weight_denominator
        qden = self.rs.q_denominator
        for key in sorted(self._terms):
            wt = Weight(tuple(Fraction(c, den) for c in key[1:]))
            yield wt, Fraction(key[0], qden), self._terms[key]

    def coeff(self, wt: Weight, q) -> int:
        key = (_qnum(self.rs, q),) + _wkey(self.rs, wt)
        return self._terms.get(key, 0)

    def total(self) -> int:
        return sum(self._terms.values())

    def min_q(self):
        if not self._terms:
            return None
        return Fraction(min(k[0] for k in self._terms), self.rs.q_denominator)

    def max_q(self):
        if not self._terms:
            return None
        return Fraction(max(k[0] for k in self._terms), self.rs.q_denominator)

    def layer(self, q) -> dict:
        """Finite-weight multiplicities of one q-layer."""
        qn = _qnum(self.rs, q)
        den = self.rs.weight_denominator
        return {Weight(tuple(Fraction(c, den) for c in k[1:])): v
                for k, v in self._terms.items() if k[0] == qn}

    def __eq__(self, other):
        return (isinstance(other, QCharacter) and self.rs is other.rs
                and self.level == other.level and self._terms == other._terms)

    # -- ring operations ---------------------------------------------------

    def _check_compat(self, other):
        if self.rs is not other.rs:
            raise ValueError("characters live over different root systems")
        if self.depth != other.depth:
            raise ValueError("truncation depths differ: %r vs %r"
                             % (self.depth, other.depth))

    def __add__(self, other):
        self._check_compat(other)
        if self.level != other.level:
            raise ValueError("cannot add characters of different levels")
        out = dict(self._terms)
        for k, v in other._terms.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        return QCharacter._raw(self.rs, self.level, out, self.depth,
                               self.truncated or other.truncated)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "QCharacter":
        if c == 0:
            return QCharacter._raw(self.rs, self.level, {}, self.depth, self.truncated)
        return QCharacter._raw(self.rs, self.level,
                               {k: c * v for k, v in self._terms.items()},
                               self.depth, self.truncated)

    def mul(self, other: "QCharacter") -> "QCharacter":
        """Convolution product; depths must agree, levels add."""
        self._check_compat(other)
        bound = None if self.depth is None else int(self.depth * self.rs.q_denominator)
        out = {}
        dropped = False
        small, big = (self._terms, other._terms)
        if len(small) > len(big):
            small, big = big, small
        for k1, v1 in small.items():
            for k2, v2 in big.items():
                q = k1[0] + k2[0]
                if bound is not None and q > bound:
                    dropped = True
                    continue
                key = (q,) + tuple(a + b for a, b in zip(k1[1:], k2[1:]))
                nv = out.get(key, 0) + v1 * v2
                if nv:
                    out[key] = nv
                elif key in out:
                    del out[key]
        return QCharacter._raw(self.rs, self.level + other.level, out, self.depth,
                               self.truncated or other.truncated or dropped)

    def normalized(self) -> "QCharacter":
        """Shift q-exponents so the minimal one is zero."""
        if not self._terms:
            return self
        m = min(k[0] for k in self._terms)
        if m == 0:
            return self
        out = {(k[0] - m,) + k[1:]: v for k, v in self._terms.items()}
        return QCharacter._raw(self.rs, self.level, out, self.depth, self.truncated)

    def truncate(self, depth) -> "QCharacter":
        depth = Fraction(depth)
        bound = depth * self.rs.q_denominator
        out = {k: v for k, v in self._terms.items() if k[0] <= bound}
        return QCharacter._raw(self.rs, self.level, out, depth,
                               self.truncated or len(out) < len(self._terms))

    # -- Demazure operators --------------------------------------------------

    def _node_data(self, i: int):
        rs = self.rs
        wden = rs.weight_denominator
        if i == 0:
            row = tuple(-int(sum(rs.highest_root_coroot.coords[a] * rs.cartan[a][j]
                                 for a in range(rs.rank))) for j in range(rs.rank))
            const = self.level
            delta = (rs.q_denominator,) + tuple(
                int(c) * wden for c in rs.highest_root.coords)
        else:
            row = tuple(int(rs.cartan[i - 1][j]) for j in range(rs.rank))
            const = 0
            delta = (0,) + tuple(-wden if j == i - 1 else 0 for j in range(rs.rank))
        return row, const, delta

    def _pairing(self, key, row, const):
        num = sum(r * k for r, k in zip(row, key[1:]) if r)
        val = Fraction(num, self.rs.weight_denominator) + const
        if val.denominator != 1:
            raise ValueError("weight pairs non-integrally with the chosen coroot")
        return int(val)

    def demazure(self, i: int) -> "QCharacter":
        """Isobaric divided-difference operator for node i (0 = affine node).

        On a term of pairing m this is the q-weighted string sum: the full
        string down to the reflected weight for m >= 0, zero for m = -1, and
        minus the interior of the upward string for m <= -2.
        """
        if not 0 <= i <= self.rs.rank:
            raise ValueError("node index %d out of range" % i)
        row, const, delta = self._node_data(i)
        if not self.truncated:
            numer = {}
            for key, c in self._terms.items():
                m = self._pairing(key, row, const)
                numer[key] = numer.get(key, 0) + c
                k2 = tuple(a + (m + 1) * d for a, d in zip(key, delta))
                numer[k2] = numer.get(k2, 0) - c
            numer = {k: v for k, v in numer.items() if v}
            out = _divide_one_minus_shift(numer, delta)
        else:
            out = {}
            for key, c in self._terms.items():
                m = self._pairing(key, row, const)
                if m >= 0:
                    rng = range(0, m + 1)
                    sign = 1
                elif m == -1:
                    continue
                else:
                    rng = range(-1, m, -1)
                    sign = -1
                for j in rng:
                    k2 = tuple(a + j * d for a, d in zip(key, delta))
                    nv = out.get(k2, 0) + sign * c
                    if nv:
                        out[k2] = nv
                    elif k2 in out:
                        del out[k2]
        dropped = False
        if self.depth is not None:
            bound = self.depth * self.rs.q_denominator
            before = len(out)
            out = {k: v for k, v in out.items() if k[0] <= bound}
            dropped = len(out) < before
        return QCharacter._raw(self.rs, self.level, out, self.depth,
                               self.truncated or dropped)

    # -- specialization and symmetry ------------------------------------------

    def specialize_q1(self, allow_truncated: bool = False) -> dict:
        """Sum coefficients over q per finite weight (the underlying G-character)."""
        if self.truncated and not allow_truncated:
            raise TruncatedCharacterError(
                "q=1 specialization of a truncated character is only a lower "
                "bound; pass allow_truncated=True to accept that")
        den = self.rs.weight_denominator
        out = {}
        for k, v in self._terms.items():
            w = k[1:]
            out[w] = out.get(w, 0) + v
        return {Weight(tuple(Fraction(c, den) for c in w)): v
                for w, v in out.items() if v}

    def is_weyl_invariant(self) -> bool:
        rs = self.rs
        wden = rs.weight_denominator
        for i in range(1, rs.rank + 1):
            row = tuple(int(rs.cartan[i - 1][j]) for j in range(rs.rank))
            refl = {}
            for key, c in self._terms.items():
                num = sum(r * k for r, k in zip(row, key[1:]) if r)
                if num % wden:
                    return False
                m = num // wden
                k2 = (key[0],) + tuple(
                    a - m * wden if j == i - 1 else a
                    for j, a in enumerate(key[1:]))
                refl[k2] = refl.get(k2, 0) + c
            if refl != self._terms:
                return False
        return True

    # -- serialization ----------------------------------------------------------

    def to_text(self) -> str:
        """One term per line: ``w=(c1,...,cl) q=p/r coeff=m`` with weights in
        fundamental-weight coordinates; canonical order, byte-stable."""
        rs = self.rs
        lines = []
        for wt, q, coeff in self.terms():
            fund = rs.weight_fundamental_coords(wt)
            ws = ",".join(str(c) for c in fund)
            lines.append("w=(%s) q=%d/%d coeff=%d"
                         % (ws, q.numerator, q.denominator, coeff))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, rs, level, text, depth=None, truncated=False):
        terms = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            wpart, qpart, cpart = line.split()
            coords = [Fraction(x) for x in wpart[len("w=("):-1].split(",")]
            wt = rs.weight_from_fundamental(coords)
            q = Fraction(qpart[len("q="):])
            coeff = int(cpart[len("coeff="):])
            terms.append((wt, q, coeff))
        return cls(rs, level, terms, depth=depth, truncated=truncated)


def _divide_one_minus_shift(terms: dict, delta: tuple) -> dict:
    """Exact division of a finitely supported dict by (1 - x), where
    multiplication by x shifts keys by ``delta``.

    Walks each arithmetic string key, key+delta, key+2*delta, ... from the top;
    raises if the input is not divisible (nonzero carry past the end).
    """
    pivot = next(j for j, d in enumerate(delta) if d)
    dp = delta[pivot]
    classes = {}
    for key, c in terms.items():
        t, rem = divmod(key[pivot], dp)
        cid = (rem,) + tuple(key[j] * dp - key[pivot] * delta[j]
                             for j in range(len(delta)) if j != pivot)
        entry = classes.setdefault(cid, [None, None, {}])
        if entry[0] is None:
            entry[0] = t
            entry[1] = key
        entry[2][t] = c
    out = {}
    for rep_t, rep_key, string in classes.values():
        ts = sorted(string)
        t0, t1 = ts[0], ts[-1]
        base = tuple(k - rep_t * d for k, d in zip(rep_key, delta))
        acc = 0
        for t in range(t0, t1 + 1):
            acc += string.get(t, 0)
            if t < t1 and acc:
                out[tuple(b + t * d for b, d in zip(base, delta))] = acc
        if acc != 0:
            raise ArithmeticError("operand is not divisible by (1 - shift)")
    return out


# -- module-level operation surface -------------------------------------------


def qchar_mul(a: QCharacter, b: QCharacter) -> QCharacter:
    return a.mul(b)


def demazure_op(rs: RootSystem, i: int, chi: QCharacter) -> QCharacter:
    if chi.rs is not rs:
        raise ValueError("character is attached to a different root system")
    return chi.demazure(i)


def specialize_q1(chi: QCharacter, allow_truncated: bool = False) -> dict:
    return chi.specialize_q1(allow_truncated=allow_truncated)


def is_weyl_invariant(rs: RootSystem, chi: QCharacter) -> bool:
    if chi.rs is not rs:
        raise ValueError("character is attached to a different root system")
    return chi.is_weyl_invariant()


def group_ring_mul(rs: RootSystem, a: dict, b: dict) -> dict:
    """Product in the finite weight group ring (dicts Weight -> int)."""
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            nv = out.get(w, 0) + c1 * c2
            if nv:
                out[w] = nv
            elif w in out:
                del out[w]
    return out


def effective_depth(chi: QCharacter):
    """Depth up to which the character is complete: None means fully known."""
    if not chi.truncated:
        return None
    return chi.depth


def first_discrepancy(a: QCharacter, b: QCharacter):
    """First (q asc, weight lex) term where the characters differ, compared up
    to the common complete depth.  Returns None if they agree, otherwise a
    tuple (weight, q, coeff_a, coeff_b)."""
    if a.rs is not b.rs:
        raise ValueError("characters live over different root systems")
    da, db = effective_depth(a), effective_depth(b)
    if da is None:
        common = db
    elif db is None:
        common = da
    else:
        common = min(da, db)
    bound = None if common is None else common * a.rs.q_denominator
    keys = set(a._terms) | set(b._terms)
    for key in sorted(keys):
        if bound is not None and key[0] > bound:
            continue
        ca = a._terms.get(key, 0)
        cb = b._terms.get(key, 0)
        if ca != cb:
            den = a.rs.weight_denominator
            wt = Weight(tuple(Fraction(c, den) for c in key[1:]))
            return (wt, Fraction(key[0], a.rs.q_denominator), ca, cb)
    return None


def chars_agree(a: QCharacter, b: QCharacter) -> bool:
    return first_discrepancy(a, b) is None
