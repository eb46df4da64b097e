"""Exact arithmetic on partitions and eventually-arithmetic decreasing sequences.

Partitions are canonical tuples of nonnegative ints (no trailing zeros).
Eventually-arithmetic sequences carry exact rational values; they show up as
shifted partitions like alpha + [A,-oo[_s and as merged symbol sequences.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------- partitions

def ptrim(parts):
    """Canonical partition tuple: validate weak decrease, drop trailing zeros."""
    parts = tuple(int(x) for x in parts)
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            raise ValueError("not weakly decreasing: %r" % (parts,))
    if parts and parts[-1] < 0:
        raise ValueError("negative part in %r" % (parts,))
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def psize(lam):
    return sum(lam)


def part(lam, i):
    """i-th part (1-based), zero beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def partial_sum(lam, c):
    """S_c = sum of the first c parts."""
    return sum(lam[:c])


def pmult(lam, r):
    """Multiplicity of r as a part."""
    return sum(1 for x in lam if x == r)


def transpose(lam):
    """Conjugate partition (column counts)."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= c) for c in range(1, lam[0] + 1))


def punion(x, y):
    """Multiset union of two partitions, re-sorted decreasing."""
    return tuple(sorted(x + y, reverse=True))


def dominance_leq(x, y):
    """S_c(x) <= S_c(y) for all c.  Meaningful for partitions of equal size."""
    sx = sy = 0
    for c in range(max(len(x), len(y))):
        sx += x[c] if c < len(x) else 0
        sy += y[c] if c < len(y) else 0
        if sx > sy:
            return False
    return True


def parse_partition(text):
    """Parse "3,3,1" (empty string = empty partition)."""
    text = text.strip()
    if not text:
        return ()
    return ptrim(int(x) for x in text.split(","))


def format_partition(lam):
    return ",".join(str(x) for x in lam)


@lru_cache(maxsize=None)
def partitions_of(n, maxpart=None):
    """All partitions of n with parts <= maxpart, lex-decreasing order."""
    if maxpart is None or maxpart > n:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for head in range(maxpart, 0, -1):
        for tail in partitions_of(n - head, head):
            out.append((head,) + tail)
    return tuple(out)


def bipartitions_of(n):
    """All ordered pairs (alpha, beta) with |alpha| + |beta| = n."""
    out = []
    for a in range(n, -1, -1):
        for alpha in partitions_of(a):
            for beta in partitions_of(n - a):
                out.append((alpha, beta))
    return out


# ---------------------------------------------- eventually-arithmetic sequences

class IncomparableTails(ValueError):
    """Raised when two sequences' tails diverge and no exact comparison exists."""


@dataclass(frozen=True)
class EventualSeq:
    """Decreasing sequence = multiset of finitely many head values plus
    arithmetic rays (start, start-step, start-2*step, ...).

    A single (prefix, tail) shape is not enough: merged sequences like
    Lambda_{1,-1;2}((1),(2)) end in (-3,-3,-5,-5,...), which is two
    interleaved rays of step 2.  All values are exact Fractions.
    """
    head: tuple          # tuple of Fraction, any order (multiset)
    rays: tuple          # tuple of (start: Fraction, step: Fraction>0), sorted

    @staticmethod
    def make(head=(), rays=()):
        head = tuple(Fraction(x) for x in head)
        rays = tuple(sorted(((Fraction(a), Fraction(s)) for (a, s) in rays),
                            reverse=True))
        for (_, s) in rays:
            if s <= 0:
                raise ValueError("ray step must be positive")
        return EventualSeq(head, rays)

    def shift(self, c):
        """Add the constant c to every term."""
        c = Fraction(c)
        return EventualSeq(tuple(x + c for x in self.head),
                           tuple((a + c, s) for (a, s) in self.rays))

    def scale(self, c):
        """Multiply every term by c > 0."""
        c = Fraction(c)
        assert c > 0
        return EventualSeq(tuple(x * c for x in self.head),
                           tuple(sorted(((a * c, s * c) for (a, s) in self.rays),
                                        reverse=True)))

    def union(self, other):
        """Multiset merge."""
        return EventualSeq.make(self.head + other.head, self.rays + other.rays)

    def terms_down_to(self, v):
        """All terms >= v, sorted decreasing."""
        vals = [x for x in self.head if x >= v]
        for (a, s) in self.rays:
            x = a
            while x >= v:
                vals.append(x)
                x -= s
        return sorted(vals, reverse=True)

    def first_terms(self, n):
        """The n largest terms, sorted decreasing."""
        if n == 0:
            return []
        v = min([x for x in self.head] + [a for (a, _) in self.rays],
                default=Fraction(0))
        step = max([s for (_, s) in self.rays], default=Fraction(1))
        while True:
            terms = self.terms_down_to(v)
            if len(terms) >= n:
                return terms[:n]
            if not self.rays:
                raise ValueError("sequence has fewer than %d terms" % n)
            v -= step * n

    def pop_head(self, n):
        """Equivalent sequence with the n largest terms moved into the head."""
        top = self.first_terms(n)
        remaining = list(self.head)
        rays = []
        for (a, s) in self.rays:
            x = a
            # ray values that landed in `top` get consumed below
            rays.append([a, s])
        # consume: remove top values from head/rays greedily by value
        new_head = []
        pool = sorted(remaining, reverse=True)
        for v in top:
            if pool and pool[0] == v:
                pool.pop(0)
                new_head.append(v)
                continue
            # take from the ray whose current start equals v
            for ray in rays:
                if ray[0] == v:
                    ray[0] -= ray[1]
                    new_head.append(v)
                    break
            else:
                raise AssertionError("term bookkeeping failed")
        return EventualSeq.make(tuple(new_head) + tuple(pool),
                                tuple((a, s) for (a, s) in rays))

    def add_termwise(self, other_head):
        """Add a finite tuple termwise to the largest terms, rest unchanged."""
        n = len(other_head)
        popped = self.pop_head(max(n, len(self.head)))
        head = sorted(popped.head, reverse=True)
        head = [h + (other_head[i] if i < n else 0) for i, h in enumerate(head)]
        return EventualSeq.make(head, popped.rays)


def ray(first, step):
    """[first, -oo[_step as an EventualSeq."""
    return EventualSeq.make((), ((first, step),))


def shifted_partition_seq(lam, first, step):
    """lam + [first,-oo[_step: lam_i + first - (i-1)*step for all i >= 1."""
    first, step = Fraction(first), Fraction(step)
    head = tuple(lam[i] + first - i * step for i in range(len(lam)))
    return EventualSeq.make(head, ((first - len(lam) * step, step),))


def lambda_ABs(alpha, beta, A, B, s):
    """Lambda_{A,B;s}(alpha,beta) = (alpha + [A,-oo[_s) u (beta + [B,-oo[_s)."""
    return shifted_partition_seq(alpha, A, s).union(
        shifted_partition_seq(beta, B, s))


def _pair_rays(xrays, yrays):
    """Match rays across two sequences by (step, start residue mod step).

    Within a residue class the terms of two rays eventually coincide, so any
    matching works for comparisons past the horizon; unmatched rays mean the
    tails diverge linearly.
    """
    from collections import Counter
    def key(a, s):
        return (s, a % s)
    cx = Counter(key(a, s) for (a, s) in xrays)
    cy = Counter(key(a, s) for (a, s) in yrays)
    if cx != cy:
        raise IncomparableTails("tails diverge: %r vs %r" % (xrays, yrays))


def seq_horizon(x, y):
    """A value below which both sequences consist of identical ray terms."""
    _pair_rays(x.rays, y.rays)
    cands = [v for v in x.head + y.head]
    cands += [a for (a, _) in x.rays] + [a for (a, _) in y.rays]
    steps = [s for (_, s) in x.rays + y.rays]
    if not cands:
        return Fraction(0)
    return min(cands) - (max(steps) if steps else Fraction(1))


def seq_leq(x, y):
    """Dominance: partial sums of x termwise <= partial sums of y.

    Compared down to a horizon past which both sequences agree termwise.
    """
    v = seq_horizon(x, y)
    tx = x.terms_down_to(v)
    ty = y.terms_down_to(v)
    if len(tx) != len(ty):
        raise IncomparableTails("term counts differ above the horizon")
    sx = sy = Fraction(0)
    for a, b in zip(tx, ty):
        sx += a
        sy += b
        if sx > sy:
            return False
    if sx != sy:
        # weights differ: partial sums beyond the horizon drift by a constant,
        # which is fine for <= only if the drift is <= 0
        return sx < sy
    return True


def seq_eq(x, y):
    """Termwise equality of the sequences (multisets agree at every level)."""
    try:
        v = seq_horizon(x, y)
    except IncomparableTails:
        return False
    return x.terms_down_to(v) == y.terms_down_to(v)
