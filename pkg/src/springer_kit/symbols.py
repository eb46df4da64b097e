"""Orthogonal partitions with sign data, symbols, the SO(N) correspondence
phi_N in both directions, H(n,k) membership, the canonical order, and a_k."""
from dataclasses import dataclass
from fractions import Fraction

from .orders import IndexOrder
from .partitions import (EventualSeq, format_partition, part,
                         partitions_of, psize, ptrim)


def distinct_odd_parts(lam):
    """Delta(lam): distinct odd parts, decreasing."""
    return tuple(sorted({x for x in lam if x % 2 == 1}, reverse=True))


def is_orthogonal(lam):
    """Every even part occurs an even number of times."""
    from collections import Counter
    return all(x % 2 == 1 or m % 2 == 0 for x, m in Counter(lam).items())


def is_degenerate(lam):
    """Orthogonal with only even parts (two geometric classes, empty eps)."""
    return bool(lam) and all(x % 2 == 0 for x in lam)


@dataclass(frozen=True)
class GSCDatum:
    """(lam, eps): lam orthogonal, eps = signs on the distinct odd parts
    (stored aligned with distinct_odd_parts(lam)).  The sign-class is
    {eps, -eps}; degenerate lam has empty eps."""
    lam: tuple
    eps: tuple

    def __post_init__(self):
        if not is_orthogonal(self.lam):
            raise ValueError("partition %r is not orthogonal (an even part "
                             "occurs an odd number of times)" % (self.lam,))
        assert len(self.eps) == len(distinct_odd_parts(self.lam))
        assert all(e in (1, -1) for e in self.eps)

    @property
    def N(self):
        return psize(self.lam)

    def sign_of(self, p):
        """eps at an odd part p; +1 at even parts by convention (they occur
        in consecutive equal pairs and cancel out of M)."""
        if p % 2 == 0:
            return 1
        return self.eps[distinct_odd_parts(self.lam).index(p)]

    def eps_seq(self):
        """Positional signs eps(i) = eps_{lam_i}, i = 1..t(lam)."""
        return tuple(self.sign_of(x) for x in self.lam)

    def negate(self):
        return GSCDatum(self.lam, tuple(-e for e in self.eps))

    def class_key(self):
        """Canonical key for the sign-class {eps, -eps}."""
        if self.eps and self.eps[0] == -1:
            return (self.lam, tuple(-e for e in self.eps))
        return (self.lam, self.eps)

    def same_class(self, other):
        return self.class_key() == other.class_key()


def datum_from_class_key(key):
    return GSCDatum(*key)


def M_value(d):
    """M = |J^1| - |J^{-1}| with J^u = {i <= t : eps(i)(-1)^(i+1) = u}."""
    es = d.eps_seq()
    m = 0
    for i, e in enumerate(es, start=1):
        m += e * (1 if i % 2 == 1 else -1)
    return m


def defect(d):
    return abs(M_value(d))


@dataclass(frozen=True)
class SymbolPair:
    """(A, B, k): decreasing integer sequences with common tail
    (-t, -t-2, ...), defect k = (number of leading A-terms) imbalance.
    Unordered pair when k = 0."""
    A: EventualSeq
    B: EventualSeq
    k: int

    @property
    def ordered(self):
        return self.k > 0


def _hash_sides(lam):
    """A#, B#: split lam' = lam + [0,-oo[_1 into even terms 2z and odd terms
    2z'-1, then A# = z' + [0,-oo[_1 and B# = z + [0,-oo[_1.  Returned as
    integer head lists of all values > -t plus the shared ray (-t, 2)."""
    t = len(lam)
    depth = 2 * t + 8
    lamp = [part(lam, i) + 1 - i for i in range(1, depth + 1)]
    z, zp = [], []
    for v in lamp:
        if v % 2 == 0:
            z.append(v // 2)
        else:
            zp.append((v + 1) // 2)
    Ah = [zp[i] - i for i in range(len(zp))]
    Bh = [z[i] - i for i in range(len(z))]
    for seq in (Ah, Bh):
        # both sides must enter the common arithmetic tail at -t
        idx = next(i for i, v in enumerate(seq) if v <= -t)
        assert seq[idx] == -t and seq[idx + 1] == -t - 2, (lam, seq)
        del seq[idx:]
    return Ah, Bh


def symbol_of(d):
    """The symbol (A, B, k) of (lam, eps).

    Starting from A#, B#, the maximal intervals of the symmetric difference
    correspond increasingly to the distinct odd parts; content is swapped on
    the intervals whose part has sign -w, where w = sgn(M + 1/2)."""
    lam = d.lam
    t = len(lam)
    Ah, Bh = _hash_sides(lam)
    sa, sb = set(Ah), set(Bh)
    sym = sorted(sa ^ sb)
    # group into maximal integer intervals
    intervals = []
    for v in sym:
        if intervals and v == intervals[-1][-1] + 1:
            intervals[-1].append(v)
        else:
            intervals.append([v])
    delta = tuple(sorted(distinct_odd_parts(lam)))
    assert len(intervals) == len(delta), (lam, intervals, delta)
    m = M_value(d)
    w = 1 if m >= 0 else -1
    A, B = set(sa), set(sb)
    for iv, p in zip(intervals, delta):
        if d.sign_of(p) == -w:
            ivs = set(iv)
            a_in, b_in = A & ivs, B & ivs
            A = (A - ivs) | b_in
            B = (B - ivs) | a_in
    tail = ((Fraction(-t), Fraction(2)),)
    return SymbolPair(EventualSeq.make(sorted(A, reverse=True), tail),
                      EventualSeq.make(sorted(B, reverse=True), tail),
                      abs(m))


def phi_of_symbol(sym):
    """(alpha, beta) with A = alpha + [k,-oo[_2, B = beta + [-k,-oo[_2."""
    k = sym.k
    # normalize head lengths: A head may extend into the generic range
    A, B = sym.A, sym.B
    alpha = _side_to_partition(A, k)
    beta = _side_to_partition(B, -k)
    return alpha, beta


def _side_to_partition(seq, first):
    """Recover gamma from gamma + [first,-oo[_2; the ray must continue the
    generic pattern first + 2 - 2i exactly."""
    (start, step), = seq.rays
    assert step == 2
    vals = sorted(seq.head, reverse=True)
    gamma = [int(v) - (first + 2 - 2 * i) for i, v in enumerate(vals, start=1)]
    assert start == first - 2 * len(vals), (seq, first)
    return ptrim(gamma)


def phi_N(d):
    """Phi_N: (lam, [eps]) -> ((alpha, beta), k).  For k = 0 the returned
    ordered pair is pinned by the stored eps representative."""
    sym = symbol_of(d)
    alpha, beta = phi_of_symbol(sym)
    n = (d.N - sym.k ** 2) // 2
    assert psize(alpha) + psize(beta) == n, (d, alpha, beta)
    return (alpha, beta), sym.k


def symbol_of_bipartition(alpha, beta, k):
    """The symbol sides alpha + [k,-oo[_2, beta + [-k,-oo[_2."""
    from .partitions import shifted_partition_seq
    return (shifted_partition_seq(alpha, k, 2),
            shifted_partition_seq(beta, -k, 2))


def phi_N_inverse(alpha, beta, k, N):
    """Inverse of phi_N: rebuild (lam, eps) from (alpha, beta) at defect k.

    lam is recovered from the MERGED sequence p = A u B: its odd-position
    terms (plus offsets) give the odd entries of lam', the even-position
    terms the even entries.  eps is recovered from the per-interval swap
    pattern of (A, B) against (A#, B#).
    """
    if k < 0 or k % 2 != N % 2 or k * k > N:
        raise ValueError("defect %d impossible for N=%d" % (k, N))
    n = (N - k * k) // 2
    if psize(alpha) + psize(beta) != n:
        raise ValueError("bipartition total %d, expected %d"
                         % (psize(alpha) + psize(beta), n))
    depth = N + k + 6
    avals = [part(alpha, i) + k + 2 - 2 * i for i in range(1, depth + 1)]
    bvals = [part(beta, j) - k + 2 - 2 * j for j in range(1, depth + 1)]
    p = sorted(avals + bvals, reverse=True)
    zp = [p[2 * j] + j for j in range(depth)]          # from p_{2j-1}, 1-based
    z = [p[2 * j + 1] + j for j in range(depth - 1)]   # from p_{2j}
    lamp = sorted([2 * v for v in z] + [2 * v - 1 for v in zp], reverse=True)
    lam = []
    for i, v in enumerate(lamp, start=1):
        x = v + i - 1
        if x < 0:
            break
        lam.append(x)
    lam = ptrim(lam)
    if psize(lam) != N:
        raise ValueError("no orthogonal preimage for (%r,%r,k=%d,N=%d)"
                         % (alpha, beta, k, N))
    if not is_orthogonal(lam):
        raise ValueError("preimage %r not orthogonal" % (lam,))
    # recover eps by matching the swap pattern
    delta = distinct_odd_parts(lam)
    if not delta:
        d = GSCDatum(lam, ())
        _check_roundtrip(d, alpha, beta, k)
        return d
    aset = set(avals[:len(alpha) + 2])
    t = len(lam)
    Ah, Bh = _hash_sides(lam)
    sa, sb = set(Ah), set(Bh)
    sym = sorted(sa ^ sb)
    intervals = []
    for v in sym:
        if intervals and v == intervals[-1][-1] + 1:
            intervals[-1].append(v)
        else:
            intervals.append([v])
    given_a = {v for v in avals if v > -t}
    swapped = []
    for iv in intervals:
        ivs = set(iv)
        if given_a & ivs == sa & ivs:
            swapped.append(False)
        elif given_a & ivs == sb & ivs:
            swapped.append(True)
        else:
            raise ValueError("symbol sides do not split along intervals")
    for w in (1, -1):
        eps = {}
        for iv_swapped, pp in zip(swapped, sorted(delta)):
            eps[pp] = -w if iv_swapped else w
        d = GSCDatum(lam, tuple(eps[pp] for pp in delta))
        if defect(d) != k:
            continue
        (a2, b2), k2 = phi_N(d)
        if (a2, b2) == (alpha, beta):
            if k > 0:
                # both eps and -eps map to the same pair; return the class rep
                d = datum_from_class_key(d.class_key())
            _check_roundtrip(d, alpha, beta, k)
            return d
        if k == 0 and (b2, a2) == (alpha, beta):
            d = d.negate()
            _check_roundtrip(d, alpha, beta, k)
            return d
    raise ValueError("eps reconstruction failed for (%r,%r,k=%d)"
                     % (alpha, beta, k))


def _check_roundtrip(d, alpha, beta, k):
    (a2, b2), k2 = phi_N(d)
    assert k2 == k
    assert (a2, b2) == (alpha, beta) or (k == 0 and (b2, a2) == (alpha, beta))


def merged_symbol_seq(d):
    """p_{lam,[eps]}: the merged multiset A u B of the symbol sides (it only
    depends on lam); dominance on these sequences mirrors dominance on lam."""
    sym = symbol_of(d)
    return sym.A.union(sym.B)


# ------------------------------------------------------------------ H(n, k)

def h_sizes(alpha, beta, k):
    """(m0, m1): m0 smallest with m0 >= t(alpha) and m0 - k >= t(beta)."""
    m0 = max(len(alpha), len(beta) + k, k)
    return m0, m0 - k


def h_prefix(alpha, beta, k):
    """The r = m0 + m1 largest terms of Lambda_{k,-k;2}(alpha,beta), as the
    tagged values (value, tag, index)."""
    m0, m1 = h_sizes(alpha, beta, k)
    vals = [(part(alpha, i) + k + 2 - 2 * i, 0, i) for i in range(1, m0 + 1)]
    vals += [(part(beta, j) - k + 2 - 2 * j, 1, j) for j in range(1, m1 + 1)]
    vals.sort(key=lambda v: (-v[0], v[1], v[2]))
    return vals


def is_H(alpha, beta, k):
    """No multiplicities among the r largest terms of Lambda_{k,-k;2}."""
    vals = [v for (v, _, _) in h_prefix(alpha, beta, k)]
    return len(set(vals)) == len(vals)


def order_from_H(alpha, beta, k):
    """The canonical order <_{alpha,beta,k}: merge indices by term value."""
    if not is_H(alpha, beta, k):
        raise ValueError("(%r,%r) has multiplicities at k=%d" % (alpha, beta, k))
    return IndexOrder("".join("a" if e == 0 else "b"
                              for (_, e, _) in h_prefix(alpha, beta, k)))


def a_k(alpha, beta, k):
    """sum_{i<j<=r} min(Lambda_i, Lambda_j), relative to the empty bipartition."""
    m0, m1 = h_sizes(alpha, beta, k)
    r = m0 + m1

    def minsum(a, b):
        vals = sorted(
            [part(a, i) + k + 2 - 2 * i for i in range(1, m0 + 1)]
            + [part(b, j) - k + 2 - 2 * j for j in range(1, m1 + 1)],
            reverse=True)
        return sum(j * vals[j] for j in range(r))

    return minsum(alpha, beta) - minsum((), ())


# -------------------------------------------------------------- enumeration

def enumerate_pport(N):
    """All (lam, [eps]) with lam orthogonal of size N, one datum per
    sign-class (the first odd part carries +), deterministic order."""
    out = []
    for lam in partitions_of(N):
        if not is_orthogonal(lam):
            continue
        delta = distinct_odd_parts(lam)
        if not delta:
            out.append(GSCDatum(lam, ()))
            continue
        free = len(delta) - 1
        for bits in range(1 << free):
            eps = (1,) + tuple(1 if not (bits >> i) & 1 else -1
                               for i in range(free))
            out.append(GSCDatum(lam, eps))
    return out


def codomain_count(N):
    """Theorem count: sum over defects k of |P_2((N-k^2)/2)|, the k = 0
    summand replaced by unordered pairs |P_2(N/2)/theta|."""
    total = 0
    k = N % 2
    while k * k <= N:
        n = (N - k * k) // 2
        cnt = sum(len(partitions_of(a)) * len(partitions_of(n - a))
                  for a in range(n + 1))
        if k == 0:
            sym = len(partitions_of(n // 2)) if n % 2 == 0 else 0
            cnt = (cnt + sym) // 2
        total += cnt
        k += 2
    return total


# --------------------------------------------------------------- eps strings

def parse_eps(lam, text):
    """Parse a +/- string: either positional over all t(lam) parts or
    positional over the odd-part positions only."""
    text = text.strip().replace("−", "-")
    signs = []
    for ch in text:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise ValueError("bad eps character %r" % ch)
    odd_pos = [i for i, x in enumerate(lam) if x % 2 == 1]
    if len(signs) == len(lam):
        per_pos = signs
    elif len(signs) == len(odd_pos):
        per_pos = [1] * len(lam)
        for i, s in zip(odd_pos, signs):
            per_pos[i] = s
    else:
        raise ValueError("eps length %d: expected %d (all parts) or %d "
                         "(odd parts)" % (len(signs), len(lam), len(odd_pos)))
    eps = {}
    for x, s in zip(lam, per_pos):
        if x % 2 == 0:
            if s != 1 and len(signs) == len(lam):
                # tolerate '-' on even positions only if consistent? no: reject
                raise ValueError("sign on even part %d must be +" % x)
            continue
        if x in eps and eps[x] != s:
            raise ValueError("equal parts %d received different signs" % x)
        eps[x] = s
    return GSCDatum(ptrim(lam), tuple(eps[p] for p in distinct_odd_parts(lam)))


def format_eps(d):
    """Full-length positional string, '+' on even positions, normalized so
    the first odd-part sign is '+'."""
    rep = datum_from_class_key(d.class_key())
    return "".join("+" if s == 1 else "-" for s in rep.eps_seq())


def format_datum(d):
    return "%s / %s" % (format_partition(d.lam) or "-", format_eps(d) or "-")
