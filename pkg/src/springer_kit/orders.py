"""Orders on the indices of a bipartition, equivalence, and the peeling
procedures (a)/(b) that extract mu_1 / nu_1 with a residual bipartition."""
from dataclasses import dataclass

from .partitions import part, ptrim


@dataclass(frozen=True)
class IndexOrder:
    """Total order on {(1,0),..,(m0,0)} u {(1,1),..,(m1,1)} as a word over
    'a' (A-side index) / 'b' (B-side index); the i-th 'a' is (i,0)."""
    word: str

    def __post_init__(self):
        assert set(self.word) <= {"a", "b"}, self.word

    @property
    def m0(self):
        return self.word.count("a")

    @property
    def m1(self):
        return self.word.count("b")

    def positions(self):
        """List of (index, tag) in word order, 1-based indices."""
        out = []
        ia = ib = 0
        for ch in self.word:
            if ch == "a":
                ia += 1
                out.append((ia, 0))
            else:
                ib += 1
                out.append((ib, 1))
        return out

    def preceding_b(self, i):
        """{j : (j,1) < (i,0)}."""
        seen_a = 0
        js = set()
        jb = 0
        for ch in self.word:
            if ch == "a":
                seen_a += 1
                if seen_a == i:
                    return js
            else:
                jb += 1
                js.add(jb)
        raise IndexError(i)

    def preceding_a(self, j):
        """{i : (i,0) < (j,1)}."""
        seen_b = 0
        is_ = set()
        ia = 0
        for ch in self.word:
            if ch == "b":
                seen_b += 1
                if seen_b == j:
                    return is_
            else:
                ia += 1
                is_.add(ia)
        raise IndexError(j)


def _check_indexes(o, alpha, beta):
    if o.m0 < len(alpha) or o.m1 < len(beta):
        raise ValueError("order %r cannot index (%r,%r)" % (o.word, alpha, beta))


def orders_equivalent(o1, o2, alpha, beta):
    """Equivalence: opposite-tag predecessor sets agree at every index of a
    nonzero part.  Zero-part indices sitting before nonzero ones matter."""
    _check_indexes(o1, alpha, beta)
    _check_indexes(o2, alpha, beta)
    for i in range(1, len(alpha) + 1):
        if alpha[i - 1] > 0 and o1.preceding_b(i) != o2.preceding_b(i):
            return False
    for j in range(1, len(beta) + 1):
        if beta[j - 1] > 0 and o1.preceding_a(j) != o2.preceding_a(j):
            return False
    return True


def minimal_representative(o, alpha, beta):
    """Smallest equivalent order: greedily drop the last a-tag / b-tag while
    its part is zero and no nonzero opposite part follows it."""
    _check_indexes(o, alpha, beta)
    word = list(o.word)

    def droppable(tag):
        # the last `tag` in the word indexes a zero part and must not precede
        # any nonzero opposite-tag index
        m = word.count(tag)
        if m == 0:
            return False
        parts = alpha if tag == "a" else beta
        if part(parts, m) != 0:
            return False
        pos = len(word) - 1 - word[::-1].index(tag)
        opp = "b" if tag == "a" else "a"
        opp_parts = beta if tag == "a" else alpha
        jj = word[:pos].count(opp)  # opposite indices before pos are unaffected
        # any opposite-tag index after pos with a nonzero part blocks the drop
        for later in word[pos + 1:]:
            if later == opp:
                jj += 1
                if part(opp_parts, jj) != 0:
                    return False
        del word[pos]
        return True

    changed = True
    while changed:
        changed = droppable("a") or droppable("b")
    return IndexOrder("".join(word))


@dataclass(frozen=True)
class PeelResult:
    extracted: int
    chain_a: tuple
    chain_b: tuple
    residual: tuple          # (alpha', beta')
    residual_order: IndexOrder


def _peel(alpha, beta, o, start_tag):
    """Common body of procedures (a) and (b).

    Starting from index 1 of start_tag, alternately pick the smallest
    opposite-tag index that comes later in the order; sum the visited parts.
    """
    o = minimal_representative(o, alpha, beta)
    m = {0: o.m0, 1: o.m1}
    e = 0 if start_tag == "a" else 1
    if m[e] == 0:
        raise ValueError("procedure needs at least one %s-index" % start_tag)
    chain = {0: [], 1: []}
    cur = 1
    chain[e].append(cur)
    total = part(alpha if e == 0 else beta, cur)
    while True:
        f = 1 - e
        # smallest opposite index strictly after (cur, e)
        pred = o.preceding_b(cur) if e == 0 else o.preceding_a(cur)
        nxt = None
        for j in range(1, m[f] + 1):
            if j not in pred and j > (chain[f][-1] if chain[f] else 0):
                nxt = j
                break
        if nxt is None:
            break
        chain[f].append(nxt)
        total += part(alpha if f == 0 else beta, nxt)
        e = f
        cur = nxt
    xa, xb = chain[0], chain[1]
    alpha2 = ptrim(sorted((part(alpha, i) for i in range(1, o.m0 + 1)
                           if i not in xa), reverse=True))
    beta2 = ptrim(sorted((part(beta, j) for j in range(1, o.m1 + 1)
                          if j not in xb), reverse=True))
    # induced order: delete the chain occurrences from the word
    word = []
    ia = ib = 0
    for ch in o.word:
        if ch == "a":
            ia += 1
            if ia not in xa:
                word.append("a")
        else:
            ib += 1
            if ib not in xb:
                word.append("b")
    return PeelResult(total, tuple(xa), tuple(xb), (alpha2, beta2),
                      IndexOrder("".join(word)))


def procedure_a(alpha, beta, o):
    """Extract mu_1 = alpha_{a1} + beta_{b1} + alpha_{a2} + ... with a1 = 1."""
    return _peel(alpha, beta, o, "a")


def procedure_b(alpha, beta, o):
    """Extract nu_1 = beta_{b1} + alpha_{a1} + ... with b1 = 1."""
    return _peel(alpha, beta, o, "b")


def all_words(m0, m1):
    """All interleavings of m0 'a's and m1 'b's (every order of that size)."""
    if m0 == 0:
        return ["b" * m1]
    if m1 == 0:
        return ["a" * m0]
    return (["a" + w for w in all_words(m0 - 1, m1)]
            + ["b" + w for w in all_words(m0, m1 - 1)])


def inequivalent_orders(alpha, beta):
    """Minimal representatives of all order classes on (alpha, beta)."""
    seen = set()
    out = []
    for w in all_words(len(alpha), len(beta)):
        o = minimal_representative(IndexOrder(w), alpha, beta)
        if o.word not in seen:
            seen.add(o.word)
            out.append(o)
    return out
