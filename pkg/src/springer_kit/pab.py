"""The recursive sets P(alpha,beta,<) and P_{A,B;s}(alpha,beta,<) and the
extremal sequence Lambda_{A,B;s} of any member of the gated set."""
from fractions import Fraction

from .orders import minimal_representative, procedure_a, procedure_b
from .partitions import lambda_ABs, part, punion, seq_eq, seq_leq


def p_set(alpha, beta, o):
    """P(alpha,beta,<): all bipartitions produced by peeling with (a)/(b)."""
    o = minimal_representative(o, alpha, beta)
    return _p_set(alpha, beta, o.word)


_P_MEMO = {}


def _p_set(alpha, beta, word):
    key = (alpha, beta, word)
    got = _P_MEMO.get(key)
    if got is not None:
        return got
    from .orders import IndexOrder
    o = IndexOrder(word)
    if o.m0 == 0 and o.m1 == 0:
        out = frozenset({((), ())})
        _P_MEMO[key] = out
        return out
    out = set()
    if o.m0 > 0:
        r = procedure_a(alpha, beta, o)
        ro = minimal_representative(r.residual_order, *r.residual)
        for (mu, nu) in _p_set(r.residual[0], r.residual[1], ro.word):
            out.add((punion(mu, (r.extracted,) if r.extracted else ()), nu))
    if o.m1 > 0:
        r = procedure_b(alpha, beta, o)
        ro = minimal_representative(r.residual_order, *r.residual)
        for (mu, nu) in _p_set(r.residual[0], r.residual[1], ro.word):
            out.add((mu, punion(nu, (r.extracted,) if r.extracted else ())))
    out = frozenset(out)
    _P_MEMO[key] = out
    return out


_PAB_MEMO = {}


def p_abs_set(alpha, beta, o, A, B, s):
    """P_{A,B;s}(alpha,beta,<): the gated subset of P(alpha,beta,<).

    Branch (a) is open iff m0 > 0 and (m1 = 0, or (1,0)<(1,1) and
    alpha_1 + A >= B, or (1,1)<(1,0) and beta_1 + B <= A); it recurses with
    (A - s, B).  Branch (b) mirrors this with (A, B - s).  Ties open both.
    Only A - B matters (translation invariance), which the memo key exploits.
    """
    A, B, s = Fraction(A), Fraction(B), Fraction(s)
    assert s > 0
    o = minimal_representative(o, alpha, beta)
    return _p_abs(alpha, beta, o.word, A - B, s)


def _p_abs(alpha, beta, word, D, s):
    key = (alpha, beta, word, D, s)
    got = _PAB_MEMO.get(key)
    if got is not None:
        return got
    from .orders import IndexOrder
    o = IndexOrder(word)
    m0, m1 = o.m0, o.m1
    if m0 == 0 and m1 == 0:
        out = frozenset({((), ())})
        _PAB_MEMO[key] = out
        return out
    # does the first a-index precede the first b-index?
    a_first = "a" in word and ("b" not in word or word.index("a") < word.index("b"))
    out = set()
    if m0 > 0 and (m1 == 0
                   or (a_first and part(alpha, 1) + D >= 0)
                   or (not a_first and part(beta, 1) - D <= 0)):
        r = procedure_a(alpha, beta, o)
        ro = minimal_representative(r.residual_order, *r.residual)
        for (mu, nu) in _p_abs(r.residual[0], r.residual[1], ro.word, D - s, s):
            out.add((punion(mu, (r.extracted,) if r.extracted else ()), nu))
    if m1 > 0 and (m0 == 0
                   or (a_first and part(alpha, 1) + D <= 0)
                   or (not a_first and part(beta, 1) - D >= 0)):
        r = procedure_b(alpha, beta, o)
        ro = minimal_representative(r.residual_order, *r.residual)
        for (mu, nu) in _p_abs(r.residual[0], r.residual[1], ro.word, D + s, s):
            out.add((mu, punion(nu, (r.extracted,) if r.extracted else ())))
    out = frozenset(out)
    _PAB_MEMO[key] = out
    return out


def p_abs_extremal(alpha, beta, o, A, B, s):
    """Lambda_{A,B;s}(mu,nu) for any member of P_{A,B;s} (all agree)."""
    members = p_abs_set(alpha, beta, o, A, B, s)
    if not members:
        raise ValueError("P_{A,B;s} is empty")
    it = iter(members)
    mu, nu = next(it)
    seq = lambda_ABs(mu, nu, A, B, s)
    for (mu2, nu2) in it:
        assert seq_eq(seq, lambda_ABs(mu2, nu2, A, B, s))
    return seq


def p_abs_is_extremal_member(alpha, beta, o, A, B, s, munu):
    """Lambda(munu) equals the extremal sequence iff munu is a member."""
    seq = lambda_ABs(munu[0], munu[1], A, B, s)
    ext = p_abs_extremal(alpha, beta, o, A, B, s)
    return seq_leq(seq, ext), seq_eq(seq, ext)
