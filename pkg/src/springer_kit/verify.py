"""Exhaustive property suites over enumerated data.

Each suite runs a per-instance checker over a deterministic instance list
(optionally fanned out over worker processes) and returns a
VerificationReport; results are merged in enumeration order regardless of
completion order, so output is reproducible for any job count.
"""
import multiprocessing
import time
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction

from .maxmin import (is_quasi_distinguished, lambda_max_algorithm,
                     lambda_max_even, lambda_max_via_pab, lambda_min,
                     lambda_min_even, sign_twist)
from .multiplicity import (lam_parts_odd, local_system_table,
                           mult_bipartition, raising_expansion,
                           springer_fiber_multiplicities, tpoly_at_one)
from .orders import inequivalent_orders
from .pab import p_abs_extremal, p_abs_set, p_set
from .partitions import (EventualSeq, bipartitions_of, dominance_leq,
                         lambda_ABs, seq_eq, seq_leq, transpose)
from .symbols import (codomain_count, datum_from_class_key, defect,
                      enumerate_pport, format_datum, h_prefix,
                      merged_symbol_seq, order_from_H, phi_N, phi_N_inverse)


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    cases: int = 0
    failures: list = field(default_factory=list)  # (input, expected, got)
    elapsed_ms: int = 0

    @property
    def ok(self):
        return not self.failures

    def merge(self, other):
        self.cases += other.cases
        self.failures.extend(other.failures)

    def to_dict(self):
        return {"suite": self.suite, "max_n": self.max_n,
                "cases": self.cases, "ok": self.ok,
                "failures": [list(f) for f in self.failures],
                "elapsed_ms": self.elapsed_ms}


def _fanout(checker, items, jobs):
    """Apply checker over items; results in item order for any job count."""
    if jobs <= 1 or len(items) <= 1:
        return [checker(it) for it in items]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return list(pool.imap(checker, items, chunksize=4))


def _run(suite, max_n, checker, items, jobs):
    t0 = time.monotonic()
    rep = VerificationReport(suite, max_n)
    for cases, failures in _fanout(checker, items, jobs):
        rep.cases += cases
        rep.failures.extend(failures)
    rep.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return rep


def _odd_data(max_n):
    return [d for n in range(1, max_n + 1) for d in enumerate_pport(n)
            if all(x % 2 == 1 for x in d.lam)]


# ----------------------------------------------------------------- bijection

def _check_bijection(d):
    fails = []
    (alpha, beta), k = phi_N(d)
    back = phi_N_inverse(alpha, beta, k, d.N)
    if not back.same_class(d):
        fails.append((format_datum(d), "phi round-trip", format_datum(back)))
    return 1, fails


def suite_bijection(max_n, jobs=1):
    items = []
    count_fails = []
    for n in range(1, max_n + 1):
        data = enumerate_pport(n)
        want = codomain_count(n)
        if len(data) != want:
            count_fails.append(("N=%d" % n, "count %d" % want,
                                "count %d" % len(data)))
        items.extend(data)
    rep = _run("bijection", max_n, _check_bijection, items, jobs)
    rep.failures = count_fails + rep.failures
    rep.cases += max_n
    return rep


# --------------------------------------------------------------------- order

def order_prefix_vector(d, n):
    """Integer partial sums of p_{lam,[eps]} down to the shared cutoff -n-2.

    Every merged symbol sequence at size n has a head of length t followed
    by two rays (-t, 2) of the same parity, so all of them materialize to
    exactly n+4 terms down to the cutoff and coincide below it; termwise
    comparison of these vectors is equivalent to seq_leq on the sequences.
    """
    s = merged_symbol_seq(d)
    t = len(d.lam)
    terms = sorted((int(v) for v in s.head), reverse=True)
    v = -t
    while v >= -n - 2:
        terms += [v, v]
        v -= 2
    acc = 0
    out = []
    for x in terms:
        acc += x
        out.append(acc)
    assert len(out) == n + 4, (d.lam, out)
    return tuple(out)


@lru_cache(maxsize=64)
def _order_vectors(n):
    data = enumerate_pport(n)
    return data, [order_prefix_vector(d, n) for d in data]


def _check_order_block(args):
    n, idx = args
    data, vecs = _order_vectors(n)
    d = data[idx]
    vi = vecs[idx]
    fails = []
    cases = 0
    for j, d2 in enumerate(data):
        cases += 1
        lhs = dominance_leq(d.lam, d2.lam)
        rhs = all(a <= b for a, b in zip(vi, vecs[j]))
        if lhs != rhs:
            fails.append(("%r vs %r" % (d.lam, d2.lam),
                          "dominance %s" % lhs, "sequence order %s" % rhs))
    return cases, fails


def suite_order(max_n, jobs=1):
    items = [(n, i) for n in range(1, max_n + 1)
             for i in range(len(enumerate_pport(n)))]
    return _run("order", max_n, _check_order_block, items, jobs)


# --------------------------------------------------------------------- pab

_PAB_PARAMS = ((1, -1, 2), (0, 0, 2), (2, 0, 1),
               (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2)))


def _check_pab(args):
    alpha, beta, word = args
    from .orders import IndexOrder
    o = IndexOrder(word)
    fails = []
    full = p_set(alpha, beta, o)
    label = "(%r,%r) order %s" % (alpha, beta, word or "-")
    table = raising_expansion(alpha, beta, o)
    # oracle equivalence: production expansion at t = 1 vs the signed count
    targets = set(table) | full
    for (mu, nu) in sorted(targets):
        got = tpoly_at_one(table.get((mu, nu), {}))
        want = mult_bipartition(alpha, beta, o, mu, nu)
        if got != want:
            fails.append((label + " target (%r,%r)" % (mu, nu),
                          "oracle mult %d" % want, "expansion %d" % got))
    for (A, B, s) in _PAB_PARAMS:
        gated = p_abs_set(alpha, beta, o, A, B, s)
        plabel = label + " params (%s,%s;%s)" % (A, B, s)
        if not gated <= full:
            fails.append((plabel, "P_{A,B;s} subset of P", "extra members"))
        shifted = p_abs_set(alpha, beta, o, A + Fraction(7, 3),
                            B + Fraction(7, 3), s)
        if shifted != gated:
            fails.append((plabel, "translation invariance", "sets differ"))
        if not gated:
            continue
        ext = p_abs_extremal(alpha, beta, o, A, B, s)
        for (mu, nu) in sorted(full):
            seq = lambda_ABs(mu, nu, A, B, s)
            if not seq_leq(seq, ext):
                fails.append((plabel + " member (%r,%r)" % (mu, nu),
                              "Lambda <= extremal", "not below"))
            if seq_eq(seq, ext) != ((mu, nu) in gated):
                fails.append((plabel + " member (%r,%r)" % (mu, nu),
                              "extremal iff gated", "mismatch"))
    # Prop. mult at the canonical parameters: gated members have mult 1,
    # and a member of P hits the extremal sequence iff its mult is nonzero
    A, B, s = 1, -1, 2
    gated = p_abs_set(alpha, beta, o, A, B, s)
    for (mu, nu) in sorted(full):
        m = tpoly_at_one(table.get((mu, nu), {}))
        if (mu, nu) in gated and m != 1:
            fails.append((label + " member (%r,%r)" % (mu, nu),
                          "mult 1 for gated member", "mult %d" % m))
        seq = lambda_ABs(mu, nu, A, B, s)
        if gated:
            ext = p_abs_extremal(alpha, beta, o, A, B, s)
            if seq_eq(seq, ext) and m == 0:
                fails.append((label + " member (%r,%r)" % (mu, nu),
                              "nonzero mult at extremal target", "mult 0"))
    return 1, fails


def pab_instances(max_total):
    """All (alpha, beta, order-class) with S(alpha)+S(beta) <= max_total."""
    items = []
    for total in range(max_total + 1):
        for (alpha, beta) in bipartitions_of(total):
            for o in inequivalent_orders(alpha, beta):
                items.append((alpha, beta, o.word))
    return items


def suite_pab(max_n, jobs=1):
    """max_n is the bipartition-total cap here (instances grow very fast)."""
    return _run("pab", max_n, _check_pab, pab_instances(max_n), jobs)


# ----------------------------------------------------------------- max / min

def _check_max(d):
    fails = []
    label = format_datum(d)
    lmax = lambda_max_via_pab(d)
    if any(x % 2 == 0 for x in lmax.lam):
        fails.append((label, "odd-parts lambda-max", "%r" % (lmax.lam,)))
    table = local_system_table(d)
    got = table.get(lmax.class_key(), (0, {}))[0]
    if got != 1:
        fails.append((label, "mult 1 to lambda-max", "mult %d" % got))
    for ck, (m, _) in table.items():
        if not m:
            continue
        d2 = datum_from_class_key(ck)
        if d2.same_class(lmax):
            continue
        if not (dominance_leq(d2.lam, lmax.lam) and d2.lam != lmax.lam):
            fails.append((label + " target " + format_datum(d2),
                          "strictly below lambda-max", "not below"))
    # the largest symbol term of the maximum is strict
    (a2, b2), k2 = phi_N(lmax)
    pref = [v for (v, _, _) in h_prefix(a2, b2, k2)]
    if len(pref) > 1 and pref[0] <= pref[1]:
        fails.append((label, "strictly largest leading symbol term",
                      "%r" % (pref[:2],)))
    return 1, fails


def suite_max(max_n, jobs=1):
    return _run("max", max_n, _check_max, _odd_data(max_n), jobs)


def _check_min(d):
    fails = []
    label = format_datum(d)
    lmax = lambda_max_via_pab(d)
    lmin = lambda_min(d)
    if not sign_twist(lmin).same_class(lmax):
        fails.append((label, "twist of minimum is maximum",
                      format_datum(sign_twist(lmin))))
    for ck, (m, _) in local_system_table(d).items():
        if not m:
            continue
        e = sign_twist(datum_from_class_key(ck))
        if lmin.same_class(e):
            continue
        if not (dominance_leq(lmin.lam, e.lam) and lmin.lam != e.lam):
            fails.append((label + " twisted target " + format_datum(e),
                          "strictly above lambda-min", "not above"))
    return 1, fails


def suite_min(max_n, jobs=1):
    return _run("min", max_n, _check_min, _odd_data(max_n), jobs)


# --------------------------------------------------------------- transp / PP

def transp_rhs(slam):
    """transpose(slam) + ([0,-oo[_1)^2 as an EventualSeq."""
    tl = transpose(slam)
    m = (len(tl) + 1) // 2
    head = [Fraction((tl[i] if i < len(tl) else 0) - (i // 2))
            for i in range(2 * m)]
    tail = ((Fraction(-m), Fraction(1)), (Fraction(-m), Fraction(1)))
    return EventualSeq.make(head, tail)


def _check_transp(d):
    fails = []
    label = format_datum(d)
    (alpha, beta), k = phi_N(d)
    o = order_from_H(alpha, beta, k)
    coarse = p_abs_set(alpha, beta, o, k, -k, 2)
    fine = p_abs_set(alpha, beta, o, Fraction(k, 2), Fraction(-k, 2),
                     Fraction(1, 2))
    if coarse != fine:
        fails.append((label, "same gated set at s=2 and s=1/2",
                      "%r vs %r" % (sorted(coarse), sorted(fine))))
    lhs = lambda_ABs(alpha, beta, Fraction(k, 2), Fraction(-k, 2),
                     Fraction(1, 2)).scale(2)
    rhs = transp_rhs(sign_twist(d).lam)
    if not seq_eq(lhs, rhs):
        fails.append((label, "doubled sequence matches twisted transpose",
                      "sequences differ"))
    return 1, fails


def suite_transp(max_n, jobs=1):
    return _run("transp", max_n, _check_transp, _odd_data(max_n), jobs)


# ----------------------------------------------------------------- algorithm

def _check_algorithm(d):
    fails = []
    label = format_datum(d)
    want = lambda_max_via_pab(d)
    try:
        got, _trace = lambda_max_algorithm(d)
    except AssertionError as exc:
        fails.append((label, "recursive algorithm completes", repr(exc)))
        return 1, fails
    if not got.same_class(want):
        fails.append((label, format_datum(want), format_datum(got)))
    return 1, fails


def suite_algorithm(max_n, jobs=1):
    return _run("algorithm", max_n, _check_algorithm, _odd_data(max_n), jobs)


def _check_quasi(d):
    lmax = lambda_max_via_pab(d)
    if not is_quasi_distinguished(lmax.lam):
        return 1, [(format_datum(d), "quasi-distinguished maximum",
                    "%r" % (lmax.lam,))]
    return 1, []


def suite_quasi(max_n, jobs=1):
    return _run("quasi", max_n, _check_quasi, _odd_data(max_n), jobs)


# -------------------------------------------------------------- even / Pieri

def _even_data(max_n):
    return [d for n in range(1, max_n + 1) for d in enumerate_pport(n)
            if defect(d) in (0, 1) and lam_parts_odd(d.lam)]


def _check_even(d):
    fails = []
    label = format_datum(d)
    lmax = lambda_max_even(d)
    support = springer_fiber_multiplicities(d)
    got = support.get(lmax.class_key(), 0)
    if got != 1:
        fails.append((label, "mult 1 to even-parts maximum", "mult %d" % got))
    for ck, m in support.items():
        if not m:
            continue
        d2 = datum_from_class_key(ck)
        if d2.same_class(lmax):
            continue
        if not (dominance_leq(d2.lam, lmax.lam) and d2.lam != lmax.lam):
            fails.append((label + " target " + format_datum(d2),
                          "strictly below even-parts maximum", "not below"))
    if not sign_twist(lambda_min_even(d)).same_class(lmax):
        fails.append((label, "twist of even-parts minimum is maximum",
                      format_datum(lambda_min_even(d))))
    return 1, fails


def suite_pieri(max_n, jobs=1):
    return _run("pieri", max_n, _check_even, _even_data(max_n), jobs)


# ----------------------------------------------------------------- dispatch

SUITES = {
    "pab": suite_pab,
    "bijection": suite_bijection,
    "order": suite_order,
    "max": suite_max,
    "min": suite_min,
    "transp": suite_transp,
    "algorithm": suite_algorithm,
    "quasi": suite_quasi,
    "pieri": suite_pieri,
}

# the pab suite's knob is a bipartition-total cap; everything past 6 is
# prohibitively large, so the combined run clamps it
_ALL_PAB_CAP = 6


def run_suite(name, max_n, jobs=1):
    if name == "all":
        reports = []
        for key, fn in SUITES.items():
            cap = min(max_n, _ALL_PAB_CAP) if key == "pab" else max_n
            reports.append(fn(cap, jobs))
        return reports
    if name not in SUITES:
        raise ValueError("unknown suite %r" % name)
    return [SUITES[name](max_n, jobs)]
