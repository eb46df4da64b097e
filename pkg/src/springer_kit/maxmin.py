"""Maximal and minimal subrepresentation data: the gated-set route, the
recursive peeling algorithm, the sign twist, and the even-parts extension."""
from dataclasses import dataclass

from .pab import p_abs_set
from .partitions import ptrim, transpose
from .symbols import (GSCDatum, M_value, defect, distinct_odd_parts,
                      order_from_H, phi_N, phi_N_inverse)
from .multiplicity import even_part_pairs, lam_parts_odd, odd_core


def _require_odd(d):
    if any(x % 2 == 0 for x in d.lam):
        raise ValueError("datum %r has even parts" % (d.lam,))


def lambda_max_via_pab(d):
    """Phi-inverse of the unique member of P_{k,-k;2} at the canonical order."""
    _require_odd(d)
    (alpha, beta), k = phi_N(d)
    o = order_from_H(alpha, beta, k)
    members = p_abs_set(alpha, beta, o, k, -k, 2)
    assert len(members) == 1, (d, members)
    (mu, nu), = members
    return phi_N_inverse(mu, nu, k, d.N)


def sign_twist(d):
    """The datum whose Phi image is the transposed-swapped bipartition."""
    (alpha, beta), k = phi_N(d)
    return phi_N_inverse(transpose(beta), transpose(alpha), k, d.N)


def lambda_min(d):
    _require_odd(d)
    return sign_twist(lambda_max_via_pab(d))


# ------------------------------------------------------- recursive algorithm

@dataclass
class AlgorithmLevel:
    lam: tuple
    eps: tuple            # positional signs
    S: tuple              # the leading index set (1-based)
    J_plus: tuple
    J_minus: tuple
    tJ_plus: tuple
    tJ_minus: tuple
    bar1: int
    bar_eps1: int
    next_lam: tuple
    next_eps: tuple
    next_N: int


def lambda_max_algorithm(d):
    """The recursive construction of (lam-bar, eps-bar); returns the result
    datum and the per-level trace."""
    _require_odd(d)
    trace = []
    lam, eps = d.lam, d.eps_seq()
    bar_lam, bar_eps = _algorithm_rec(lam, eps, trace)
    delta = distinct_odd_parts(bar_lam)
    sign = {}
    for x, e in zip(bar_lam, bar_eps):
        if x in sign:
            assert sign[x] == e, (bar_lam, bar_eps)
        sign[x] = e
    out = GSCDatum(bar_lam, tuple(sign[p] for p in delta))
    assert M_value(out) == M_value(d), (d, out)
    return out, trace


def _algorithm_rec(lam, eps, trace):
    t = len(lam)
    if t == 0:
        return (), ()
    # index 1 plus every index whose sign repeats its predecessor's
    S = [1] + [i for i in range(2, t + 1) if eps[i - 1] == eps[i - 2]]
    Jp = [i for i in range(1, t + 1) if eps[i - 1] * (-1) ** (i + 1) == 1]
    Jm = [i for i in range(1, t + 1) if eps[i - 1] * (-1) ** (i + 1) == -1]
    sS = set(S)
    tJp = [i for i in Jp if i not in sS]
    tJm = [i for i in Jm if i not in sS]
    e1 = eps[0]
    t_opp = tJm if e1 == 1 else tJp     # tilde-J^(-eps(1))
    t_same = tJp if e1 == 1 else tJm
    bar1 = (sum(lam[i - 1] for i in S) - 2 * len(t_opp)
            - (1 + (-1) ** len(S)) // 2)
    rp = t - len(S)
    phi = sorted(tJp + tJm)
    assert len(phi) == rp
    next_lam = []
    next_eps = []
    for j, idx in enumerate(phi, start=1):
        if idx in t_same:
            next_lam.append(lam[idx - 1])
            next_eps.append(eps[idx - 1])
        else:
            next_lam.append(lam[idx - 1] + 2)
            next_eps.append(-eps[idx - 1])
    if len(S) % 2 == 0:
        next_lam.append(1)
        next_eps.append((-1) ** rp * e1)
    next_lam = tuple(next_lam)
    next_eps = tuple(next_eps)
    assert all(next_lam[i] >= next_lam[i + 1] for i in range(len(next_lam) - 1))
    next_N = sum(next_lam)
    assert next_N == sum(lam) - bar1 and next_N < sum(lam)
    assert bar1 % 2 == 1 and bar1 >= lam[0]
    trace.append(AlgorithmLevel(lam, eps, tuple(S), tuple(Jp), tuple(Jm),
                                tuple(tJp), tuple(tJm), bar1, e1,
                                next_lam, next_eps, next_N))
    rest_lam, rest_eps = _algorithm_rec(next_lam, next_eps, trace)
    assert not rest_lam or bar1 >= rest_lam[0]
    return (bar1,) + rest_lam, (e1,) + rest_eps


# ------------------------------------------------------------- even parts

def lambda_max_even(d):
    """First part of the odd core's maximum grown by twice the half-total of
    the even parts; everything else unchanged."""
    if defect(d) not in (0, 1):
        raise ValueError("defect %d outside {0,1}" % defect(d))
    if not lam_parts_odd(d.lam):
        raise ValueError("empty odd core")
    a = sum(even_part_pairs(d.lam))
    core_max = lambda_max_via_pab(odd_core(d))
    if a == 0:
        return core_max
    lam = ptrim((core_max.lam[0] + 2 * a,) + core_max.lam[1:])
    sign = dict(zip(distinct_odd_parts(core_max.lam), core_max.eps))
    # the grown first part is strictly larger than every remaining part and
    # inherits the sign of the core's first part
    sign[lam[0]] = sign[core_max.lam[0]]
    return GSCDatum(lam, tuple(sign[p] for p in distinct_odd_parts(lam)))


def lambda_min_even(d):
    return sign_twist(lambda_max_even(d))


def is_quasi_distinguished(lam):
    """All parts odd, every multiplicity at most 2."""
    from collections import Counter
    return all(x % 2 == 1 for x in lam) and \
        all(m <= 2 for m in Counter(lam).values())
