"""Intersection-cohomology multiplicities, combinatorially.

Two routes are kept deliberately separate:
  * raising_expansion: the production path.  Expands
    prod_{(a,b) in J} 1/(1 - t R_ab) s_(alpha,beta) exactly, via a
    right-to-left scan with deferred receiver assignment.
  * x_count + mult_bipartition: the independent oracle, a direct enumeration
    of raising configurations summed with permutation signs.
"""
from collections import defaultdict
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import factorial

from .partitions import part, psize, ptrim
from .symbols import (GSCDatum, defect, is_H,
                      order_from_H, phi_N, phi_N_inverse)


# ------------------------------------------------------------- t-polynomials

def tpoly_add(p, q, factor=1):
    out = dict(p)
    for d, c in q.items():
        v = out.get(d, 0) + factor * c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return out


def tpoly_at_one(p):
    return sum(p.values())


def format_tpoly(p):
    """Render like "1+t^2" (degrees ascending)."""
    if not p:
        return "0"
    bits = []
    for d in sorted(p):
        c = p[d]
        if d == 0:
            bits.append(str(c))
        else:
            mono = "t" if d == 1 else "t^%d" % d
            if c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append("%d%s" % (c, mono))
    out = bits[0]
    for b in bits[1:]:
        out += b if b.startswith("-") else "+" + b
    return out


# ------------------------------------------------------------------- oracle

def _coords(alpha, beta, o):
    """Word coordinates as (tag, index, initial value), in order position."""
    out = []
    ia = ib = 0
    for ch in o.word:
        if ch == "a":
            ia += 1
            out.append(("a", ia, part(alpha, ia)))
        else:
            ib += 1
            out.append(("b", ib, part(beta, ib)))
    return out


def x_count(alpha, beta, o, mu_vec, nu_vec):
    """|X(alpha,beta,<;mu,nu)|: raising configurations x in N^J with
    (alpha[x], beta[x]) = (mu_vec, nu_vec); vectors over Z^m0 x Z^m1."""
    coords = _coords(alpha, beta, o)
    r = len(coords)
    if len(mu_vec) != o.m0 or len(nu_vec) != o.m1:
        raise ValueError("target arity mismatch")
    target = []
    ia = ib = 0
    for (tg, i, _) in coords:
        target.append(mu_vec[i - 1] if tg == "a" else nu_vec[i - 1])
    if sum(target) != sum(c[2] for c in coords):
        return 0
    if r == 0:
        return 1
    values = [c[2] for c in coords]

    # process positions right to left: all pairs with later element q are
    # settled at stage q, where q must give exactly values[q] - target[q]
    def rec(q, values):
        if q == 0:
            return 1 if values[0] == target[0] else 0
        give = values[q] - target[q]
        if give < 0:
            return 0
        partners = [p for p in range(q) if coords[p][0] != coords[q][0]]
        if not partners:
            return rec(q - 1, values) if give == 0 else 0
        total = 0
        # distribute `give` among partners
        def distribute(idx, remaining, values):
            nonlocal total
            if idx == len(partners) - 1:
                v2 = list(values)
                v2[partners[idx]] += remaining
                total += rec(q - 1, v2)
                return
            for amt in range(remaining + 1):
                v2 = list(values)
                v2[partners[idx]] += amt
                distribute(idx + 1, remaining - amt, v2)
        distribute(0, give, values)
        return total

    return rec(r - 1, values)


def mult_bipartition(alpha, beta, o, mu, nu):
    """Signed sum over S_m0 x S_m1 of x_count to permuted-shifted targets."""
    m0, m1 = o.m0, o.m1
    if len(mu) > m0 or len(nu) > m1:
        return 0
    total = 0
    for w in permutations(range(1, m0 + 1)):
        sw = _perm_sign(w)
        muw = tuple(part(mu, w[i - 1]) + i - w[i - 1] for i in range(1, m0 + 1))
        for v in permutations(range(1, m1 + 1)):
            nuv = tuple(part(nu, v[j - 1]) + j - v[j - 1]
                        for j in range(1, m1 + 1))
            c = x_count(alpha, beta, o, muw, nuv)
            if c:
                total += sw * _perm_sign(v) * c
    return total


def _perm_sign(w):
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
              if w[i] > w[j])
    return -1 if inv & 1 else 1


# -------------------------------------------------------- production path

@lru_cache(maxsize=None)
def _absorb_options(pool):
    """Ways to remove units from a pending-pool multiset (sorted-desc tuple).

    Returns tuple of (removed_total, new_pool, ways); `ways` counts ordered
    removal vectors over the distinguishable givers.
    """
    groups = []
    i = 0
    while i < len(pool):
        j = i
        while j < len(pool) and pool[j] == pool[i]:
            j += 1
        groups.append((pool[i], j - i))
        i = j
    results = [(0, (), 1)]
    for c, m in groups:
        nxt = []
        for rem in combinations_with_replacement(range(c + 1), m):
            tot = sum(rem)
            ways = factorial(m)
            run = 1
            for t in range(1, m):
                if rem[t] == rem[t - 1]:
                    run += 1
                else:
                    ways //= factorial(run)
                    run = 1
            ways //= factorial(run)
            left = tuple(c - d for d in rem if c != d)
            for (t0, e0, w0) in results:
                nxt.append((t0 + tot, e0 + left, w0 * ways))
        results = nxt
    return tuple((t_, tuple(sorted(e, reverse=True)), w_)
                 for (t_, e, w_) in results)


def raising_expansion(alpha, beta, o):
    """map (mu, nu) -> t-polynomial: the signed Schur-straightened expansion
    of the product of cross-tag raising geometric series applied to
    s_(alpha,beta).  Its value at t = 1 is mult_bipartition to each target.

    Scan order positions right to left.  A position absorbs units pending
    for its tag (emitted by opposite-tag positions to its right) and emits
    new units destined for opposite-tag positions to its left; its value is
    final immediately, so the straightened target is built incrementally
    and the straightening sign accumulates as an inversion count.
    """
    coords = _coords(alpha, beta, o)
    r = len(coords)
    m = {"a": o.m0, "b": o.m1}
    n_total = psize(alpha) + psize(beta)
    # pending units after scanning down to position q live on positions < q:
    # total <= sum over those positions of (max final value - initial value)
    pendcap = [0] * (r + 1)
    acc = 0
    for q in range(r):
        tg, i, c0 = coords[q]
        acc += (n_total - 1 + i) - c0
        pendcap[q + 1] = acc

    states = {((), (), (), ()): {0: 1}}
    for q in range(r - 1, -1, -1):
        tg, i, c0 = coords[q]
        opp_left = any(coords[p][0] != tg for p in range(q))
        cap = pendcap[q]
        new = defaultdict(dict)
        for (pa, pb, sa, sb), poly in states.items():
            pool_e = pa if tg == "a" else pb
            set_e = sa if tg == "a" else sb
            used = set(set_e)
            other_pool_total = sum(pb if tg == "a" else pa)
            for (absorbed, newpool, ways) in _absorb_options(pool_e):
                base = c0 + absorbed - i
                # shifted value w = c0 + absorbed - emitted - i
                for w in range(-m[tg], n_total):
                    if w in used:
                        continue
                    emitted = base - w
                    if emitted < 0:
                        continue
                    if emitted > 0 and not opp_left:
                        continue
                    if sum(newpool) + other_pool_total + emitted > cap:
                        continue
                    inv = sum(1 for x in set_e if x > w)
                    sgn_ways = -ways if inv & 1 else ways
                    nset = tuple(sorted(set_e + (w,)))
                    if tg == "a":
                        npa = newpool
                        npb = pb if emitted == 0 else tuple(
                            sorted(pb + (emitted,), reverse=True))
                        key = (npa, npb, nset, sb)
                    else:
                        npb = newpool
                        npa = pa if emitted == 0 else tuple(
                            sorted(pa + (emitted,), reverse=True))
                        key = (npa, npb, sa, nset)
                    tgt = new[key]
                    for d, c in poly.items():
                        dd = d + emitted
                        v = tgt.get(dd, 0) + sgn_ways * c
                        if v:
                            tgt[dd] = v
                        else:
                            tgt.pop(dd, None)
        states = {k: v for k, v in new.items() if v}

    out = {}
    for (pa, pb, sa, sb), poly in states.items():
        if pa or pb:
            continue
        mu = _shifted_to_partition(sa)
        nu = _shifted_to_partition(sb)
        if mu is None or nu is None:
            continue
        key = (mu, nu)
        merged = tpoly_add(out.get(key, {}), poly)
        if merged:
            out[key] = merged
        else:
            out.pop(key, None)
    return out


def _shifted_to_partition(svals):
    """Sorted distinct shifted values -> partition, or None if some entry
    would be negative."""
    sv = sorted(svals, reverse=True)
    mu = tuple(x + j + 1 for j, x in enumerate(sv))
    if any(x < 0 for x in mu):
        return None
    return ptrim(mu)


# ----------------------------------------------------------- local systems

def _require_odd_source(d):
    if any(x % 2 == 0 for x in d.lam):
        raise ValueError("source %r has even parts; the combinatorial "
                         "multiplicity rule requires odd parts only"
                         % (d.lam,))
    (alpha, beta), k = phi_N(d)
    if not is_H(alpha, beta, k):
        raise ValueError("Phi image (%r,%r) has multiplicities at defect %d"
                         % (alpha, beta, k))
    return (alpha, beta), k


def expansion_table(d):
    """Full t-graded multiplicity table of an odd-parts source datum."""
    (alpha, beta), k = _require_odd_source(d)
    o = order_from_H(alpha, beta, k)
    return raising_expansion(alpha, beta, o), k


@lru_cache(maxsize=512)
def _expansion_table_cached(class_key):
    d = GSCDatum(*class_key)
    table, k = expansion_table(d)
    return table, k


def local_system_table(d):
    """map GSCDatum.class_key -> (multiplicity, t-polynomial) over all
    same-defect data; sources must have odd parts."""
    table, k = _expansion_table_cached(d.class_key())
    N = d.N
    out = {}
    if k > 0:
        for (mu, nu), poly in table.items():
            d2 = phi_N_inverse(mu, nu, k, N)
            out[d2.class_key()] = (tpoly_at_one(poly), poly)
    else:
        seen = set()
        for (mu, nu), poly in table.items():
            if (mu, nu) in seen:
                continue
            seen.add((mu, nu))
            if mu == nu:
                combined = poly
            else:
                seen.add((nu, mu))
                combined = tpoly_add(poly, table.get((nu, mu), {}))
            if not combined:
                continue
            d2 = phi_N_inverse(mu, nu, 0, N)
            out[d2.class_key()] = (tpoly_at_one(combined), combined)
    return {ck: v for ck, v in out.items() if v[0] or v[1]}


def mult_local_systems(d, d2):
    """mult(C_lam, E_[eps]; C_lam', E_[eps']): 0 on defect mismatch, else the
    bipartition multiplicity via the canonical order (unordered-pair formula
    at defect 0)."""
    if defect(d) != defect(d2):
        return 0
    table = local_system_table(d)
    got = table.get(d2.class_key())
    return got[0] if got else 0


# ----------------------------------------------------------------- Pieri

def _horizontal_strips(p, c):
    """All partitions obtained from p by adding a horizontal strip of c cells
    (at most one new cell per column)."""
    out = []
    rows = len(p) + 1

    # strip condition: q_i <= p_{i-1} for i >= 2 (no two new cells stacked)
    def rec2(i, rem, acc):
        if rem < 0:
            return
        if i == rows:
            if rem == 0:
                out.append(ptrim(acc))
            return
        base = part(p, i + 1)
        cap = part(p, i) if i > 0 else base + rem
        lo = base
        hi = min(cap, base + rem) if i > 0 else base + rem
        prev_new = acc[-1] if acc else None
        for v in range(hi, lo - 1, -1):
            if prev_new is not None and v > prev_new:
                continue
            rec2(i + 1, rem - (v - base), acc + [v])

    rec2(0, c, [])
    return out


def pieri_extensions(base, cells):
    """Extend a multiplicity table by `cells` cells spread over horizontal
    strips on both components (each single extension is multiplicity-free)."""
    if cells == 0:
        return dict(base)
    out = defaultdict(int)
    for (gamma, delta), mult in base.items():
        for ca in range(cells + 1):
            for g2 in _horizontal_strips(gamma, ca):
                for d2 in _horizontal_strips(delta, cells - ca):
                    out[(g2, d2)] += mult
    return dict(out)


def even_part_pairs(lam):
    """Even parts come in equal pairs (a1 >= a2 >= ...); return the a_i."""
    evens = sorted((x for x in lam if x % 2 == 0), reverse=True)
    assert len(evens) % 2 == 0
    return tuple(evens[i] for i in range(0, len(evens), 2))


def odd_core(d):
    """The odd-parts sub-datum (same eps on the shared odd parts)."""
    lam_odd = ptrim(sorted((x for x in lam_parts_odd(d.lam)), reverse=True))
    return GSCDatum(lam_odd, d.eps)


def lam_parts_odd(lam):
    return tuple(x for x in lam if x % 2 == 1)


def springer_fiber_multiplicities(d):
    """Multiplicity table of a defect-<=1 datum with even parts allowed:
    start from the odd core's table and fold one Pieri extension per even
    pair size, then translate back through phi at the ambient N."""
    k = defect(d)
    if k not in (0, 1):
        raise ValueError("defect %d outside the Springer range {0,1}" % k)
    if not lam_parts_odd(d.lam):
        raise ValueError("empty odd core: the even-parts route needs at "
                         "least one odd part")
    core = odd_core(d)
    table, kc = _expansion_table_cached(core.class_key())
    assert kc == k, (d, core, kc, k)
    flat = {key: tpoly_at_one(poly) for key, poly in table.items()}
    flat = {key: v for key, v in flat.items() if v}
    for a in even_part_pairs(d.lam):
        flat = pieri_extensions(flat, a)
    N = d.N
    out = {}
    if k > 0:
        for (mu, nu), mult in flat.items():
            d2 = phi_N_inverse(mu, nu, k, N)
            out[d2.class_key()] = mult
    else:
        seen = set()
        for (mu, nu), mult in flat.items():
            if (mu, nu) in seen:
                continue
            seen.add((mu, nu))
            if mu != nu:
                seen.add((nu, mu))
                mult = mult + flat.get((nu, mu), 0)
            if not mult:
                continue
            d2 = phi_N_inverse(mu, nu, 0, N)
            out[d2.class_key()] = mult
    return out
