"""Command-line front end: mapping through the correspondence in both
directions, maxima/minima, multiplicity tables, enumeration, and the
verification harness.

Exit codes: 0 ok, 1 property failure, 2 input error, 3 internal cross-check
failure.
"""
import csv
import io
import json
import sys

import click

from .maxmin import (lambda_max_algorithm, lambda_max_even,
                     lambda_max_via_pab, lambda_min, lambda_min_even,
                     sign_twist)
from .multiplicity import (format_tpoly, local_system_table,
                           mult_local_systems, raising_expansion)
from .orders import IndexOrder
from .partitions import format_partition, parse_partition
from .symbols import (datum_from_class_key, defect, format_eps,
                      is_H, order_from_H, parse_eps, phi_N, phi_N_inverse,
                      enumerate_pport, symbol_of)
from .verify import SUITES, run_suite

CSV_HEADER = "N,lambda,eps,defect,lambda2,eps2,mult,tpoly"


def _fail(code, message):
    click.echo("error: %s" % message, err=True)
    sys.exit(code)


def _parse_datum(lam_text, eps_text, expect_n=None):
    try:
        lam = parse_partition(lam_text)
        d = parse_eps(lam, eps_text or "")
    except ValueError as exc:
        _fail(2, str(exc))
    if expect_n is not None and d.N != expect_n:
        _fail(2, "lambda %s has size %d, not N=%d"
              % (lam_text, d.N, expect_n))
    return d


def _emit(payload, as_json, lines):
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)


def _fmt(lam):
    return format_partition(lam)


@click.group()
def main():
    """Generalized Springer correspondence toolkit for SO(N)."""


@main.command("map")
@click.option("--N", "n", type=int, required=True)
@click.option("--lambda", "lam_text", required=True)
@click.option("--eps", "eps_text", default="")
@click.option("--json", "as_json", is_flag=True)
def cmd_map(n, lam_text, eps_text, as_json):
    """Map (lambda, eps) to its symbol and bipartition."""
    d = _parse_datum(lam_text, eps_text, expect_n=n)
    sym = symbol_of(d)
    (alpha, beta), k = phi_N(d)
    h = is_H(alpha, beta, k)
    order = order_from_H(alpha, beta, k).word if h else None
    a_head = [int(v) for v in sym.A.head]
    b_head = [int(v) for v in sym.B.head]
    tail_start = -len(d.lam)
    payload = {"command": "map", "N": n, "lambda": _fmt(d.lam),
               "eps": format_eps(d), "defect": k, "alpha": _fmt(alpha),
               "beta": _fmt(beta), "A_head": a_head, "B_head": b_head,
               "tail_start": tail_start, "h_condition": h, "order": order}
    lines = ["lambda: %s" % (_fmt(d.lam) or "-"),
             "eps: %s" % (format_eps(d) or "-"),
             "defect: %d" % k,
             "alpha: %s" % (_fmt(alpha) or "-"),
             "beta: %s" % (_fmt(beta) or "-"),
             "A: %s | tail from %d step -2"
             % (_fmt(tuple(a_head)) or "-", tail_start),
             "B: %s | tail from %d step -2"
             % (_fmt(tuple(b_head)) or "-", tail_start),
             "h_condition: %s" % ("true" if h else "false")]
    if h:
        lines.append("order: %s" % (order or "-"))
    else:
        lines.append("notice: no canonical order (repeated symbol terms)")
    _emit(payload, as_json, lines)


@main.command("unmap")
@click.option("--N", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--alpha", "alpha_text", default="")
@click.option("--beta", "beta_text", default="")
@click.option("--json", "as_json", is_flag=True)
def cmd_unmap(n, k, alpha_text, beta_text, as_json):
    """Map a bipartition at a given defect back to (lambda, eps)."""
    try:
        alpha = parse_partition(alpha_text)
        beta = parse_partition(beta_text)
        d = phi_N_inverse(alpha, beta, k, n)
    except ValueError as exc:
        _fail(2, str(exc))
    payload = {"command": "unmap", "N": n, "alpha": _fmt(alpha),
               "beta": _fmt(beta), "defect": k, "lambda": _fmt(d.lam),
               "eps": format_eps(d)}
    _emit(payload, as_json,
          ["lambda: %s" % (_fmt(d.lam) or "-"),
           "eps: %s" % (format_eps(d) or "-")])


def _extreme(which, lam_text, eps_text, method, allow_even, as_json):
    d = _parse_datum(lam_text, eps_text)
    has_even = any(x % 2 == 0 for x in d.lam)
    if has_even and not allow_even:
        _fail(2, "lambda %s has even parts (use --allow-even for "
              "defect <= 1 data)" % lam_text)
    if has_even:
        if defect(d) not in (0, 1):
            _fail(2, "even-parts route needs defect in {0,1}, got %d"
                  % defect(d))
        try:
            out = lambda_max_even(d) if which == "max" else lambda_min_even(d)
        except ValueError as exc:
            _fail(2, str(exc))
    else:
        routes = {}
        if method in ("pab", "both"):
            routes["pab"] = (lambda_max_via_pab(d) if which == "max"
                             else lambda_min(d))
        if method in ("algorithm", "both"):
            got, _trace = lambda_max_algorithm(d)
            routes["algorithm"] = (got if which == "max"
                                   else sign_twist(got))
        if len(routes) == 2 and not routes["pab"].same_class(
                routes["algorithm"]):
            _fail(3, "method disagreement: pab gives %s, algorithm gives %s"
                  % (_fmt(routes["pab"].lam), _fmt(routes["algorithm"].lam)))
        out = next(iter(routes.values()))
    payload = {"command": which, "N": d.N, "lambda": _fmt(d.lam),
               "eps": format_eps(d), "method": method,
               "result_lambda": _fmt(out.lam), "result_eps": format_eps(out)}
    _emit(payload, as_json,
          ["%s: %s / %s" % (which, _fmt(out.lam) or "-",
                            format_eps(out) or "-")])


@main.command("max")
@click.option("--lambda", "lam_text", required=True)
@click.option("--eps", "eps_text", default="")
@click.option("--method", type=click.Choice(["algorithm", "pab", "both"]),
              default="pab")
@click.option("--allow-even", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_max(lam_text, eps_text, method, allow_even, as_json):
    """The maximal datum with nonzero multiplicity from (lambda, eps)."""
    _extreme("max", lam_text, eps_text, method, allow_even, as_json)


@main.command("min")
@click.option("--lambda", "lam_text", required=True)
@click.option("--eps", "eps_text", default="")
@click.option("--method", type=click.Choice(["algorithm", "pab", "both"]),
              default="pab")
@click.option("--allow-even", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_min(lam_text, eps_text, method, allow_even, as_json):
    """The minimal datum with nonzero multiplicity from (lambda, eps)."""
    _extreme("min", lam_text, eps_text, method, allow_even, as_json)


def _csv_rows(d):
    table = local_system_table(d)
    n = d.N
    k = defect(d)
    rows = []
    for ck in sorted(table):
        d2 = datum_from_class_key(ck)
        m, poly = table[ck]
        rows.append([str(n), _fmt(d.lam), format_eps(d), str(k),
                     _fmt(d2.lam), format_eps(d2), str(m),
                     format_tpoly(poly)])
    return rows


def _echo_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


@main.command("mult")
@click.option("--lambda", "lam_text", required=True)
@click.option("--eps", "eps_text", default="")
@click.option("--lambda2", "lam2_text", default=None)
@click.option("--eps2", "eps2_text", default="")
@click.option("--table", "table_flag", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_mult(lam_text, eps_text, lam2_text, eps2_text, table_flag, as_json):
    """IC multiplicity from the first datum to the second (or --table)."""
    d = _parse_datum(lam_text, eps_text)
    if any(x % 2 == 0 for x in d.lam):
        _fail(2, "source lambda %s must have only odd parts" % lam_text)
    if not is_H(*phi_N(d)[0], phi_N(d)[1]):
        _fail(2, "source %s violates the no-multiplicities condition"
              % lam_text)
    if table_flag:
        _echo_csv(_csv_rows(d))
        return
    if lam2_text is None:
        _fail(2, "provide --lambda2 or --table")
    d2 = _parse_datum(lam2_text, eps2_text)
    if d2.N != d.N:
        _fail(2, "sizes differ: %d vs %d" % (d.N, d2.N))
    m = mult_local_systems(d, d2)
    poly = {}
    if defect(d) == defect(d2):
        got = local_system_table(d).get(d2.class_key())
        if got:
            poly = got[1]
    payload = {"command": "mult", "N": d.N, "lambda": _fmt(d.lam),
               "eps": format_eps(d), "lambda2": _fmt(d2.lam),
               "eps2": format_eps(d2), "mult": m,
               "tpoly": format_tpoly(poly)}
    _emit(payload, as_json, ["%d" % m])


@main.command("expand")
@click.option("--alpha", "alpha_text", default="")
@click.option("--beta", "beta_text", default="")
@click.option("--order", "order_word", default=None,
              help="word over a/b; defaults to the canonical order at --k")
@click.option("--k", "k", type=int, default=None)
def cmd_expand(alpha_text, beta_text, order_word, k):
    """The t-graded raising expansion of a bipartition at an order."""
    try:
        alpha = parse_partition(alpha_text)
        beta = parse_partition(beta_text)
        if order_word is not None:
            if set(order_word) - {"a", "b"}:
                raise ValueError("order word must use only a/b")
            o = IndexOrder(order_word)
            if o.m0 < len(alpha) or o.m1 < len(beta):
                raise ValueError("order %r too short for (%s,%s)"
                                 % (order_word, alpha_text, beta_text))
        else:
            if k is None:
                raise ValueError("provide --order or --k")
            if not is_H(alpha, beta, k):
                raise ValueError("no canonical order: repeated symbol terms")
            o = order_from_H(alpha, beta, k)
    except ValueError as exc:
        _fail(2, str(exc))
    table = raising_expansion(alpha, beta, o)
    click.echo("order: %s" % (o.word or "-"))
    for (mu, nu) in sorted(table):
        click.echo("%s | %s : %s" % (_fmt(mu) or "-", _fmt(nu) or "-",
                                     format_tpoly(table[(mu, nu)])))


@main.command("enumerate")
@click.option("--N", "n", type=int, required=True)
@click.option("--table", "table_flag", is_flag=True,
              help="full multiplicity CSV over all odd-parts sources")
def cmd_enumerate(n, table_flag):
    """All (lambda, [eps]) data of size N, one line per sign-class."""
    if n < 1:
        _fail(2, "N must be positive")
    data = enumerate_pport(n)
    if not table_flag:
        for d in data:
            click.echo("%s / %s / defect %d"
                       % (_fmt(d.lam), format_eps(d) or "-", defect(d)))
        return
    rows = []
    for d in data:
        if any(x % 2 == 0 for x in d.lam):
            continue
        rows.extend(_csv_rows(d))
    _echo_csv(rows)


@main.command("verify")
@click.option("--suite", required=True,
              type=click.Choice(sorted(SUITES) + ["all"]))
@click.option("--max-N", "max_n", type=int, required=True)
@click.option("--jobs", type=int, default=1, envvar="SPRINGER_KIT_JOBS")
@click.option("--json", "as_json", is_flag=True)
def cmd_verify(suite, max_n, jobs, as_json):
    """Run a property suite exhaustively up to max-N; exit 1 on failure."""
    if max_n < 1:
        _fail(2, "max-N must be positive")
    if jobs < 1:
        _fail(2, "jobs must be positive")
    reports = run_suite(suite, max_n, jobs)
    ok = all(r.ok for r in reports)
    if as_json:
        click.echo(json.dumps(
            {"command": "verify", "max_n": max_n, "ok": ok,
             "reports": [r.to_dict() for r in reports]}, sort_keys=True))
    else:
        for r in reports:
            click.echo("suite %-10s max-N %-3d cases %-6d failures %-3d "
                       "(%d ms)" % (r.suite, r.max_n, r.cases,
                                    len(r.failures), r.elapsed_ms))
            for (inp, expected, got) in r.failures:
                click.echo("  FAIL %s | expected %s | got %s"
                           % (inp, expected, got))
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
