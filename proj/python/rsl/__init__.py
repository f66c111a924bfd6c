"""Exact computations around the extended rational shuffle theorem.

Thin wrapper over the C++ core: expansions cross the boundary as canonical
JSON and are decoded into plain dicts keyed by partition tuples, with
coefficients as {(qexp, texp): int} dicts.
"""

import json

from rsl import _core

__all__ = [
    "hikita",
    "qop",
    "compare",
    "check",
    "verifier_names",
    "nabla",
    "pair",
    "table",
    "paths",
    "count_parking_functions",
    "pf_stats",
]


def _decode_poly(terms):
    return {(t["q"], t["t"]): int(t["c"]) for t in terms}


def _decode_expansion(payload):
    data = json.loads(payload)
    out = {}
    for entry in data["coeffs"]:
        key = tuple(entry["partition"])
        value = {"poly": _decode_poly(entry["poly"])}
        if "qt_schur" in entry:
            value["qt_schur"] = [
                (tuple(d["partition"]), d["mult"]) for d in entry["qt_schur"]
            ]
        out[key] = value
    return out


def hikita(m, n, jobs=1):
    """Schur expansion of the Hikita polynomial of the (m, n) shape."""
    return _decode_expansion(_core.hikita_json(m, n, jobs))


def qop(m, n):
    """Schur expansion of Q_{m,n}(1)."""
    return _decode_expansion(_core.qop_json(m, n))


def compare(m, n):
    """True when the combinatorial and operator expansions agree."""
    return _core.compare(m, n)


def check(name, bound=8):
    """Run a named verifier; returns the report as a dict."""
    return json.loads(_core.check_json(name, bound))


def verifier_names():
    return list(_core.verifier_names())


def nabla(expr, inverse=False):
    """Apply the nabla operator to an expression like "e[3]"."""
    return _decode_expansion(_core.nabla_json(expr, inverse))


def pair(expr1, expr2):
    """Hall scalar product of two expressions, as a string."""
    return _core.pair(expr1, expr2)


def table(family="3k+1", kmax=4):
    """(q,t)-Schur coefficient table rows for one three-row family."""
    return json.loads(_core.table_json(family, kmax))


def paths(m, n):
    """Column arrays of all (m, n)-Dyck paths."""
    return _core.paths(m, n)


def count_parking_functions(m, n):
    return _core.count_parking_functions(m, n)


def pf_stats(m, n, col, labels):
    """ret/area/dinv/tdinv/word/pides of one parking function."""
    return _core.pf_stats(m, n, list(col), list(labels))
