"""Closed forms and recurrences for hump totals and super-path counts.

Sequences:

* ``HC_n`` total humps over Dyck paths of semilength n
* ``HM_n`` total humps over Motzkin paths of length n
* ``SD_n`` / ``SM_n`` number of super Dyck / super Motzkin paths
* ``HS40_n`` total humps over double-Dyck paths of parameter n
* ``B_n`` half of ``sum_{j>=1} C(n,j) C(n-j,j)``, numerically ``HM_n``

Each has at least two independent routes. :data:`SEQUENCES` maps a
sequence name to its routes for the CLI.

``HC_0`` is a convention clash: the recurrence is seeded with
``HC_0 = 1`` (it stands in for the single hump of the arch ``UD`` wrapped
around an empty path) while the empty Dyck path has no humps. The
recurrence route returns the seed; the closed form rejects ``n = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from humplab.combinat import ConsistencyError, binomial, catalan, motzkin, motzkin_table

__all__ = [
    "hc_closed",
    "hc_recurrence",
    "hc_recurrence_table",
    "hm_closed",
    "hm_recurrence",
    "hm_recurrence_table",
    "b_closed",
    "trinomial_sum",
    "sd_closed",
    "sm_closed",
    "sm_recurrence",
    "sm_recurrence_table",
    "hs40",
    "hs40_closed",
    "s40",
    "SequenceSpec",
    "SEQUENCES",
    "sequence_value",
]


def _need(n: int, lo: int, name: str) -> None:
    if n < lo:
        raise ValueError(f"{name} needs n >= {lo}, got {n}")


def hc_closed(n: int) -> int:
    _need(n, 1, "hc_closed")
    return binomial(2 * n - 1, n)


@lru_cache(maxsize=4)
def _hc_table(n: int) -> tuple[int, ...]:
    c = [catalan(i) for i in range(n + 1)]
    hc = [1, 1]
    for m in range(2, n + 1):
        s = hc[m - 1]
        for j in range(1, m):
            s += hc[j - 1] * c[m - j] + c[j - 1] * hc[m - j]
        hc.append(s)
    return tuple(hc[: n + 1])


def _table_size(n: int) -> int:
    return max(32, 1 << n.bit_length())


def hc_recurrence_table(n: int) -> tuple[int, ...]:
    """``(HC_0, ..., HC_n)`` from the first-return recurrence, ``HC_0 = 1``."""
    _need(n, 0, "hc_recurrence")
    return _hc_table(_table_size(n))[: n + 1]


def hc_recurrence(n: int) -> int:
    return hc_recurrence_table(n)[n]


def trinomial_sum(n: int, start: int = 0) -> int:
    """``sum_{j>=start} C(n,j) C(n-j,j)``."""
    _need(n, 0, "trinomial_sum")
    return sum(binomial(n, j) * binomial(n - j, j) for j in range(start, n // 2 + 1))


def hm_closed(n: int) -> int:
    s = trinomial_sum(n, 1)
    if s % 2:
        raise ConsistencyError(f"HM_{n}: sum {s} is odd")
    return s // 2


b_closed = hm_closed


@lru_cache(maxsize=4)
def _hm_table(n: int) -> tuple[int, ...]:
    m = motzkin_table(n)
    hm = [0, 0]
    for i in range(2, n + 1):
        s = hm[i - 1]
        for k in range(2, i + 1):
            s += (1 + hm[k - 2]) * m[i - k] + m[k - 2] * hm[i - k]
        hm.append(s)
    return tuple(hm[: n + 1])


def hm_recurrence_table(n: int) -> tuple[int, ...]:
    _need(n, 0, "hm_recurrence")
    return _hm_table(_table_size(n))[: n + 1]


def hm_recurrence(n: int) -> int:
    return hm_recurrence_table(n)[n]


def sd_closed(n: int) -> int:
    _need(n, 1, "sd_closed")
    return binomial(2 * n, n)


def sm_closed(n: int) -> int:
    return trinomial_sum(n, 0)


@lru_cache(maxsize=4)
def _sm_table(n: int) -> tuple[int, ...]:
    m = motzkin_table(n)
    sm = [1, 1]
    for i in range(2, n + 1):
        sm.append(sm[i - 1] + 2 * sum(m[k - 2] * sm[i - k] for k in range(2, i + 1)))
    return tuple(sm[: n + 1])


def sm_recurrence_table(n: int) -> tuple[int, ...]:
    _need(n, 0, "sm_recurrence")
    return _sm_table(_table_size(n))[: n + 1]


def sm_recurrence(n: int) -> int:
    return sm_recurrence_table(n)[n]


def s40(n: int) -> int:
    """Number of double-Dyck paths of parameter n: ``C_a * C_b``."""
    _need(n, 0, "s40")
    a, b = (n + 1) // 2, (n + 2) // 2
    return catalan(a) * catalan(b)


def hs40(n: int) -> int:
    """Double-Dyck hump total as ``HC_a C_b + C_a HC_b``, a + b = n + 1."""
    _need(n, 1, "hs40")
    a, b = (n + 1) // 2, (n + 2) // 2
    return hc_closed(a) * catalan(b) + catalan(a) * hc_closed(b)


def hs40_closed(n: int) -> int:
    _need(n, 1, "hs40_closed")
    prod = (n + 3) * s40(n)
    if prod % 2:
        raise ConsistencyError(f"HS40_{n}: (n+3)*S(4,0;n) = {prod} is odd")
    return prod // 2


@dataclass(frozen=True)
class SequenceSpec:
    name: str
    routes: dict[str, Callable[[int], int]]
    first_n: int = 0
    description: str = ""


def _enum(kind: str, humps: bool) -> Callable[[int], int]:
    from humplab import paths

    def route(n: int) -> int:
        fam = paths.PathFamily(paths.FamilyKind.parse(kind), n)
        return paths.total_humps(fam) if humps else paths.count_enumerated(fam)

    route.__name__ = f"enum_{kind}_{'humps' if humps else 'count'}"
    return route


SEQUENCES: dict[str, SequenceSpec] = {
    s.name: s
    for s in [
        SequenceSpec("HC", {"closed": hc_closed, "rec": hc_recurrence, "enum": _enum("dyck", True)}, 1,
                     "total humps of Dyck paths of length 2n"),
        SequenceSpec("HM", {"closed": hm_closed, "rec": hm_recurrence, "enum": _enum("motzkin", True)}, 0,
                     "total humps of Motzkin paths of length n"),
        SequenceSpec("SD", {"closed": sd_closed, "enum": _enum("superdyck", False)}, 1,
                     "number of super Dyck paths of length 2n"),
        SequenceSpec("SM", {"closed": sm_closed, "rec": sm_recurrence, "enum": _enum("supermotzkin", False)}, 0,
                     "number of super Motzkin paths of length n"),
        SequenceSpec("HS40", {"closed": hs40, "prop": hs40_closed, "enum": _enum("doubledyck", True)}, 1,
                     "total humps of double-Dyck paths of parameter n"),
        SequenceSpec("B", {"closed": b_closed, "rec": hm_recurrence}, 0,
                     "half the sum over j>=1 of C(n,j)C(n-j,j)"),
        SequenceSpec("catalan", {"closed": catalan, "enum": _enum("dyck", False)}, 0, "Catalan numbers"),
        SequenceSpec("motzkin", {"rec": motzkin, "enum": _enum("motzkin", False)}, 0, "Motzkin numbers"),
    ]
}


def sequence_value(name: str, n: int, route: str | None = None) -> int:
    spec = SEQUENCES[name]
    fn = spec.routes[route or next(iter(spec.routes))]
    return fn(n)
