"""Registry of identities, each checked by exact evaluation over a range of n.

Identities come in three kinds, which decide how far a check may go:

``formula``
    both sides are closed forms or recurrences; cheap up to ``FORMULA_CAP``.
``hook``
    one side sums hook-length counts over partitions; capped per identity.
``enum``
    one side walks every lattice path; capped by the path family.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from humplab import formulas as F
from humplab import paths as P
from humplab.combinat import CapExceeded, binomial, catalan, motzkin
from humplab.partitions import hook_sum, s11_closed, s21_bracket, s21_closed, strip_sum_closed, syt_count

__all__ = [
    "FORMULA_CAP",
    "Identity",
    "IdentityReport",
    "UnknownIdentity",
    "RangeError",
    "registry",
    "get",
    "check",
    "check_all",
]

FORMULA_CAP = 500


class UnknownIdentity(KeyError):
    pass


class RangeError(ValueError):
    """Requested range starts below where the identity is known to hold."""


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    lhs: Callable[[int], int]
    rhs: Callable[[int], int]
    valid_from: int
    kind: str = "formula"
    max_n: int = FORMULA_CAP
    routes: tuple[str, str] = ("", "")


@dataclass
class IdentityReport:
    id: str
    lo: int
    hi: int
    failures: list[tuple[int, int, int]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "lo": self.lo,
            "hi": self.hi,
            "pass": self.passed,
            "failures": [{"n": n, "lhs": str(a), "rhs": str(b)} for n, a, b in self.failures],
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _hc0(k: int) -> int:
    # C(2k-1, k) with the HC_0 = 1 seed at k = 0
    return 1 if k == 0 else binomial(2 * k - 1, k)


def _dyck_humps_31_rhs(n: int) -> int:
    s = _hc0(n - 1)
    for j in range(1, n):
        # C_{j-1} in the second product; see docs/identities.md
        s += _hc0(j - 1) * catalan(n - j) + catalan(j - 1) * _hc0(n - j)
    return s


@lru_cache(maxsize=4)
def _b_and_m(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(F.b_closed(i) for i in range(n + 1)), tuple(motzkin(i) for i in range(n + 1))


def _motzkin_011_rhs(n: int) -> int:
    b, m = _b_and_m(max(32, 1 << n.bit_length()))
    s = b[n - 1]
    for k in range(2, n + 1):
        s += (1 + b[k - 2]) * m[n - k] + m[k - 2] * b[n - k]
    return s


def _motzkin_222_rhs(n: int) -> int:
    first, second = s21_bracket(n)
    return first + second


def _catalan_convolution(n: int) -> int:
    return sum(catalan(j - 1) * catalan(n - j) for j in range(1, n + 1))


def _family(kind: str, humps: bool) -> Callable[[int], int]:
    def route(n: int) -> int:
        fam = P.PathFamily(P.FamilyKind.parse(kind), n)
        return P.total_humps(fam) if humps else P.count_enumerated(fam)

    return route


def _cap(kind: str) -> int:
    return P.enumeration_cap(P.FamilyKind.parse(kind))


def _build() -> list[Identity]:
    I = Identity
    ids = [
        # Catalan-side primitives
        I("catalan-convolution", "C_n = sum_{j=1}^n C_{j-1} C_{n-j}",
          catalan, _catalan_convolution, 1, routes=("catalan", "convolution")),
        I("half-catalan", "2 C(2k-1,k) = (k+1) C_k",
          lambda k: 2 * binomial(2 * k - 1, k), lambda k: (k + 1) * catalan(k), 1,
          routes=("binomial", "catalan")),
        I("catalan-equals-syt-rectangle", "C_n = f^(n,n)",
          catalan, lambda n: syt_count((n, n)) if n else 1, 0, "hook", 60,
          routes=("catalan", "syt_count")),
        I("catalan-equals-dyck-count", "C_n = number of Dyck paths of length 2n",
          catalan, _family("dyck", False), 0, "enum", _cap("dyck"),
          routes=("catalan", "enumerate")),
        I("motzkin-equals-count", "M_n = number of Motzkin paths of length n",
          motzkin, _family("motzkin", False), 0, "enum", _cap("motzkin"),
          routes=("motzkin", "enumerate")),
        # Dyck humps
        I("hc-closed-equals-recurrence", "C(2n-1,n) = HC_n from the first-return recurrence",
          F.hc_closed, F.hc_recurrence, 1, routes=("hc_closed", "hc_recurrence")),
        I("hc-equals-dyck-humps", "C(2n-1,n) = total humps over Dyck paths of length 2n",
          F.hc_closed, _family("dyck", True), 1, "enum", _cap("dyck"),
          routes=("hc_closed", "total_humps")),
        I("dyck-humps-31", "C(2n-1,n) = C(2n-3,n-1) + sum_j (C(2j-3,j-1) C_{n-j} + C_{j-1} C(2n-2j-1,n-j))",
          _hc0, _dyck_humps_31_rhs, 1, routes=("binomial", "binomial sum")),
        I("hc-equals-hook-syt", "HC_n = f^(n,1^n)",
          F.hc_closed, lambda n: syt_count((n,) + (1,) * n), 1, "hook", 60,
          routes=("hc_closed", "syt_count")),
        I("sd-equals-2hc", "SD_n = C(2n,n) = 2 HC_n",
          F.sd_closed, lambda n: 2 * F.hc_closed(n), 1, routes=("sd_closed", "hc_closed")),
        I("sd-equals-super-dyck-count", "C(2n,n) = number of super Dyck paths of length 2n",
          F.sd_closed, _family("superdyck", False), 1, "enum", _cap("superdyck"),
          routes=("sd_closed", "enumerate")),
        # Motzkin humps
        I("hm-closed-equals-recurrence", "HM_n closed form = first-return recurrence",
          F.hm_closed, F.hm_recurrence, 0, routes=("hm_closed", "hm_recurrence")),
        I("hm-equals-motzkin-humps", "HM_n closed form = total humps over Motzkin paths",
          F.hm_closed, _family("motzkin", True), 0, "enum", _cap("motzkin"),
          routes=("hm_closed", "total_humps")),
        # holds from n = 1 as well (both sides 0), although only n >= 2 is needed
        I("recurrence-motzkin-011", "B_n = B_{n-1} + sum_{k=2}^n ((1+B_{k-2}) M_{n-k} + M_{k-2} B_{n-k})",
          F.b_closed, _motzkin_011_rhs, 1, routes=("b_closed", "b recurrence step")),
        # fails at n = 1 (rhs is 1, lhs 0); holds for n >= 2
        I("motzkin-path-222", "2 sum_{j>=1} C(n,j)C(n-j,j) = S(2,1;n) closed-form bracket",
          lambda n: 2 * F.trinomial_sum(n, 1), _motzkin_222_rhs, 2, routes=("trinomial_sum", "s21 bracket")),
        I("motzkin-equals-s30", "M_n = S(3,0;n)",
          motzkin, lambda n: hook_sum((3, 0), n), 0, "hook", 40, routes=("motzkin", "hook_sum")),
        I("hm-equals-s21-minus-1", "HM_n = S(2,1;n) - 1",
          F.hm_closed, lambda n: hook_sum((2, 1), n) - 1, 0, "hook", 60, routes=("hm_closed", "hook_sum")),
        # the closed form gives 5/4 at n = 1
        I("s21-closed-equals-hook-sum", "S(2,1;n) closed form = hook sum",
          s21_closed, lambda n: hook_sum((2, 1), n), 2, "hook", 60, routes=("s21_closed", "hook_sum")),
        I("s11-closed-equals-hook-sum", "S(1,1;n) = 2^(n-1)",
          s11_closed, lambda n: hook_sum((1, 1), n), 1, "hook", 60, routes=("s11_closed", "hook_sum")),
        I("sm-recurrence-equals-closed", "SM_n recurrence = sum_j C(n,j)C(n-j,j)",
          F.sm_recurrence, F.sm_closed, 0, routes=("sm_recurrence", "sm_closed")),
        I("sm-equals-2hm-plus-1", "SM_n = 2 HM_n + 1",
          F.sm_closed, lambda n: 2 * F.hm_closed(n) + 1, 0, routes=("sm_closed", "hm_closed")),
        I("sm-equals-super-motzkin-count", "SM_n = number of super Motzkin paths of length n",
          F.sm_closed, _family("supermotzkin", False), 0, "enum", _cap("supermotzkin"),
          routes=("sm_closed", "enumerate")),
        # double-Dyck
        I("s40-equals-double-dyck-count", "C_a C_b = number of double-Dyck paths",
          F.s40, _family("doubledyck", False), 0, "enum", _cap("doubledyck"),
          routes=("s40", "enumerate")),
        I("hs40-product-equals-closed", "HC_a C_b + C_a HC_b = (n+3)/2 S(4,0;n)",
          F.hs40, F.hs40_closed, 1, routes=("hs40", "hs40_closed")),
        I("hs40-equals-double-dyck-humps", "HC_a C_b + C_a HC_b = total humps over double-Dyck paths",
          F.hs40, _family("doubledyck", True), 1, "enum", _cap("doubledyck"),
          routes=("hs40", "total_humps")),
    ]
    for k, cap in ((2, 40), (3, 40), (4, 25), (5, 25)):
        ids.append(I(f"strip-s{k}0-closed-equals-hook-sum", f"S({k},0;n) closed form = hook sum",
                     lambda n, k=k: strip_sum_closed(k, n), lambda n, k=k: hook_sum((k, 0), n), 0, "hook", cap,
                     routes=("strip_sum_closed", "hook_sum")))
    return ids


def registry() -> list[Identity]:
    """All registered identities in a fixed order."""
    return _build()


def get(identity_id: str, identities: Sequence[Identity] | None = None) -> Identity:
    for ident in identities if identities is not None else registry():
        if ident.id == identity_id:
            return ident
    raise UnknownIdentity(f"unknown identity {identity_id!r}")


def check(identity: str | Identity, lo: int, hi: int) -> IdentityReport:
    """Evaluate both sides for every n in [lo, hi] and record mismatches."""
    ident = get(identity) if isinstance(identity, str) else identity
    if lo < ident.valid_from:
        raise RangeError(f"{ident.id} holds from n={ident.valid_from}; got lo={lo}")
    if hi < lo:
        raise RangeError(f"empty range [{lo}, {hi}]")
    if hi > ident.max_n:
        raise CapExceeded(f"{ident.id} ({ident.kind} route) is capped at n={ident.max_n}; got hi={hi}")
    t0 = time.perf_counter()
    report = IdentityReport(ident.id, lo, hi)
    for n in range(lo, hi + 1):
        a, b = ident.lhs(n), ident.rhs(n)
        if a != b:
            report.failures.append((n, a, b))
    report.elapsed = time.perf_counter() - t0
    return report


def check_all(hi_formula: int = 200, hi_enum: int = 12, identities: Sequence[Identity] | None = None,
              workers: int = 1, lo: int | None = None) -> list[IdentityReport]:
    """Check every identity from its ``valid_from`` up to the cap for its kind.

    Enumeration identities use ``hi_enum``, the rest ``hi_formula``; both are
    clipped to the identity's own ``max_n``. ``lo`` raises the start of every
    range. Reports keep registry order.
    """
    if hi_formula < 1 or hi_enum < 1:
        raise ValueError("caps must be positive")
    identities = registry() if identities is None else list(identities)

    def run(ident: Identity) -> IdentityReport:
        start = max(ident.valid_from, lo or 0)
        hi = min(hi_enum if ident.kind == "enum" else hi_formula, ident.max_n)
        return check(ident, start, max(hi, start))

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(run, identities))
    return [run(i) for i in identities]
