'''
Nonexistence certificates for (v,k)-MGRs.

A certificate records which rule settles an instance and every intermediate
number the rule used, so that validate_certificate() can recompute the claim
from the trace alone.

Usage:

from golombz import certify

cert = certify.certify_mgr(94, 10)
cert.verdict                       # 'nonexistent'
cert.rule                          # 'counting2'
cert.trace["candidates"]           # [8, 12]
certify.validate_certificate(cert) # True
'''

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import logging

from .numtheory import (
    is_perfect_square, is_sum_two_squares, legendre_solvable, ternary_form_solvable,
)

log = logging.getLogger(__name__)

NONEXISTENT = "nonexistent"
INCONCLUSIVE = "inconclusive"
INAPPLICABLE = "inapplicable"

FAMILY_KINDS = ("main-nonexist", "new35-cor")


@dataclass(frozen=True)
class Certificate:
    '''
    Attributes:
        verdict (str): nonexistent, inconclusive or inapplicable.
        rule (str): the rule that produced the verdict.
        params (dict): the instance, e.g. {"v": 94, "k": 10}.
        trace (dict): intermediate integers and predicate outcomes.
    '''
    verdict: str
    rule: str
    params: dict = field(default_factory=dict)
    trace: dict = field(default_factory=dict)

    @property
    def nonexistent(self):
        return self.verdict == NONEXISTENT

    def to_dict(self):
        return {"verdict": self.verdict, "rule": self.rule, "params": dict(self.params), "trace": dict(self.trace)}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["verdict"], data["rule"], dict(data.get("params", {})), dict(data.get("trace", {})))
        except (KeyError, TypeError) as e:
            raise ValueError(f"certificate record is missing field {e}") from e


_VALIDATORS = {}


def validator(rule):
    '''Register the checker that re-derives certificates of the given rule.'''
    def register(fn):
        _VALIDATORS[rule] = fn
        return fn
    return register


def validate_certificate(cert: Certificate) -> bool:
    '''
    Recompute a certificate from its params and trace with independent
    arithmetic (brute-force square tests, enumeration, Legendre's criterion).

    Returns:
        bool: True iff every recorded claim holds and supports the verdict.

    Raises:
        ValueError: for an unknown rule.
    '''
    from . import designs  # noqa: F401  registers the design rules

    try:
        check = _VALIDATORS[cert.rule]
    except KeyError:
        raise ValueError(f"no validator for rule {cert.rule!r}") from None
    ok = bool(check(cert))
    if not ok:
        log.warning("certificate %s %s failed validation", cert.rule, cert.params)
    return ok


def _square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def _two_squares_brute(n):
    if n < 0:
        return False
    return any(_square(n - a * a) for a in range(isqrt(n) + 1))


def _mgr_ell(v, k):
    rest = v - (k * k - k)
    return rest // 2 if rest > 0 and rest % 2 == 0 else None


def _bose_connor(k):
    '''Necessary conditions for a (k^2-k+2, k)-MGR; the failed one, if any.'''
    r = k % 8
    trace = {"k_mod_8": r, "u": (k * k - k + 2) // 2}
    if r == 7:
        trace.update(k_minus_2=k - 2, k_minus_2_square=is_perfect_square(k - 2))
        return trace, True
    if r == 2:
        sq, two = is_perfect_square(k - 2), is_sum_two_squares(k)
        trace.update(k_minus_2_square=sq, k_two_squares=two)
        return trace, not (sq and two)
    if r in (3, 6):
        sq = is_perfect_square(k - 2)
        trace.update(k_minus_2_square=sq)
        return trace, not sq
    sign = 2 if r in (0, 1) else -2
    sq = is_perfect_square(k)
    trace.update(k_square=sq, form=[k - 2, sign])
    if not sq:
        return trace, True
    solution = ternary_form_solvable(k - 2, sign)
    trace["solution"] = list(solution) if solution else None
    return trace, solution is None


def _counting2(v, k, ell):
    if v % 4 == 2:
        cands = [k - 2 * ell + 2 + 4 * i for i in range(ell)]
    else:
        cands = [k - 2 * ell + 4 * i for i in range(ell)]
    return cands, [c for c in cands if is_perfect_square(c)]


def _new35_pairs(v, k, ell):
    '''(i, j, value, two-squares?) for every i whose square test passes.'''
    extra = 2 if v % 8 == 4 else 0
    rows = []
    for i in range(ell):
        if not is_perfect_square(k - 2 * ell + 4 * i):
            continue
        for j in range(ell - i):
            val = k - 2 * ell + 2 * i + 4 * j + extra
            rows.append([i, j, val, is_sum_two_squares(val)])
    return rows


def certify_mgr(v: int, k: int) -> Certificate:
    '''
    Apply the first rule that rules out a (v,k)-MGR.

    Rules, in order:
        trivial       v < k^2-k+1
        bose-connor   v = k^2-k+2, conditions by k mod 8
        counting2     v even, v = k^2-k+2l: no square among the parity candidates
        new35         v = 0 mod 4: no (i, j) with a square and a sum of two squares

    Args:
        v (int): modulus, v >= 1.
        k (int): order, k >= 3.

    Returns:
        Certificate: nonexistent with its trace, or inconclusive.
    '''
    if k < 3:
        raise ValueError(f"order must be at least 3, got {k}")
    if v < 1:
        raise ValueError(f"modulus must be positive, got {v}")
    params = {"v": v, "k": k}
    bound = k * k - k + 1
    if v < bound:
        return Certificate(NONEXISTENT, "trivial", params, {"bound": bound})
    if v == bound + 1:
        trace, fires = _bose_connor(k)
        if fires:
            return Certificate(NONEXISTENT, "bose-connor", params, trace)
        log.debug("bose-connor does not rule out (%d,%d)", v, k)
    ell = _mgr_ell(v, k)
    if ell is None:
        reason = "odd modulus" if v % 2 else "v = k^2-k+1"
        return Certificate(INCONCLUSIVE, "none", params, {"reason": reason})
    cands, squares = _counting2(v, k, ell)
    trace = {"ell": ell, "v_mod_4": v % 4, "candidates": cands, "squares": squares}
    if not squares:
        return Certificate(NONEXISTENT, "counting2", params, trace)
    if v % 4 == 0:
        rows = _new35_pairs(v, k, ell)
        if not any(r[3] for r in rows):
            return Certificate(NONEXISTENT, "new35", params,
                               {"ell": ell, "v_mod_8": v % 8, "pairs": rows})
        trace["new35_pairs"] = rows
    return Certificate(INCONCLUSIVE, "none", params, trace)


def _family_members(kind, param, ell=None):
    if kind == "main-nonexist":
        t = param
        if t < 1:
            raise ValueError(f"t must be positive, got {t}")
        out = []
        for part, k, offset in ((1, 4 * t * t + 4 * t + 4, 0), (2, 4 * t * t + 4 * t + 2, 0),
                                (3, 4 * t * t + 3, -2), (4, 4 * t * t + 1, -2)):
            for s in range(1, t + 1):
                out.append((k * k - k + 4 * s + offset, k, part))
        return out
    if kind == "new35-cor":
        n = param
        if ell is None or ell < 1 or n < ell + 1:
            raise ValueError(f"new35-cor needs ell >= 1 and n >= ell+1, got n={n}, ell={ell}")
        k = n * n - 2 * ell + 4
        v = k * k - k + 2 * ell
        if v % 8 == 0 and not is_sum_two_squares(k - 2):
            return [(v, k, 1)]
        if v % 8 == 4 and not is_sum_two_squares(k):
            return [(v, k, 2)]
        return []
    raise ValueError(f"kind must be one of {FAMILY_KINDS}, got {kind!r}")


def family_scan(kind: str, param: int, ell: int | None = None) -> list[tuple[int, int]]:
    '''
    Enumerate a nonexistence family and confirm every member with certify_mgr.

    Args:
        kind (str): "main-nonexist" (param t) or "new35-cor" (param n, with ell).
        param (int): t or n.
        ell (int, optional): l for new35-cor.

    Returns:
        list: (v, k) pairs, each certified nonexistent. Members the general
        rules fail to confirm are logged and left out.
    '''
    out = []
    for v, k, part in _family_members(kind, param, ell):
        cert = certify_mgr(v, k)
        if cert.nonexistent:
            out.append((v, k))
        else:
            log.warning("%s member (%d,%d) part %d not confirmed: %s", kind, v, k, part, cert.rule)
    return out


@validator("trivial")
def _check_trivial(cert):
    v, k = cert.params["v"], cert.params["k"]
    return cert.trace.get("bound") == k * k - k + 1 and v < k * k - k + 1


@validator("bose-connor")
def _check_bose_connor(cert):
    v, k = cert.params["v"], cert.params["k"]
    t = cert.trace
    if v != k * k - k + 2 or t.get("k_mod_8") != k % 8:
        return False
    r = k % 8
    if r == 7:
        return not _square(k - 2)
    if r == 2:
        return not (_square(k - 2) and _two_squares_brute(k))
    if r in (3, 6):
        return not _square(k - 2)
    if not _square(k):
        return t.get("k_square") is False
    sign = 2 if r in (0, 1) else -2
    # a x^2 + b y^2 - z^2 = 0 has a nontrivial solution iff Legendre's criterion holds
    return t.get("solution") is None and not legendre_solvable(k - 2, sign, -1)


@validator("counting2")
def _check_counting2(cert):
    v, k = cert.params["v"], cert.params["k"]
    ell = _mgr_ell(v, k)
    if ell is None or cert.trace.get("ell") != ell:
        return False
    base = k - 2 * ell + (2 if v % 4 == 2 else 0)
    cands = [base + 4 * i for i in range(ell)]
    return cands == cert.trace.get("candidates") and not any(_square(c) for c in cands)


@validator("new35")
def _check_new35(cert):
    v, k = cert.params["v"], cert.params["k"]
    ell = _mgr_ell(v, k)
    if ell is None or v % 4 or cert.trace.get("ell") != ell:
        return False
    extra = 2 if v % 8 == 4 else 0
    for i in range(ell):
        if not _square(k - 2 * ell + 4 * i):
            continue
        for j in range(ell - i):
            if _two_squares_brute(k - 2 * ell + 2 * i + 4 * j + extra):
                return False
    return True
