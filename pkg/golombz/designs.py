'''
Optical orthogonal codes, cyclic Steiner 2-designs and relative difference
families over Z_v.

Usage:

from golombz import designs

code = designs.OocCode(13, ((0, 1, 4), (0, 2, 7)))
designs.verify_ooc(code).valid                 # True
designs.ooc_size_bound(62, 6)                  # 2
designs.certify_optimal_ooc(62, 6).verdict     # 'nonexistent'
designs.steiner_check(6, 2).verdict            # 'nonexistent'
designs.rdf_check(66, 6, 6, 1).verdict         # 'nonexistent'
'''

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import isqrt

import logging

import numpy as np

from .certify import INAPPLICABLE, INCONCLUSIVE, NONEXISTENT, Certificate, validator
from .core import VerifyReport, difference_vector
from .numtheory import (
    consecutive_non_two_squares, is_perfect_square, is_sum_three_squares,
    is_sum_two_squares, sum_n_squares_bounded,
)

log = logging.getLogger(__name__)

OOC_FAMILY_KINDS = ("thm4.3", "R-set", "n3-ell1", "n3-ell2", "k-half", "infinite")

# re-enumerate multisets when |T|^n stays below this, else rerun the DP
ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class OocCode:
    '''
    A (v,k,lambda_a,lambda_c) optical orthogonal code given by n base blocks.

    Attributes:
        v (int): modulus.
        blocks (tuple[tuple[int, ...], ...]): sorted k-subsets of [0, v).
        lambda_a (int): autocorrelation bound.
        lambda_c (int): cross-correlation bound.
    '''
    v: int
    blocks: tuple
    lambda_a: int = 1
    lambda_c: int = 1

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(x) for x in b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.v < 2:
            raise ValueError(f"modulus must be at least 2, got {self.v}")
        if not blocks:
            raise ValueError("a code needs at least one block")
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise ValueError(f"blocks must share one size, got sizes {sorted(sizes)}")
        for b in blocks:
            if len(set(b)) != len(b):
                raise ValueError(f"block {list(b)} repeats a residue")
            if b[0] < 0 or b[-1] >= self.v:
                raise ValueError(f"block {list(b)} leaves [0, {self.v})")

    @property
    def k(self):
        return len(self.blocks[0])

    @property
    def n(self):
        return len(self.blocks)

    def to_dict(self):
        return {"v": self.v, "lambda_a": self.lambda_a, "lambda_c": self.lambda_c,
                "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["v"], tuple(tuple(b) for b in data["blocks"]),
                       data.get("lambda_a", 1), data.get("lambda_c", 1))
        except (KeyError, TypeError) as e:
            raise ValueError(f"code record is missing field {e}") from e


@dataclass(frozen=True)
class OocReport:
    '''
    Correlation maxima of a code.

    Attributes:
        valid (bool): maxima within the declared lambda_a, lambda_c.
        auto_max (int): worst out-of-phase autocorrelation.
        auto_block (int | None): block index attaining it.
        auto_shift (int | None): shift attaining it.
        cross_max (int): worst cross-correlation over all shifts.
        cross_pair (tuple | None): block indices attaining it.
        cross_shift (int | None): shift attaining it.
        optimal (bool): valid with lambda = 1 and n equal to the size bound.
    '''
    valid: bool
    auto_max: int
    auto_block: int | None
    auto_shift: int | None
    cross_max: int
    cross_pair: tuple | None
    cross_shift: int | None
    optimal: bool

    def to_dict(self):
        return {
            "valid": self.valid,
            "auto": {"max": self.auto_max, "block": self.auto_block, "shift": self.auto_shift},
            "cross": {"max": self.cross_max,
                      "pair": list(self.cross_pair) if self.cross_pair else None,
                      "shift": self.cross_shift},
            "optimal": self.optimal,
        }


@dataclass(frozen=True)
class SteinerReport:
    '''A code checked as a cyclic S(2,k,v): leave {0} or the order-k subgroup.'''
    valid: bool
    leave_kind: str | None
    leave: tuple[int, ...]

    def to_dict(self):
        return {"valid": self.valid, "leave_kind": self.leave_kind, "leave": list(self.leave)}


def packing_vector(code: OocCode) -> np.ndarray:
    '''Combined multiplicity of the ordered differences of every block.'''
    return sum(difference_vector(b, code.v) for b in code.blocks)


def verify_packing(code: OocCode) -> VerifyReport:
    '''Difference-packing test: no nonzero difference occurs twice.'''
    mult = packing_vector(code)
    mult[0] = 0
    bad = np.flatnonzero(mult > 1)
    if bad.size == 0:
        return VerifyReport(True)
    d = int(bad[0])
    pairs = [(x, y) for b in code.blocks for x in b for y in b if x != y and (x - y) % code.v == d]
    return VerifyReport(False, (d, pairs[0], pairs[1]))


def ooc_size_bound(v: int, k: int) -> int:
    '''
    Largest possible size of a (v,k,1)-OOC: floor((v-1) / (k(k-1))).

    Raises:
        ValueError: unless v > k >= 2.
    '''
    if not v > k >= 2:
        raise ValueError(f"size bound needs v > k >= 2, got v={v}, k={k}")
    return (v - 1) // (k * (k - 1))


def is_optimal(v: int, k: int, n: int) -> bool:
    return n == ooc_size_bound(v, k)


def verify_ooc(code: OocCode) -> OocReport:
    '''
    Exact auto- and cross-correlation maxima over every shift.

    For lambda_a = lambda_c = 1 the verdict is cross-checked against the
    difference-packing test; the two must agree.

    Returns:
        OocReport: maxima, where they occur and the optimality flag.
    '''
    v = code.v
    auto_max, auto_at = 0, (None, None)
    for i, b in enumerate(code.blocks):
        mult = difference_vector(b, v)
        mult[0] = 0
        tau = int(mult.argmax())
        if mult[tau] > auto_max:
            auto_max, auto_at = int(mult[tau]), (i, tau)
    cross_max, cross_at = 0, (None, None)
    arrays = [np.asarray(b, dtype=np.int64) for b in code.blocks]
    for i, j in combinations(range(code.n), 2):
        corr = np.bincount(((arrays[i][:, None] - arrays[j][None, :]) % v).ravel(), minlength=v)
        tau = int(corr.argmax())
        if corr[tau] > cross_max:
            cross_max, cross_at = int(corr[tau]), ((i, j), tau)
    valid = auto_max <= code.lambda_a and cross_max <= code.lambda_c
    if code.lambda_a == code.lambda_c == 1:
        packed = verify_packing(code).valid
        if packed != valid:
            raise AssertionError(f"correlation and packing tests disagree on {code.to_dict()}")
    optimal = (valid and code.lambda_a == code.lambda_c == 1 and v > code.k
               and is_optimal(v, code.k, code.n))
    return OocReport(valid, auto_max, auto_at[0], auto_at[1], cross_max,
                     cross_at[0], cross_at[1], optimal)


def verify_cyclic_steiner(code: OocCode) -> SteinerReport:
    '''
    Check that a (v,k,1)-OOC is a cyclic S(2,k,v): its leave must be {0}
    (v = 1 mod k(k-1)) or the subgroup of Z_v of order k.
    '''
    mult = packing_vector(code)
    leave = tuple(int(d) for d in np.flatnonzero(mult == 0))
    if not verify_packing(code).valid:
        return SteinerReport(False, None, leave)
    v, k = code.v, code.k
    if leave == (0,):
        return SteinerReport(True, "trivial", leave)
    if v % k == 0 and leave == tuple(range(0, v, v // k)):
        return SteinerReport(True, "subgroup", leave)
    return SteinerReport(False, None, leave)


def _ooc_params(v, k):
    if v % 2:
        raise ValueError(f"the counting argument needs an even modulus, got {v}")
    if k < 2 or v <= k:
        raise ValueError(f"need v > k >= 2, got v={v}, k={k}")
    kk = k * (k - 1)
    n = (v - 1) // kk
    if n < 1:
        raise ValueError(f"v={v} is too small for an OOC of size >= 1 with k={k}")
    ell = (v - kk * n) // 2
    if not 1 <= ell <= kk // 2:
        raise ValueError(f"l={ell} outside [1, {kk // 2}]")
    S = [v // 4 - h for h in range(ell)]
    T = [h * (k - h) for h in range(k // 2 + 1)]
    return n, ell, S, T


def _sum_rows(T, n, top):
    # rows[j]: bitset of sums <= top reachable with exactly j elements of T
    mask = (1 << (top + 1)) - 1
    rows = [1]
    for _ in range(n):
        last = rows[-1]
        nxt = 0
        for t in T:
            nxt |= last << t
        rows.append(nxt & mask)
    return rows


def certify_optimal_ooc(v: int, k: int) -> Certificate:
    '''
    Counting argument for optimal (v,k,1)-OOCs with v = k(k-1)n + 2l.

    S = {floor(v/4) - h : 0 <= h < l}, T = {h(k-h) : 0 <= h <= k/2}. An optimal
    code needs some element of S to be a sum of exactly n elements of T.

    Returns:
        Certificate: nonexistent when no element of S is reachable, otherwise
        inconclusive with a representing tuple in the trace.

    Raises:
        ValueError: for odd v, or v outside the form above.
    '''
    n, ell, S, T = _ooc_params(v, k)
    params = {"v": v, "k": k}
    trace = {"n": n, "ell": ell, "S": S, "T": T}
    top = max(S)
    if top < 0:
        return Certificate(NONEXISTENT, "counting-ooc", params, trace)
    rows = _sum_rows(T, n, top)
    hits = [s for s in S if s >= 0 and (rows[n] >> s) & 1]
    if not hits:
        return Certificate(NONEXISTENT, "counting-ooc", params, trace)
    s = hits[0]
    parts, rest = [], s
    for c in range(n, 0, -1):
        for t in sorted(T, reverse=True):
            if t <= rest and (rows[c - 1] >> (rest - t)) & 1:
                parts.append(t)
                rest -= t
                break
    trace["representation"] = {"s": s, "parts": parts}
    return Certificate(INCONCLUSIVE, "counting-ooc", params, trace)


def _r_set(k, ell):
    if k % 2 == 0:
        return [(k - ell + 1) // 2 + h for h in range(ell)]
    if ell % 2 == 0:
        return [k - ell + 2 * h for h in range(ell)]
    return [k - ell + 2 * h + 1 for h in range(ell)]


def _infinite_k(ell, method):
    m = consecutive_non_two_squares(ell, method) + 1
    return 2 * m + ell - 1 if ell % 2 else 2 * m + ell


def _ooc_members(kind, params):
    if kind == "thm4.3":
        k, v_max = params["k"], params.get("v_max", 2000)
        kk = k * (k - 1)
        classes = {3: ([3 * kk + 2, 2 * kk + 2], 4 * kk), 5: ([kk + 2], 2 * kk),
                   7: ([kk + 2, 2 * kk + 2], 4 * kk)}.get(k % 8)
        if classes is None:
            return []
        residues, mod = classes
        return sorted((v, k) for r in residues for v in range(r, v_max + 1, mod))
    if kind == "R-set":
        k, ell = params["k"], params["ell"]
        if not 1 <= ell <= k * (k - 1) // 2:
            raise ValueError(f"l must lie in [1, k(k-1)/2], got {ell}")
        R = _r_set(k, ell)
        if any(is_sum_two_squares(r) for r in R):
            return []
        return [(2 * k * (k - 1) + 2 * ell, k)]
    if kind == "n3-ell1":
        out = []
        for a in range(params.get("a_max", 0) + 1):
            for c in range(params.get("c_max", 0) + 1):
                for k in (4 ** (a + 1) * (8 * c + 5), (4 ** (a + 1) * (24 * c + 7) + 2) // 3):
                    out.append((3 * k * (k - 1) + 2, k))
        return sorted(out)
    if kind == "n3-ell2":
        out = []
        for a in range(params.get("a_max", 0) + 1):
            for c in range(params.get("c_max", 0) + 1):
                for k in (4 ** (a + 3) * (8 * c + 5), (4 ** (a + 3) * (24 * c + 23) - 2) // 3):
                    out.append((3 * k * (k - 1) + 4, k))
        return sorted(out)
    if kind == "k-half":
        return [(2 * k * (k - 1) + 2, k)
                for k in range(params.get("k_min", 3), params.get("k_max", 24) + 1)
                if not is_sum_two_squares(k)]
    if kind == "infinite":
        ell = params["ell"]
        k = _infinite_k(ell, params.get("method", "scan"))
        return [(2 * k * (k - 1) + 2 * ell, k)]
    raise ValueError(f"kind must be one of {OOC_FAMILY_KINDS}, got {kind!r}")


def family_scan_ooc(kind: str, **params) -> list[tuple[int, int]]:
    '''
    Enumerate a family of (v,k) with no optimal (v,k,1)-OOC and confirm each
    member through certify_optimal_ooc.

    Kinds and parameters:
        thm4.3    k, v_max       congruence classes of v for odd k
        R-set     k, l           v = 2k(k-1)+2l when no element of R is a sum of two squares
        n3-ell1   a_max, c_max   v = 3k(k-1)+2
        n3-ell2   a_max, c_max   v = 3k(k-1)+4
        k-half    k_min, k_max   v = 2k(k-1)+2, k not a sum of two squares
        infinite  l, method      even k built from l consecutive non-sums of two squares

    Returns:
        list: certified (v, k); unconfirmed members are logged and dropped.
    '''
    if "l" in params:
        params["ell"] = params.pop("l")
    out = []
    for v, k in _ooc_members(kind, params):
        cert = certify_optimal_ooc(v, k)
        if cert.nonexistent:
            out.append((v, k))
        else:
            log.warning("%s member (%d,%d) not confirmed by the counting argument", kind, v, k)
    return out


def steiner_check(k: int, n: int) -> Certificate:
    '''
    Necessary condition for a cyclic S(2,k,k(k-1)n+k) with k even: kn/4
    (n even) or k(n-1)/4 (n odd) must be a sum of n squares, each at most k/2.

    Returns:
        Certificate: nonexistent when no such representation exists.

    Raises:
        ValueError: for odd k or n < 1.
    '''
    if k % 2 or k < 2:
        raise ValueError(f"steiner_check needs an even order, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    target = k * n // 4 if n % 2 == 0 else k * (n - 1) // 4
    bound = k // 2
    witness = sum_n_squares_bounded(target, n, bound)
    trace = {"v": k * (k - 1) * n + k, "target": target, "n": n, "bound": bound,
             "witness": list(witness.parts) if witness else None}
    params = {"k": k, "n": n}
    if witness is None:
        return Certificate(NONEXISTENT, "steiner-squares", params, trace)
    if n >= 4:
        trace["note"] = "always representable for n >= 4 by the four-square theorem"
    return Certificate(INCONCLUSIVE, "steiner-squares", params, trace)


def _plain_squares(target, n):
    if n == 1:
        return is_perfect_square(target)
    if n == 2:
        return is_sum_two_squares(target)
    if n == 3:
        return is_sum_three_squares(target)
    return target >= 0


def rdf_check(v: int, w: int, k: int, lam: int) -> Certificate:
    '''
    Necessary condition for a (Z_v, H, k, lambda) relative difference family
    with |H| = w and n = lambda(v-w) / (k(k-1)) base blocks.

    H lies in the even residues iff v/w is even; the target is kn - lambda*w
    then and kn otherwise. It must be a sum of n squares of integers k - 2a_i,
    so each part is at most k and shares the parity of k.

    Returns:
        Certificate: nonexistent, inconclusive, or inapplicable when n is not
        a positive integer.

    Raises:
        ValueError: for odd v or w not dividing v.
    '''
    if v % 2:
        raise ValueError(f"rdf_check needs an even modulus, got {v}")
    if w < 1 or v % w:
        raise ValueError(f"subgroup order {w} does not divide {v}")
    if k < 2 or lam < 1:
        raise ValueError(f"need k >= 2 and lambda >= 1, got k={k}, lambda={lam}")
    params = {"v": v, "w": w, "k": k, "lambda": lam}
    num = lam * (v - w)
    if num <= 0 or num % (k * (k - 1)):
        return Certificate(INAPPLICABLE, "rdf-squares", params,
                           {"numerator": num, "reason": "lambda(v-w) is not a positive multiple of k(k-1)"})
    n = num // (k * (k - 1))
    h_in_s = (v // w) % 2 == 0
    target = k * n - lam * w if h_in_s else k * n
    parity = "even" if k % 2 == 0 else "odd"
    witness = sum_n_squares_bounded(target, n, k, parity)
    trace = {"n": n, "h_in_s": h_in_s, "target": target, "bound": k, "parity": parity,
             "plain_sum_of_squares": _plain_squares(target, n),
             "witness": list(witness.parts) if witness else None}
    if witness is None:
        return Certificate(NONEXISTENT, "rdf-squares", params, trace)
    if n >= 4:
        trace["note"] = "n >= 4: the condition is nearly always met"
    return Certificate(INCONCLUSIVE, "rdf-squares", params, trace)


def _no_bounded_squares(target, n, bound, parity=None):
    # brute-force enumeration of nonincreasing n-tuples
    if target < 0:
        return True
    top = min(bound, isqrt(target))
    values = [h for h in range(top + 1) if parity is None or (h % 2 == 0) == (parity == "even")]
    if not values:
        return True
    if len(values) ** n > ENUMERATION_CAP:
        return sum_n_squares_bounded(target, n, bound, parity) is None
    return all(sum(h * h for h in t) != target for t in combinations_with_replacement(values, n))


@validator("counting-ooc")
def _check_counting_ooc(cert):
    v, k = cert.params["v"], cert.params["k"]
    n, ell, S, T = _ooc_params(v, k)
    t = cert.trace
    if (t.get("n"), t.get("ell"), t.get("S"), t.get("T")) != (n, ell, S, T):
        return False
    targets = set(S)
    if len(T) ** n <= ENUMERATION_CAP:
        return all(sum(c) not in targets for c in combinations_with_replacement(T, n))
    # independent DP over Python sets
    top = max(S)
    reach = {0}
    for _ in range(n):
        reach = {r + x for r in reach for x in T if r + x <= top}
    return not (reach & targets)


@validator("steiner-squares")
def _check_steiner(cert):
    k, n = cert.params["k"], cert.params["n"]
    target = k * n // 4 if n % 2 == 0 else k * (n - 1) // 4
    if cert.trace.get("target") != target:
        return False
    return _no_bounded_squares(target, n, k // 2)


@validator("rdf-squares")
def _check_rdf(cert):
    p = cert.params
    v, w, k, lam = p["v"], p["w"], p["k"], p["lambda"]
    num = lam * (v - w)
    if num <= 0 or num % (k * (k - 1)):
        return False
    n = num // (k * (k - 1))
    target = k * n - lam * w if (v // w) % 2 == 0 else k * n
    if cert.trace.get("target") != target or cert.trace.get("n") != n:
        return False
    return _no_bounded_squares(target, n, k, "even" if k % 2 == 0 else "odd")
