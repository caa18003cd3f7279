'''
Algebraic constructions of modular Golomb rulers.

singer(q)   (q^2+q+1, q+1) planar difference set
bose(q)     (q^2-1, q)
ruzsa(p)    (p^2-p, p-1)

plus point deletion and the two existence theorems built on them.
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import logging

from .core import Ruler, canonicalize, diff_profile, embed, verify_mgr
from .finitefield import field_create
from .internal._table1 import smallest_ruler
from .numtheory import crt, is_prime, is_prime_power, next_prime

log = logging.getLogger(__name__)

# prime powers used for 12 <= k <= 24
SINGER_MID_RANGE = (11, 13, 16, 17, 19, 23)


def _prime_power(q, what):
    pe = is_prime_power(q)
    if pe is None:
        raise ValueError(f"{what} needs a prime power, got {q}")
    return pe


@lru_cache(maxsize=64)
def singer(q: int) -> Ruler:
    '''
    Singer difference set in Z_{q^2+q+1}.

    With theta primitive in GF(q^3), D collects the exponents a (mod q^2+q+1)
    for which theta^a lies in the GF(q)-span of 1 and theta.

    Args:
        q (int): prime power.

    Returns:
        Ruler: canonical (q^2+q+1, q+1)-MGR in which every nonzero residue is a
        difference exactly once.

    Raises:
        ValueError: if q is not a prime power.
    '''
    p, e = _prime_power(q, "singer")
    n = q * q + q + 1
    # iterated multiplication only touches n elements, no log tables needed
    F = field_create(p, 3 * e, tables=False)
    theta = F.primitive
    sub = F.subfield(e)
    span = {F.add(c0, F.mul(c1, theta)) for c0 in sub for c1 in sub}
    residues = []
    y = F.one
    for a in range(n):
        if y in span:
            residues.append(a)
        y = F.mul(y, theta)
    if len(residues) != q + 1:
        raise AssertionError(f"singer({q}) produced {len(residues)} residues")
    r = canonicalize(Ruler(n, tuple(residues)))
    log.debug("singer(%d) = %s", q, r)
    return r


def bose(q: int) -> Ruler:
    '''
    Bose construction: {a in [0, q^2-2] : theta^a - theta in GF(q)} for
    primitive theta of GF(q^2).

    Returns:
        Ruler: canonical (q^2-1, q)-MGR.

    Raises:
        ValueError: if q is not a prime power or q < 3.
    '''
    p, e = _prime_power(q, "bose")
    if q < 3:
        raise ValueError(f"bose needs q >= 3 to give at least 3 marks, got {q}")
    F = field_create(p, 2 * e)
    theta = F.primitive
    sub = F.subfield(e)
    residues = []
    y = F.one
    for a in range(q * q - 1):
        if F.sub(y, theta) in sub:
            residues.append(a)
        y = F.mul(y, theta)
    if len(residues) != q:
        raise AssertionError(f"bose({q}) produced {len(residues)} residues")
    return canonicalize(Ruler(q * q - 1, tuple(residues)))


def ruzsa(p: int) -> Ruler:
    '''
    Ruzsa construction: t = i (mod p-1), t = g^i (mod p) for 1 <= i <= p-1,
    with g the least primitive root mod p.

    Returns:
        Ruler: canonical (p^2-p, p-1)-MGR.

    Raises:
        ValueError: if p is not a prime or p < 5.
    '''
    if not is_prime(p):
        raise ValueError(f"ruzsa needs a prime, got {p}")
    if p < 5:
        raise ValueError(f"ruzsa needs p >= 5 to give at least 3 marks, got {p}")
    g = field_create(p, 1).primitive.coeffs[0]
    residues = [crt([(i % (p - 1), p - 1), (pow(g, i, p), p)]) for i in range(1, p)]
    return canonicalize(Ruler(p * p - p, tuple(sorted(residues))))


def delete_points(r: Ruler, delta: int) -> Ruler:
    '''
    Drop the delta largest residues; a subset of a Sidon set is Sidon.

    Raises:
        ValueError: if delta < 0 or delta >= k - 2.
    '''
    if delta < 0 or delta >= r.k - 2:
        raise ValueError(f"can delete at most k-3 = {r.k - 3} points, asked for {delta}")
    return Ruler(r.v, r.residues[: r.k - delta])


def is_planar(r: Ruler) -> bool:
    '''True iff every nonzero residue occurs exactly once as a difference.'''
    mult = diff_profile(r).multiplicity
    return bool((mult[1:] == 1).all())


@dataclass(frozen=True)
class ExistencePlan:
    '''How exist_small builds its ruler: method, prime power, deletions, modulus.'''
    k: int
    method: str
    q: int | None
    delta: int
    v: int

    def to_dict(self):
        return {"k": self.k, "method": self.method, "q": self.q, "delta": self.delta, "v": self.v}


def exist_small_plan(k: int) -> ExistencePlan:
    '''
    Choose the construction exist_small(k) will use, without building it.

    Raises:
        ValueError: if k < 3.
    '''
    if k < 3:
        raise ValueError(f"order must be at least 3, got {k}")
    if k <= 11:
        v, _ = smallest_ruler(k)
        return ExistencePlan(k, "table", None, 0, v)
    if k <= 24:
        q = next(q for q in SINGER_MID_RANGE if q + 1 >= k)
    else:
        q = next_prime(k - 1)
    return ExistencePlan(k, "singer", q, q + 1 - k, q * q + q + 1)


def exist_small(k: int) -> Ruler:
    '''
    A (v,k)-MGR with v <= floor(3k^2/2).

    Published rulers for k <= 11, Singer sets of the orders 11, 13, 16, 17,
    19, 23 with deletion for 12 <= k <= 24, and the Singer set of the least
    prime p >= k-1 with deletion beyond.
    '''
    plan = exist_small_plan(k)
    if plan.method == "table":
        v, residues = smallest_ruler(k)
        r = Ruler(v, residues)
    else:
        r = delete_points(singer(plan.q), plan.delta)
    log.info("exist_small(%d): %s q=%s delta=%d v=%d", k, plan.method, plan.q, plan.delta, plan.v)
    return r


def exist_any(k: int, v: int) -> Ruler:
    '''
    A (v,k)-MGR for any v >= 3k^2 - 1, by embedding exist_small(k).

    Raises:
        ValueError: if v < 3k^2 - 1 (use the search module there).
    '''
    if v < 3 * k * k - 1:
        raise ValueError(f"exist_any needs v >= 3k^2-1 = {3 * k * k - 1}, got {v}")
    small = exist_small(k)
    r = embed(small, v)
    if not verify_mgr(r).valid:
        raise AssertionError(f"embedded ruler {r} does not verify")
    return r
