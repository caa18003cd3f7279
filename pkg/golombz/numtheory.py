'''Exact integer predicates and witnesses.
This module provides squares, sums of two/three/n squares, primes, CRT and the
ternary quadratic forms used by the nonexistence certificates.'''

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, prod

import logging

log = logging.getLogger(__name__)

# factorization scope
MAX_N = 2**63 - 1


@dataclass(frozen=True)
class Factorization:
    '''Prime factorization as (prime, exponent) pairs sorted by prime.'''
    n: int
    pairs: tuple[tuple[int, int], ...]

    def value(self):
        return prod(p**e for p, e in self.pairs)

    def primes(self):
        return [p for p, _ in self.pairs]

    def as_dict(self):
        return dict(self.pairs)


@dataclass(frozen=True)
class SquaresWitness:
    '''A tuple of nonnegative parts whose squares sum to target.'''
    parts: tuple[int, ...]
    target: int

    def __post_init__(self):
        if sum(x * x for x in self.parts) != self.target:
            raise ValueError(f"parts {self.parts} do not square-sum to {self.target}")

    def to_dict(self):
        return {"parts": list(self.parts), "target": self.target}


def factorize(n: int) -> Factorization:
    '''
    Factor n by trial division up to sqrt(n).

    Args:
        n (int): integer with 1 <= n <= 2**63 - 1.

    Returns:
        Factorization: pairs (prime, exponent), primes strictly increasing.
        factorize(1) has no pairs.

    Raises:
        ValueError: if n is outside [1, 2**63 - 1].
    '''
    if n < 1 or n > MAX_N:
        raise ValueError(f"factorize needs 1 <= n <= 2**63-1, got {n}")
    pairs = []
    m = n
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            pairs.append((p, e))
    # 6j +- 1 wheel
    p = 5
    step = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            pairs.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        pairs.append((m, 1))
    return Factorization(n, tuple(pairs))


def is_perfect_square(n: int) -> bool:
    '''True iff n >= 0 and n = m*m for some integer m.'''
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def is_sum_two_squares(n: int) -> bool:
    '''
    Decide whether n = a^2 + b^2 using the factorization criterion:
    no prime p = 3 (mod 4) appears to an odd power.

    Args:
        n (int): nonnegative integer.

    Returns:
        bool: True iff n is a sum of two squares.
    '''
    if n < 0:
        return False
    if n == 0:
        return True
    for p, e in factorize(n).pairs:
        if p % 4 == 3 and e % 2 == 1:
            return False
    return True


def two_squares_witness(n: int) -> SquaresWitness | None:
    '''
    Find a <= b with a^2 + b^2 = n.

    Returns:
        SquaresWitness or None: two parts (a, b) when n is a sum of two squares.
    '''
    if not is_sum_two_squares(n):
        return None
    a = 0
    while 2 * a * a <= n:
        rest = n - a * a
        if is_perfect_square(rest):
            return SquaresWitness((a, isqrt(rest)), n)
        a += 1
    raise AssertionError(f"criterion and search disagree at {n}")


def is_sum_three_squares(n: int) -> bool:
    '''Legendre: n >= 0 is a sum of three squares iff n is not 4^a(8b+7).'''
    if n < 0:
        return False
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def three_squares_witness(n: int) -> SquaresWitness | None:
    '''Find a <= b <= c with a^2 + b^2 + c^2 = n, or None.'''
    if not is_sum_three_squares(n):
        return None
    a = 0
    while a * a <= n:
        w = two_squares_witness(n - a * a)
        if w is not None:
            return SquaresWitness(tuple(sorted((a,) + w.parts)), n)
        a += 1
    raise AssertionError(f"Legendre criterion and search disagree at {n}")


def sum_n_squares_bounded(target: int, n: int, bound: int, parity: str | None = None) -> SquaresWitness | None:
    '''
    Find n parts in [0, bound] whose squares sum to target.

    Dynamic program over (count, sum) with Python integers as bitsets;
    row c holds the sums reachable with exactly c parts.

    Args:
        target (int): the required sum of squares.
        n (int): number of parts, n >= 1.
        bound (int): largest allowed part.
        parity (str, optional): "even" or "odd" to force every part's parity.

    Returns:
        SquaresWitness or None: parts sorted in nonincreasing order.
    '''
    if n < 1:
        raise ValueError(f"need at least one part, got n={n}")
    if parity not in (None, "even", "odd"):
        raise ValueError(f"parity must be 'even', 'odd' or None, got {parity!r}")
    if target < 0 or bound < 0:
        return None
    allowed = [h for h in range(bound + 1)
               if parity is None or (h % 2 == 0) == (parity == "even")]
    squares = sorted({h * h for h in allowed if h * h <= target})
    if not squares:
        return None
    mask = (1 << (target + 1)) - 1
    rows = [1]
    for _ in range(n):
        last = rows[-1]
        nxt = 0
        for s in squares:
            nxt |= last << s
        rows.append(nxt & mask)
    if not (rows[n] >> target) & 1:
        return None
    parts = []
    rest = target
    for c in range(n, 0, -1):
        for s in reversed(squares):
            if s <= rest and (rows[c - 1] >> (rest - s)) & 1:
                parts.append(isqrt(s))
                rest -= s
                break
    return SquaresWitness(tuple(sorted(parts, reverse=True)), target)


def is_prime(n: int) -> bool:
    '''Trial-division primality test.'''
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    p = 5
    while p * p <= n:
        if n % p == 0 or n % (p + 2) == 0:
            return False
        p += 6
    return True


def next_prime(n: int) -> int:
    '''Smallest prime p >= n.'''
    p = max(n, 2)
    while not is_prime(p):
        p += 1
    return p


def is_prime_power(n: int) -> tuple[int, int] | None:
    '''Return (p, e) when n = p^e with e >= 1, otherwise None.'''
    if n < 2:
        return None
    pairs = factorize(n).pairs
    if len(pairs) != 1:
        return None
    return pairs[0]


def crt(pairs) -> int:
    '''
    Solve x = r_i (mod m_i) for pairwise coprime moduli.

    Args:
        pairs (iterable): (residue, modulus) pairs with modulus >= 1.

    Returns:
        int: the least nonnegative solution.

    Raises:
        ValueError: if two moduli share a factor.
    '''
    x, m = 0, 1
    for r, mi in pairs:
        if mi < 1:
            raise ValueError(f"modulus must be positive, got {mi}")
        if gcd(m, mi) != 1:
            raise ValueError(f"moduli not pairwise coprime: {mi} shares a factor with {m}")
        # x + m*t = r (mod mi)
        t = ((r - x) * pow(m, -1, mi)) % mi if mi > 1 else 0
        x += m * t
        m *= mi
        x %= m
    return x


def primes_3_mod_4(t: int) -> list[int]:
    '''The t smallest primes congruent to 3 mod 4.'''
    out = []
    p = 3
    while len(out) < t:
        if is_prime(p):
            out.append(p)
        p += 4
    return out


def consecutive_non_two_squares(t: int, method: str = "crt") -> int:
    '''
    Find s such that s+1, ..., s+t are all not sums of two squares.

    With method="crt" the t smallest primes p_i = 3 (mod 4) are taken and the
    system x + i = p_i (mod p_i^2) is solved, so p_i divides s+i exactly once.
    With method="scan" the smallest such s is found by a linear scan.

    Args:
        t (int): run length, t >= 1.
        method (str): "crt" or "scan".

    Returns:
        int: s, verified value by value with is_sum_two_squares.
    '''
    if t < 1:
        raise ValueError(f"run length must be positive, got {t}")
    if method == "crt":
        ps = primes_3_mod_4(t)
        s = crt([((p - i) % (p * p), p * p) for i, p in enumerate(ps, 1)])
    elif method == "scan":
        s, run = 0, 0
        n = 1
        while run < t:
            run = run + 1 if not is_sum_two_squares(n) else 0
            n += 1
        s = n - 1 - t
    else:
        raise ValueError(f"unknown method {method!r}")
    for i in range(1, t + 1):
        if is_sum_two_squares(s + i):
            raise AssertionError(f"{s + i} is a sum of two squares")
    return s


def consecutive_non_three_squares(n: int) -> bool:
    '''
    True iff n and n+1 are both not sums of three squares, i.e.
    n = 4^a(8b+7) - 1 with a >= 2.
    '''
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m, a = n + 1, 0
    while m % 4 == 0:
        m //= 4
        a += 1
    closed = a >= 2 and m % 8 == 7
    if closed != (not is_sum_three_squares(n) and not is_sum_three_squares(n + 1)):
        raise AssertionError(f"closed form disagrees with Legendre at {n}")
    return closed


def squarefree_part(n: int) -> tuple[int, int]:
    '''Write n = sign * core * s^2 with core squarefree; return (sign*core, s).'''
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    core, s = 1, 1
    for p, e in factorize(abs(n)).pairs:
        if e % 2:
            core *= p
        s *= p ** (e // 2)
    return sign * core, s


def _is_qr(a: int, m: int) -> bool:
    # a is a square modulo every odd prime dividing squarefree m
    for p in factorize(abs(m)).primes() if abs(m) > 1 else []:
        if p == 2:
            continue
        r = a % p
        if r and pow(r, (p - 1) // 2, p) != 1:
            return False
    return True


def _reduce_ternary(coeffs):
    '''
    Reduce a x^2 + b y^2 + c z^2 = 0 to squarefree, pairwise coprime
    coefficients. Returns (reduced, scales) where original variable i equals
    scales[i] * reduced variable i.
    '''
    c = list(coeffs)
    scales = [Fraction(1)] * 3
    changed = True
    while changed:
        changed = False
        g = gcd(gcd(c[0], c[1]), c[2])
        if abs(g) > 1:
            c = [x // abs(g) for x in c]
            changed = True
        for i in range(3):
            core, s = squarefree_part(c[i])
            if s > 1:
                c[i] = core
                scales[i] /= s
                changed = True
        for i, j, m in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            g = gcd(c[i], c[j])
            if g > 1 and gcd(g, c[m]) == 1:
                # g | c_m * z_m^2 forces g | z_m
                c[i] //= g
                c[j] //= g
                c[m] *= g
                scales[m] *= g
                changed = True
                break
    return tuple(c), tuple(scales)


def legendre_solvable(a: int, b: int, c: int) -> bool:
    '''
    Legendre's criterion: does a x^2 + b y^2 + c z^2 = 0 have a nontrivial
    integer solution?
    '''
    if 0 in (a, b, c):
        raise ValueError("coefficients must be nonzero")
    (a, b, c), _ = _reduce_ternary((a, b, c))
    if (a > 0) == (b > 0) == (c > 0):
        return False
    return _is_qr(-b * c, a) and _is_qr(-a * c, b) and _is_qr(-a * b, c)


# safety margin on the Holzer box
HOLZER_MARGIN = 2


def ternary_form_solvable(a: int, b: int) -> tuple[int, int, int] | None:
    '''
    Find a nontrivial integer solution of a x^2 + b y^2 = z^2.

    The form is reduced to squarefree, pairwise coprime coefficients, tested
    with Legendre's criterion (quadratic residue conditions at each odd prime
    of the coefficients) and, when solvable, searched inside the Holzer box
    |x| <= sqrt|bc|, |y| <= sqrt|ac|, |z| <= sqrt|ab| enlarged by HOLZER_MARGIN.
    The witness is mapped back to the original equation.

    Args:
        a (int): coefficient, a >= 1.
        b (int): nonzero coefficient.

    Returns:
        tuple or None: (x, y, z) with nonnegative entries, not all zero.

    Raises:
        ValueError: if a < 1 or b == 0.
    '''
    if a < 1:
        raise ValueError(f"ternary form needs a >= 1, got {a}")
    if b == 0:
        raise ValueError("ternary form needs b != 0")
    (ra, rb, rc), scales = _reduce_ternary((a, b, -1))
    log.debug("ternary form %dx^2%+dy^2=z^2 reduced to (%d, %d, %d)", a, b, ra, rb, rc)
    if not legendre_solvable(ra, rb, rc):
        return None
    bx = HOLZER_MARGIN * isqrt(abs(rb * rc)) + HOLZER_MARGIN
    by = HOLZER_MARGIN * isqrt(abs(ra * rc)) + HOLZER_MARGIN
    found = None
    for x in range(bx + 1):
        for y in range(by + 1):
            if x == 0 and y == 0:
                continue
            num = -(ra * x * x + rb * y * y)
            if num % rc:
                continue
            zz = num // rc
            if is_perfect_square(zz):
                found = (x, y, isqrt(zz))
                break
        if found:
            break
    if found is None:
        raise AssertionError(f"Legendre says solvable but Holzer box is empty for ({a}, {b})")
    raw = [Fraction(v) * s for v, s in zip(found, scales)]
    den = 1
    for r in raw:
        den = den * r.denominator // gcd(den, r.denominator)
    x, y, z = (abs(int(r * den)) for r in raw)
    g = gcd(gcd(x, y), z)
    x, y, z = x // g, y // g, z // g
    if a * x * x + b * y * y != z * z:
        raise AssertionError(f"mapped witness {(x, y, z)} fails for ({a}, {b})")
    return x, y, z
