'''Arithmetic in GF(p^m) with a polynomial basis.
This module provides just enough field arithmetic for the Singer, Bose and
Ruzsa constructions: a deterministic modulus, a deterministic primitive element
and discrete-log tables for fields of up to 2**20 elements.'''

from __future__ import annotations

from dataclasses import dataclass

import logging

from .numtheory import factorize, is_prime

log = logging.getLogger(__name__)

# largest field for which log/antilog tables are built
TABLE_CAP = 2**20


@dataclass(frozen=True)
class FieldElement:
    '''Coefficient vector over Z_p, constant term first.'''
    coeffs: tuple[int, ...]

    def is_zero(self):
        return not any(self.coeffs)

    def to_int(self, p):
        '''Read the coefficients as a base-p integer, constant term least significant.'''
        out = 0
        for c in reversed(self.coeffs):
            out = out * p + c
        return out

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}{'' if i == 0 else '*'}{mono if i else ''}")
        return " + ".join(reversed(terms)) or "0"


def _digits(n, p, m):
    out = []
    for _ in range(m):
        out.append(n % p)
        n //= p
    return out


def _poly_mod(a, mod, p):
    # a, mod: coefficient lists constant first; mod monic
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            shift = i - dm
            for j in range(dm + 1):
                a[shift + j] = (a[shift + j] - c * mod[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(poly, p):
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for idx in range(p**d):
            divisor = _digits(idx, p, d) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


class FieldCtx:
    '''
    GF(p^m) realised as Z_p[x] / (modulus).

    Attributes:
        p (int): characteristic.
        m (int): degree.
        modulus (tuple): monic irreducible polynomial, constant term first.
        primitive (FieldElement): least primitive element in the base-p ordering.
        order (int): p^m.
        has_tables (bool): whether log/antilog tables were built.
    '''

    def __init__(self, p, m, modulus, build_tables):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = tuple(modulus)
        self.zero = FieldElement((0,) * m)
        self.one = FieldElement((1,) + (0,) * (m - 1))
        self._exp = None
        self._log = None
        self.primitive = self._least_primitive()
        if build_tables:
            self._build_tables()

    @property
    def has_tables(self):
        return self._exp is not None

    def element(self, value):
        '''Build an element from a base-p integer or a coefficient sequence.'''
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"{value} is not an element index of GF({self.p}^{self.m})")
            return FieldElement(tuple(_digits(value, self.p, self.m)))
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        return FieldElement(tuple(coeffs + [0] * (self.m - len(coeffs))))

    def x(self):
        '''The class of the indeterminate.'''
        return self.element([0, 1])

    def elements(self):
        return (self.element(i) for i in range(self.order))

    def add(self, a, b):
        return FieldElement(tuple((s + t) % self.p for s, t in zip(a.coeffs, b.coeffs)))

    def sub(self, a, b):
        return FieldElement(tuple((s - t) % self.p for s, t in zip(a.coeffs, b.coeffs)))

    def mul(self, a, b):
        if a.is_zero() or b.is_zero():
            return self.zero
        if self._exp is not None:
            i = self._log[a.to_int(self.p)] + self._log[b.to_int(self.p)]
            return self._exp[i % (self.order - 1)]
        prod = [0] * (2 * self.m - 1)
        for i, s in enumerate(a.coeffs):
            if s:
                for j, t in enumerate(b.coeffs):
                    prod[i + j] += s * t
        return FieldElement(tuple(_poly_mod(prod, self.modulus, self.p)))

    def pow(self, a, e):
        if a.is_zero():
            if e <= 0:
                raise ValueError("zero has no nonpositive powers")
            return self.zero
        e %= self.order - 1
        if self._exp is not None:
            return self._exp[(self._log[a.to_int(self.p)] * e) % (self.order - 1)]
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, a):
        if a.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def dlog(self, a):
        '''
        Discrete logarithm to the base of the primitive element.

        Raises:
            ValueError: for the zero element or a context without tables.
        '''
        if a.is_zero():
            raise ValueError("dlog(0) is undefined")
        if self._exp is None:
            raise ValueError(f"GF({self.p}^{self.m}) was created without log tables")
        return self._log[a.to_int(self.p)]

    def subfield(self, e):
        '''Elements of the subfield GF(p^e), e dividing m, as a set.'''
        if self.m % e:
            raise ValueError(f"GF({self.p}^{e}) is not a subfield of GF({self.p}^{self.m})")
        step = (self.order - 1) // (self.p**e - 1)
        g = self.pow(self.primitive, step)
        out = {self.zero}
        y = self.one
        for _ in range(self.p**e - 1):
            out.add(y)
            y = self.mul(y, g)
        return out

    def is_primitive(self, g):
        if g.is_zero():
            return False
        n = self.order - 1
        return all(self.pow(g, n // r) != self.one for r in factorize(n).primes()) if n > 1 else True

    def _least_primitive(self):
        for i in range(1, self.order):
            g = self.element(i)
            if self.is_primitive(g):
                return g
        raise AssertionError(f"no primitive element in GF({self.p}^{self.m})")

    def _build_tables(self):
        n = self.order - 1
        exp = []
        logs = [-1] * self.order
        y = self.one
        for i in range(n):
            exp.append(y)
            logs[y.to_int(self.p)] = i
            y = self.mul(y, self.primitive)
        if y != self.one or sum(1 for v in logs if v >= 0) != n:
            raise AssertionError(f"antilog table of GF({self.p}^{self.m}) is not a permutation")
        self._exp = exp
        self._log = logs


def field_create(p: int, m: int = 1, tables: bool | None = None) -> FieldCtx:
    '''
    Create GF(p^m) deterministically.

    The modulus is the least monic irreducible polynomial of degree m when its
    lower coefficients are read as a base-p integer (constant term least
    significant); the primitive element is the least one in the same ordering.

    Args:
        p (int): prime characteristic.
        m (int): degree, m >= 1.
        tables (bool, optional): build log/antilog tables. Defaults to
            building them whenever p^m <= 2**20.

    Returns:
        FieldCtx: immutable field context.

    Raises:
        ValueError: if p is not prime, m < 1, or tables are requested above the cap.
    '''
    if not is_prime(p):
        raise ValueError(f"field characteristic must be prime, got {p}")
    if m < 1:
        raise ValueError(f"field degree must be at least 1, got {m}")
    if tables is None:
        tables = p**m <= TABLE_CAP
    if tables and p**m > TABLE_CAP:
        raise ValueError(f"GF({p}^{m}) exceeds the table cap of {TABLE_CAP} elements")
    for idx in range(p**m):
        poly = _digits(idx, p, m) + [1]
        if _is_irreducible(poly, p):
            log.debug("GF(%d^%d) modulus %s", p, m, poly)
            return FieldCtx(p, m, poly, tables)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")
