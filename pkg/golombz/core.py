'''
Rulers and the checks every other module leans on.

A ruler is a modulus v plus k sorted residues; with v = None it is a plain
(non-modular) Golomb ruler, which only embed() and the length searches use.
'''

from __future__ import annotations

from dataclasses import dataclass, field

import logging

import numpy as np

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ruler:
    '''
    A (v,k) ruler: k distinct residues in [0, v), ascending.

    Attributes:
        v (int | None): modulus, or None for a plain Golomb ruler.
        residues (tuple[int, ...]): strictly increasing marks.
    '''
    v: int | None
    residues: tuple[int, ...]

    def __post_init__(self):
        residues = tuple(int(x) for x in self.residues)
        object.__setattr__(self, "residues", residues)
        if len(residues) < 3:
            raise ValueError(f"a ruler needs at least 3 marks, got {len(residues)}")
        if any(b <= a for a, b in zip(residues, residues[1:])):
            raise ValueError(f"residues must be strictly increasing: {list(residues)}")
        if residues[0] < 0:
            raise ValueError(f"residues must be nonnegative: {list(residues)}")
        if self.v is not None:
            if self.v < 3:
                raise ValueError(f"modulus must be at least 3, got {self.v}")
            if residues[-1] >= self.v:
                raise ValueError(f"residue {residues[-1]} is not below the modulus {self.v}")

    @classmethod
    def plain(cls, marks):
        '''A non-modular ruler on the given marks.'''
        return cls(None, tuple(sorted(marks)))

    @classmethod
    def of(cls, v, marks):
        '''Reduce marks mod v and sort them.'''
        return cls(v, tuple(sorted({m % v for m in marks})))

    @property
    def k(self):
        return len(self.residues)

    @property
    def is_modular(self):
        return self.v is not None

    @property
    def length(self):
        '''x_k - x_1 for the residues as given.'''
        return self.residues[-1] - self.residues[0]

    def to_dict(self):
        return {"v": self.v, "k": self.k, "residues": list(self.residues)}

    @classmethod
    def from_dict(cls, data):
        '''
        Build a ruler from its JSON record.

        Raises:
            ValueError: on missing fields or a k that disagrees with the residues.
        '''
        try:
            v, residues = data["v"], data["residues"]
        except (KeyError, TypeError) as e:
            raise ValueError(f"ruler record is missing field {e}") from e
        r = cls(v, tuple(residues))
        if "k" in data and data["k"] != r.k:
            raise ValueError(f"ruler record says k={data['k']} but lists {r.k} residues")
        return r

    def __str__(self):
        marks = ", ".join(map(str, self.residues))
        return f"({self.v},{self.k}) {{{marks}}}" if self.v else f"golomb {{{marks}}}"


@dataclass(frozen=True)
class VerifyReport:
    '''Outcome of a verification; a failed one names the repeated difference.'''
    valid: bool
    witness: tuple | None = None

    def to_dict(self):
        out = {"valid": self.valid}
        if self.witness is not None:
            d, p, q = self.witness
            out["witness"] = {"difference": d, "pairs": [list(p), list(q)]}
        return out


@dataclass(frozen=True)
class DiffProfile:
    '''
    Difference multiset of a modular ruler and its leave.

    Attributes:
        v (int): modulus.
        multiplicity (np.ndarray): length-v vector, entry d counts ordered pairs with difference d.
        leave (tuple[int, ...]): residues that never occur as a difference (0 included).
        leave_even (int): |L_0|, even residues of the leave.
        leave_odd (int): |L_1|, odd residues of the leave.
        length (int): x_k - x_1.
    '''
    v: int
    multiplicity: np.ndarray = field(compare=False, repr=False)
    leave: tuple[int, ...]
    leave_even: int
    leave_odd: int
    length: int

    @property
    def differences(self):
        return tuple(int(d) for d in np.flatnonzero(self.multiplicity))

    @property
    def max_multiplicity(self):
        return int(self.multiplicity.max(initial=0))

    def to_dict(self):
        return {
            "v": self.v,
            "differences": list(self.differences),
            "leave": list(self.leave),
            "leave_even": self.leave_even,
            "leave_odd": self.leave_odd,
            "length": self.length,
        }


def _require_modular(r):
    if r.v is None:
        raise ValueError("operation needs a modular ruler")


def difference_vector(residues, v):
    '''Multiplicity vector of the ordered differences of residues mod v.'''
    x = np.asarray(residues, dtype=np.int64)
    diffs = (x[:, None] - x[None, :]) % v
    off = ~np.eye(len(x), dtype=bool)
    return np.bincount(diffs[off], minlength=v)


def verify_mgr(r: Ruler) -> VerifyReport:
    '''
    Check that all k(k-1) ordered differences mod v are distinct and nonzero.

    Args:
        r (Ruler): a modular ruler.

    Returns:
        VerifyReport: on failure the smallest repeated difference and two
        ordered pairs (x, y) with x - y = d (mod v).
    '''
    _require_modular(r)
    seen = {}
    for x in r.residues:
        for y in r.residues:
            if x != y:
                seen.setdefault((x - y) % r.v, []).append((x, y))
    clashes = [d for d, pairs in seen.items() if len(pairs) > 1]
    if not clashes:
        return VerifyReport(True)
    d = min(clashes)
    return VerifyReport(False, (d, seen[d][0], seen[d][1]))


def verify_golomb(r: Ruler) -> VerifyReport:
    '''Check that the positive differences of the marks are distinct.'''
    seen = {}
    for i, x in enumerate(r.residues):
        for y in r.residues[:i]:
            d = x - y
            if d in seen:
                return VerifyReport(False, (d, (x, y), seen[d]))
            seen[d] = (x, y)
    return VerifyReport(True)


def diff_profile(r: Ruler) -> DiffProfile:
    '''
    Difference multiset, leave L(X) and its parity split.

    Args:
        r (Ruler): a modular ruler.

    Returns:
        DiffProfile: multiplicity vector and leave of r.
    '''
    _require_modular(r)
    mult = difference_vector(r.residues, r.v)
    leave = tuple(int(d) for d in np.flatnonzero(mult == 0))
    even = sum(1 for d in leave if d % 2 == 0)
    return DiffProfile(r.v, mult, leave, even, len(leave) - even, r.length)


def cyclic_length(r: Ruler) -> int:
    '''Least x_k - x_1 over all translations: v minus the largest cyclic gap.'''
    _require_modular(r)
    xs = r.residues
    gaps = [b - a for a, b in zip(xs, xs[1:])] + [r.v - xs[-1] + xs[0]]
    return r.v - max(gaps)


def canonicalize(r: Ruler) -> Ruler:
    '''
    Lexicographically least ruler among all translations of r and of -r,
    each shifted to start at 0.
    '''
    _require_modular(r)
    v = r.v
    best = None
    for xs in (r.residues, tuple((-x) % v for x in r.residues)):
        for t in xs:
            cand = tuple(sorted((x - t) % v for x in xs))
            if best is None or cand < best:
                best = cand
    return Ruler(v, best)


def embed(r: Ruler, v_new: int) -> Ruler:
    '''
    Read the marks of r as a ruler mod v_new.

    A Golomb ruler of length L stays a modular Golomb ruler for every
    modulus v_new >= 2L + 1.

    Args:
        r (Ruler): valid MGR or plain Golomb ruler, marks starting at 0 or not.
        v_new (int): new modulus.

    Returns:
        Ruler: a valid (v_new, k)-MGR.

    Raises:
        ValueError: if v_new <= 2L or the marks are not a Golomb ruler.
    '''
    marks = tuple(x - r.residues[0] for x in r.residues)
    length = marks[-1]
    if v_new <= 2 * length:
        raise ValueError(f"modulus {v_new} is below 2L+1 = {2 * length + 1}")
    report = verify_golomb(Ruler.plain(marks))
    if not report.valid:
        raise ValueError(f"marks {list(marks)} repeat the difference {report.witness[0]}")
    out = Ruler(v_new, marks)
    if not verify_mgr(out).valid:
        raise AssertionError(f"embedding {r} into Z_{v_new} is not a modular ruler")
    return out
