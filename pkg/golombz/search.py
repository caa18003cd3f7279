'''
Exhaustive backtracking search for modular Golomb rulers.

Usage:

from golombz.search import golomb_min_length, min_length, search, spectrum

search(22, 5, mode="prove").status     # 'exhausted'
search(21, 5).witness                  # (21,5) {0, 2, 7, 8, 11}
min_length(13, 4)                      # 6
spectrum(5).sporadic                   # (21,)
golomb_min_length(6)                   # 17
'''

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import logging

from .core import Ruler, cyclic_length, verify_golomb, verify_mgr
from .designs import OocCode
from .internal._backtrack import (
    BUDGET, EXHAUSTED, FOUND, BudgetExceeded, Counter, packing_search, span_search,
)
from .internal._parallel import run_search
from .internal._table1 import GOLOMB_LENGTHS

log = logging.getLogger(__name__)

MODES = ("first", "all", "prove")


@dataclass(frozen=True)
class SearchOutcome:
    '''
    Result of one search.

    Attributes:
        v, k (int): the instance.
        mode (str): first, all, prove or min-length.
        status (str): found, exhausted or budget-exceeded. exhausted means the
            whole tree was explored, which proves nonexistence.
        witness (Ruler | None): lexicographically least hit.
        nodes_visited (int): accepted placements; the unit of the node budget.
        min_length_found (int | None): least cyclic length among the hits.
        count (int | None): canonical rulers counted in mode "all".
        rulers (tuple[Ruler, ...]): the canonical rulers of mode "all".
    '''
    v: int
    k: int
    mode: str
    status: str
    witness: Ruler | None = None
    nodes_visited: int = 0
    min_length_found: int | None = None
    count: int | None = None
    rulers: tuple = ()

    @property
    def found(self):
        return self.status == FOUND

    @property
    def exhausted(self):
        return self.status == EXHAUSTED

    def to_dict(self):
        out = {
            "v": self.v,
            "k": self.k,
            "mode": self.mode,
            "status": self.status,
            "witness": self.witness.to_dict() if self.witness else None,
            "nodes_visited": self.nodes_visited,
            "min_length_found": self.min_length_found,
        }
        if self.mode == "all":
            out["count"] = self.count
            out["rulers"] = [r.to_dict() for r in self.rulers]
        return out

    @classmethod
    def from_dict(cls, data):
        witness = data.get("witness")
        return cls(
            v=data["v"],
            k=data["k"],
            mode=data["mode"],
            status=data["status"],
            witness=Ruler.from_dict(witness) if witness else None,
            nodes_visited=data.get("nodes_visited", 0),
            min_length_found=data.get("min_length_found"),
            count=data.get("count"),
            rulers=tuple(Ruler.from_dict(r) for r in data.get("rulers", ())),
        )


@dataclass(frozen=True)
class SpectrumEntry:
    '''One scanned modulus of a spectrum run.'''
    v: int
    status: str
    witness: Ruler | None = None
    length: int | None = None
    nodes_visited: int = 0

    def to_dict(self):
        return {
            "v": self.v,
            "status": self.status,
            "witness": self.witness.to_dict() if self.witness else None,
            "length": self.length,
            "nodes_visited": self.nodes_visited,
        }

    @classmethod
    def from_dict(cls, data):
        w = data.get("witness")
        return cls(data["v"], data["status"], Ruler.from_dict(w) if w else None,
                   data.get("length"), data.get("nodes_visited", 0))


@dataclass(frozen=True)
class Spectrum:
    '''
    MGR(k): the moduli v admitting a (v,k)-MGR.

    MGR(k) = sporadic + {v : v >= tail_start}. Every scanned modulus below
    tail_start that is not sporadic carries an exhausted search. Beyond the
    scan, the doubling ruler of length L covers every v >= 2L + 1.
    '''
    k: int
    sporadic: tuple[int, ...]
    tail_start: int | None
    trail: tuple[SpectrumEntry, ...] = field(default=(), repr=False)
    complete: bool = True
    doubling: Ruler | None = None

    @property
    def doubling_length(self):
        return self.doubling.length if self.doubling else None

    def contains(self, v):
        if self.tail_start is None:
            raise ValueError(f"spectrum of order {self.k} is incomplete")
        return v in self.sporadic or v >= self.tail_start

    def to_dict(self):
        return {
            "k": self.k,
            "sporadic": list(self.sporadic),
            "tail_start": self.tail_start,
            "complete": self.complete,
            "doubling": self.doubling.to_dict() if self.doubling else None,
            "trail": [e.to_dict() for e in self.trail],
        }

    @classmethod
    def from_dict(cls, data):
        d = data.get("doubling")
        return cls(
            k=data["k"],
            sporadic=tuple(data["sporadic"]),
            tail_start=data["tail_start"],
            trail=tuple(SpectrumEntry.from_dict(e) for e in data.get("trail", ())),
            complete=data.get("complete", True),
            doubling=Ruler.from_dict(d) if d else None,
        )


@dataclass(frozen=True)
class PackingOutcome:
    '''Result of a difference-packing search.'''
    v: int
    k: int
    n: int
    status: str
    code: OocCode | None = None
    nodes_visited: int = 0

    def to_dict(self):
        return {
            "v": self.v, "k": self.k, "n": self.n, "status": self.status,
            "code": self.code.to_dict() if self.code else None,
            "nodes_visited": self.nodes_visited,
        }


def _check_instance(v, k):
    if k < 3:
        raise ValueError(f"order must be at least 3, got {k}")
    if v < k:
        raise ValueError(f"modulus {v} is smaller than the order {k}")


def search(v: int, k: int, mode: str = "first", budget: int | None = None, threads: int = 1) -> SearchOutcome:
    '''
    Depth-first search for (v,k)-MGRs with x1 = 0.

    Args:
        v (int): modulus.
        k (int): order, 3 <= k <= v.
        mode (str): "first" returns the lexicographically least ruler, "all"
            counts canonical rulers, "prove" reports exhausted iff none exists.
        budget (int, optional): node cap for the whole search, summed over
            the x2 subtrees.
        threads (int): worker processes for the x2 fan-out.

    Returns:
        SearchOutcome: budget-exceeded is reported distinctly, never as exhausted.

    Raises:
        ValueError: on a bad instance or mode.
    '''
    _check_instance(v, k)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if budget is not None and budget < 0:
        raise ValueError(f"budget must be nonnegative, got {budget}")
    status, hits, nodes = run_search(v, k, mode, budget, max(1, threads))
    rulers = tuple(Ruler(v, h) for h in hits)
    for r in rulers:
        if not verify_mgr(r).valid:
            raise AssertionError(f"search returned an invalid ruler {r}")
    witness = rulers[0] if rulers else None
    length = min((cyclic_length(r) for r in rulers), default=None)
    log.info("search (%d,%d) %s: %s, %d nodes", v, k, mode, status, nodes)
    if mode == "all":
        return SearchOutcome(v, k, mode, status, witness, nodes, length, len(rulers), rulers)
    return SearchOutcome(v, k, mode, status, witness, nodes, length)


@lru_cache(maxsize=None)
def golomb_min_length(k: int) -> int:
    '''
    Least length of an order-k Golomb ruler, by plain backtracking with
    increasing length targets; smaller orders supply the pruning bounds.

    Args:
        k (int): order, k >= 2.

    Returns:
        int: L*(k).
    '''
    if k < 2:
        raise ValueError(f"order must be at least 2, got {k}")
    if k == 2:
        return 1
    bounds = [0, 0, 1] + [golomb_min_length(j) for j in range(3, k)]
    bounds.append(bounds[-1] + 1)
    span = bounds[k]
    while True:
        hit = span_search(k, span, None, bounds)
        if hit is not None:
            if not verify_golomb(Ruler.plain(hit)).valid:
                raise AssertionError(f"invalid golomb ruler {hit}")
            log.info("L*(%d) = %d via %s", k, span, list(hit))
            return span
        span += 1


_COMPUTED_ORDERS = 8


def _length_bounds(k):
    '''
    Lower bounds on the length of an order-j Golomb ruler for j <= k.

    Orders up to 8 come from golomb_min_length. Orders 9 to 11 use the
    published optimal lengths; larger orders fall back to j(j-1)/2.
    '''
    bounds = [0, 0, 1]
    for j in range(3, k + 1):
        if j <= _COMPUTED_ORDERS:
            bounds.append(golomb_min_length(j))
        else:
            bounds.append(GOLOMB_LENGTHS.get(j, max(j * (j - 1) // 2, bounds[-1] + 1)))
    return bounds


def min_length_search(v: int, k: int, cap: int | None = None, budget: int | None = None) -> SearchOutcome:
    '''
    Least x_k - x_1 over all (v,k)-MGRs, restricted to lengths <= cap.

    Tries lengths upward from the optimal Golomb length for k; every ruler of
    length L has a translate with marks 0 and L, all other marks between.

    Returns:
        SearchOutcome: mode "min-length"; found carries the witness and its
        length, exhausted means no ruler of length <= cap exists.
    '''
    _check_instance(v, k)
    bounds = _length_bounds(k)
    top = v - (v + k - 1) // k
    if cap is not None:
        top = min(top, cap)
    counter = Counter(budget)
    try:
        for span in range(bounds[k], top + 1):
            hit = span_search(k, span, v, bounds, counter)
            if hit is not None:
                r = Ruler(v, hit)
                if not verify_mgr(r).valid:
                    raise AssertionError(f"length search returned an invalid ruler {r}")
                return SearchOutcome(v, k, "min-length", FOUND, r, counter.nodes, span)
    except BudgetExceeded:
        return SearchOutcome(v, k, "min-length", BUDGET, None, counter.nodes)
    return SearchOutcome(v, k, "min-length", EXHAUSTED, None, counter.nodes)


def min_length(v: int, k: int) -> int | None:
    '''Least length of a (v,k)-MGR, or None if there is none.'''
    return min_length_search(v, k).min_length_found


def spectrum(k: int, budget: int | None = None, threads: int = 1, on_modulus=None) -> Spectrum:
    '''
    Scan v upward from k^2-k+1 until the shortest ruler seen, of length L,
    makes every v >= 2L+1 reachable by doubling.

    Args:
        k (int): order.
        budget (int, optional): node cap per search; exhaustion makes the
            spectrum incomplete.
        threads (int): worker processes for each modulus.
        on_modulus (callable, optional): called with each SpectrumEntry.

    Returns:
        Spectrum: sporadic moduli, tail start and the per-v proof trail.
    '''
    if k < 3:
        raise ValueError(f"order must be at least 3, got {k}")
    v = k * k - k + 1
    trail = []
    best = None
    complete = True
    while best is None or v < 2 * best.length + 1:
        out = search(v, k, "first", budget, threads)
        entry = SpectrumEntry(v, out.status, out.witness, None, out.nodes_visited)
        if out.status == BUDGET:
            log.warning("spectrum(%d): budget exhausted at v=%d", k, v)
            complete = False
        elif out.found:
            cap = best.length - 1 if best else None
            shortest = min_length_search(v, k, cap, budget)
            candidates = [Ruler(v, _shortest_translate(out.witness))]
            if shortest.found:
                candidates.append(shortest.witness)
            elif shortest.status == BUDGET:
                log.warning("spectrum(%d): length search at v=%d ran out of budget", k, v)
            top = min(candidates, key=lambda r: r.length)
            entry = SpectrumEntry(v, FOUND, out.witness, top.length, out.nodes_visited + shortest.nodes_visited)
            if best is None or top.length < best.length:
                best = Ruler.plain(top.residues)
        log.info("spectrum(%d): v=%d %s", k, v, entry.status)
        trail.append(entry)
        if on_modulus is not None:
            on_modulus(entry)
        if not complete:
            break
        v += 1

    if not complete:
        sporadic = tuple(e.v for e in trail if e.status == FOUND)
        return Spectrum(k, sporadic, None, tuple(trail), False, best)
    tail = v
    for e in reversed(trail):
        if e.status != FOUND:
            break
        tail = e.v
    sporadic = tuple(e.v for e in trail if e.status == FOUND and e.v < tail)
    return Spectrum(k, sporadic, tail, tuple(trail), True, best)


def _shortest_translate(r):
    xs = r.residues
    gaps = [b - a for a, b in zip(xs, xs[1:])] + [r.v - xs[-1] + xs[0]]
    i = max(range(len(gaps)), key=gaps.__getitem__)
    start = xs[(i + 1) % len(xs)]
    return tuple(sorted((x - start) % r.v for x in xs))


def search_packing(v: int, k: int, n: int, budget: int | None = None) -> PackingOutcome:
    '''
    Search for n base blocks of size k in Z_v with pairwise distinct
    differences, i.e. a (v,k,1)-OOC of size n.

    Returns:
        PackingOutcome: found with the code, exhausted, or budget-exceeded.
    '''
    if k < 2 or n < 1:
        raise ValueError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    counter = Counter(budget)
    try:
        blocks = packing_search(v, k, n, counter)
    except BudgetExceeded:
        return PackingOutcome(v, k, n, BUDGET, None, counter.nodes)
    if blocks is None:
        return PackingOutcome(v, k, n, EXHAUSTED, None, counter.nodes)
    return PackingOutcome(v, k, n, FOUND, OocCode(v, tuple(blocks)), counter.nodes)
