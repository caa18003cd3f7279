# Depth-first kernels behind golombz.search. Everything here works on plain
# tuples and bytearrays; the public module wraps results in Ruler/OocCode.

from dataclasses import dataclass, field

import logging

log = logging.getLogger(__name__)

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget-exceeded"
CANCELLED = "cancelled"

# how often (in nodes) a worker looks at the cancellation flag
_CANCEL_POLL = 0xFFF


class BudgetExceeded(Exception):
    pass


class Cancelled(Exception):
    pass


class _Stop(Exception):
    pass


class Counter:
    '''Visited-node counter with an optional cap and cancellation flag.'''
    __slots__ = ("nodes", "budget", "cancel")

    def __init__(self, budget=None, cancel=None):
        self.nodes = 0
        self.budget = budget
        self.cancel = cancel

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded
        if self.cancel is not None and not self.nodes & _CANCEL_POLL and self.cancel.is_set():
            raise Cancelled


@dataclass
class SubtreeResult:
    second: int
    status: str
    rulers: list = field(default_factory=list)
    nodes: int = 0


def second_marks(v, k):
    '''Admissible x2 values: x2 is the strictly smallest of the k cyclic gaps.'''
    return list(range(1, (v - k + 1) // k + 1))


def _canonical(marks, v):
    best = None
    for xs in (marks, tuple((-x) % v for x in marks)):
        for t in xs:
            cand = tuple(sorted((x - t) % v for x in xs))
            if best is None or cand < best:
                best = cand
    return best


def mgr_subtree(v, k, a, mode, budget=None, cancel=None):
    '''
    Explore every (v,k)-MGR with x1 = 0 and x2 = a in which a is the strictly
    smallest cyclic gap. mode "first" stops at the lexicographically least
    hit; "all" keeps the hits that are their own canonical form.
    '''
    counter = Counter(budget, cancel)
    if 2 * a == v:
        return SubtreeResult(a, EXHAUSTED)
    used = bytearray(v)
    used[a] = used[v - a] = 1
    marks = [0, a]
    hits = []
    step = a + 1

    def extend(last):
        after = k - len(marks) - 1
        hi = v - step - after * step
        for x in range(last + step, hi + 1):
            added = []
            ok = True
            for m in marks:
                d = x - m
                if used[d] or 2 * d == v:
                    ok = False
                    break
                used[d] = used[v - d] = 1
                added.append(d)
            if ok:
                counter.tick()
                marks.append(x)
                if after == 0:
                    ruler = tuple(marks)
                    if mode == "all":
                        if _canonical(ruler, v) == ruler:
                            hits.append(ruler)
                    else:
                        hits.append(ruler)
                        raise _Stop
                else:
                    extend(x)
                marks.pop()
            for d in added:
                used[d] = used[v - d] = 0

    try:
        counter.tick()
        if k == 2:
            hits.append((0, a))
        else:
            extend(a)
        status = FOUND if hits else EXHAUSTED
    except _Stop:
        status = FOUND
    except BudgetExceeded:
        status = BUDGET
    except Cancelled:
        status = CANCELLED
    log.debug("subtree v=%d k=%d x2=%d: %s after %d nodes", v, k, a, status, counter.nodes)
    return SubtreeResult(a, status, hits, counter.nodes)


def span_search(k, span, v=None, bounds=None, counter=None):
    '''
    Find marks 0 = x1 < ... < xk = span whose differences are distinct, as
    integers (v is None) or mod v. Returns the lexicographically least such
    ruler with first gap smaller than last gap, or None.

    bounds[j] is a lower bound on the length of any j-mark Golomb ruler.
    '''
    counter = counter or Counter()
    if bounds is None:
        bounds = [j * (j - 1) // 2 for j in range(k + 1)]
    if v is not None and (span >= v or 2 * span == v):
        return None
    size = v if v is not None else span + 1
    used = bytearray(size)

    def mark(d):
        used[d] = 1
        if v is not None:
            used[v - d] = 1

    def unmark(d):
        used[d] = 0
        if v is not None:
            used[v - d] = 0

    mark(span)
    marks = [0]
    found = []

    def extend(last):
        i = len(marks)
        lo = max(last + 1, bounds[i + 1])
        hi = span - bounds[k - i]
        for x in range(lo, hi + 1):
            added = []
            ok = True
            for m in marks + [span]:
                d = x - m if m < x else m - x
                if used[d] or (v is not None and 2 * d == v):
                    ok = False
                    break
                mark(d)
                added.append(d)
            if ok:
                counter.tick()
                marks.append(x)
                if len(marks) == k - 1:
                    if marks[1] < span - x:
                        found.append(tuple(marks) + (span,))
                        raise _Stop
                else:
                    extend(x)
                marks.pop()
            for d in added:
                unmark(d)

    counter.tick()
    if k == 2:
        return (0, span)
    try:
        extend(0)
    except _Stop:
        return found[0]
    return None


def packing_search(v, k, n, counter=None):
    '''
    Find n base blocks of size k in Z_v whose ordered differences are all
    distinct (a difference packing). Branches on the smallest difference
    class not yet decided: either a new block realises it as the pair (0, d),
    or it joins the leave while the leave budget lasts.

    Returns a list of sorted blocks or None when the tree is exhausted.
    '''
    counter = counter or Counter()
    classes = (v - 1) // 2
    per_block = k * (k - 1) // 2
    spare = classes - n * per_block
    if spare < 0:
        return None
    covered = bytearray(v)
    blocks = []

    def cls(d):
        return d if d <= v - d else v - d

    def place(d, leave_left):
        if len(blocks) == n:
            return True
        while d <= classes and covered[d]:
            d += 1
        if d > classes:
            return False
        covered[d] = covered[v - d] = 1
        counter.tick()
        if grow([0, d], d, 1, leave_left):
            return True
        covered[d] = covered[v - d] = 0
        if leave_left > 0:
            return place(d + 1, leave_left - 1)
        return False

    def grow(block, d, start, leave_left):
        if len(block) == k:
            blocks.append(tuple(sorted(block)))
            if place(d + 1, leave_left):
                return True
            blocks.pop()
            return False
        for x in range(start, v):
            if x == d:
                continue
            added = []
            ok = True
            for b in block:
                e = (x - b) % v
                c = cls(e)
                if c <= d or 2 * e == v or covered[e]:
                    ok = False
                    break
                covered[e] = covered[v - e] = 1
                added.append(e)
            if ok:
                counter.tick()
                block.append(x)
                if grow(block, d, x + 1, leave_left):
                    return True
                block.pop()
            for e in added:
                covered[e] = covered[v - e] = 0
        return False

    return list(blocks) if place(1, spare) else None
