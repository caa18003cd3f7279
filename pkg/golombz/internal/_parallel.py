# Fan-out of the modular search over the choice of the second mark.

from concurrent.futures import ProcessPoolExecutor

import logging
import multiprocessing

from ._backtrack import BUDGET, EXHAUSTED, FOUND, mgr_subtree, second_marks

log = logging.getLogger(__name__)

_cancel = None


def _init_worker(event):
    global _cancel
    _cancel = event


def _run_subtree(args):
    v, k, a, mode, budget = args
    return mgr_subtree(v, k, a, mode, budget, _cancel)


def _merge(results, mode, budget):
    # walk subtrees in x2 order; the running total is checked against one cap
    rulers, nodes = [], 0
    for r in results:
        nodes += r.nodes
        if r.status == BUDGET or (budget is not None and nodes > budget):
            return BUDGET, sorted(rulers) if mode == "all" else [], nodes
        if mode == "all":
            rulers.extend(r.rulers)
        elif r.status == FOUND:
            return FOUND, r.rulers[:1], nodes
    if mode == "all":
        return (FOUND if rulers else EXHAUSTED), sorted(rulers), nodes
    return EXHAUSTED, [], nodes


def _settled(results, mode, budget):
    last = results[-1]
    if last.status == BUDGET or (budget is not None and sum(r.nodes for r in results) > budget):
        return True
    return mode != "all" and last.status == FOUND


def run_search(v, k, mode, budget=None, threads=1):
    '''
    Run the x2 subtrees in increasing x2 and merge them under one node budget.

    Sequentially each subtree gets what the earlier ones left of the budget.
    In parallel every subtree may run up to the whole budget, and the merge
    charges the subtrees in x2 order against it, so status, witness and the
    point where the budget runs out match the sequential run. In modes
    "first" and "prove" the first hit cancels the subtrees after it.

    Returns:
        tuple: (status, rulers, nodes).
    '''
    seeds = second_marks(v, k)
    results = []
    if threads <= 1 or len(seeds) <= 1:
        used = 0
        for a in seeds:
            left = None if budget is None else budget - used
            res = mgr_subtree(v, k, a, mode, left)
            results.append(res)
            used += res.nodes
            if _settled(results, mode, budget):
                break
        return _merge(results, mode, budget)

    log.info("dispatching %d subtrees of (%d,%d) to %d workers", len(seeds), v, k, threads)
    event = multiprocessing.Event()
    with ProcessPoolExecutor(max_workers=threads, initializer=_init_worker, initargs=(event,)) as pool:
        futures = [pool.submit(_run_subtree, (v, k, a, mode, budget)) for a in seeds]
        for fut in futures:
            results.append(fut.result())
            if _settled(results, mode, budget):
                event.set()
                for rest in futures:
                    rest.cancel()
                break
    return _merge(results, mode, budget)
