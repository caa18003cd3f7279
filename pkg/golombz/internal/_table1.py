# Published (v,k)-MGR data for 3 <= k <= 11: explicit rulers, the moduli proven
# empty by exhaustive search, the resulting spectra and the minimal lengths.

# (moduli, k, residues); one residue list may serve several moduli
_RULERS = [
    ((7,), 3, (0, 1, 3)),
    ((13,), 4, (0, 1, 4, 6)),
    ((21,), 5, (0, 2, 7, 8, 11)),
    ((31,), 6, (0, 1, 4, 10, 12, 17)),
    ((48,), 7, (0, 5, 7, 18, 19, 22, 28)),
    ((49,), 7, (0, 2, 3, 10, 16, 21, 25)),
    ((50,), 7, (0, 1, 5, 7, 15, 18, 27)),
    ((57, 64, 68), 8, (0, 4, 5, 17, 19, 25, 28, 35)),
    ((63, 67), 8, (0, 1, 8, 20, 22, 25, 31, 35)),
    ((65,), 8, (0, 2, 10, 11, 16, 28, 31, 35)),
    ((66,), 8, (0, 2, 10, 21, 24, 25, 30, 37)),
    ((69,), 8, (0, 1, 4, 9, 15, 22, 32, 34)),
    ((73,), 9, (0, 2, 10, 24, 25, 29, 36, 42, 45)),
    ((80,), 9, (0, 1, 12, 16, 18, 25, 39, 44, 47)),
    ((85,), 9, (0, 1, 7, 12, 21, 29, 31, 44, 47)),
    ((86, 88), 9, (0, 2, 5, 13, 17, 31, 37, 38, 47)),
    ((87,), 9, (0, 1, 4, 13, 24, 30, 38, 40, 45)),
    ((89,), 9, (0, 1, 5, 12, 25, 27, 35, 41, 44)),
    ((91,), 10, (0, 1, 6, 10, 23, 26, 34, 41, 53, 55)),
    ((107,), 10, (0, 2, 15, 21, 22, 32, 46, 50, 55, 58)),
    ((108,), 10, (0, 2, 8, 27, 32, 36, 39, 49, 50, 65)),
    ((109,), 10, (0, 4, 11, 16, 25, 35, 38, 53, 55, 61)),
    ((110,), 10, (0, 3, 14, 16, 36, 37, 42, 46, 54, 61)),
    ((120,), 11, (0, 1, 4, 9, 23, 30, 41, 43, 58, 68, 74)),
    ((133,), 11, (0, 1, 9, 19, 24, 31, 52, 56, 58, 69, 72)),
    ((135,), 11, (0, 5, 7, 11, 31, 41, 49, 50, 63, 66, 78)),
    ((136,), 11, (0, 2, 11, 27, 37, 42, 45, 59, 65, 66, 78)),
    ((137,), 11, (0, 1, 16, 21, 24, 33, 43, 61, 68, 72, 74)),
    ((138,), 11, (0, 4, 5, 23, 25, 37, 52, 59, 65, 68, 76)),
    ((139,), 11, (0, 1, 3, 11, 25, 41, 45, 54, 60, 72, 77)),
    ((140,), 11, (0, 4, 10, 24, 25, 27, 36, 43, 65, 73, 78)),
    ((141,), 11, (0, 2, 3, 7, 20, 29, 41, 52, 60, 66, 76)),
    ((142,), 11, (0, 1, 13, 16, 22, 33, 47, 51, 70, 75, 77)),
    ((143, 144), 11, (0, 3, 7, 22, 27, 43, 56, 57, 66, 68, 74)),
]

# (k, lo, hi): no (v,k)-MGR for lo <= v <= hi
NONEXISTENT = [
    (5, 22, 22),
    (6, 32, 34),
    (7, 43, 47),
    (8, 58, 62),
    (9, 74, 79),
    (9, 81, 84),
    (10, 92, 106),
    (11, 111, 119),
    (11, 121, 132),
    (11, 134, 134),
]

# k -> (v, L): the ruler whose doubling covers every v >= 2L + 1
DOUBLING = {
    3: (7, 3),
    4: (13, 6),
    5: (21, 11),
    6: (31, 17),
    7: (49, 25),
    8: (69, 34),
    9: (89, 44),
    10: (91, 55),
    11: (133, 72),
}

# k -> (sporadic moduli, tail start)
SPECTRA = {
    3: ((), 7),
    4: ((), 13),
    5: ((21,), 23),
    6: ((31,), 35),
    7: ((), 48),
    8: ((57,), 63),
    9: ((73, 80), 85),
    10: ((91,), 107),
    11: ((120, 133), 135),
}

# minimal length of an order-k Golomb ruler
GOLOMB_LENGTHS = {3: 3, 4: 6, 5: 11, 6: 17, 7: 25, 8: 34, 9: 44, 10: 55, 11: 72}


def table_pairs():
    '''Every (v, k, residues) the printed rulers cover, one per modulus.'''
    return [(v, k, res) for vs, k, res in _RULERS for v in vs]


def smallest_ruler(k):
    '''(v, residues) with the least modulus among the printed rulers of order k.'''
    return min((v, res) for v, kk, res in table_pairs() if kk == k)


def is_nonexistent(v, k):
    return any(kk == k and lo <= v <= hi for kk, lo, hi in NONEXISTENT)


def disagreements(spec):
    '''
    Where a computed spectrum departs from the published data: a scanned
    modulus whose exhausted search is not a published gap (or the reverse),
    or a doubling ruler of another length.

    Returns:
        list: human-readable messages, empty when the spectrum agrees.
    '''
    out = []
    for e in spec.trail:
        if e.status not in ("found", "exhausted"):
            continue
        if (e.status == "exhausted") != is_nonexistent(e.v, spec.k):
            out.append(f"(v,k)=({e.v},{spec.k}): search {e.status}, table disagrees")
    if spec.k in DOUBLING and spec.doubling_length is not None:
        L = DOUBLING[spec.k][1]
        if spec.doubling_length != L:
            out.append(f"k={spec.k}: doubling ruler of length {spec.doubling_length}, table has {L}")
    return out
