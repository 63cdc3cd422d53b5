"""Brute-force oracles, written independently of the library internals.

Everything recomputes from first principles over sets of element names,
touching the library only through leq, meet, join and the two unary
tables.  Test files compare library output against these.
"""

from __future__ import annotations

from itertools import chain, combinations


def subsets(names):
    names = list(names)
    for r in range(len(names) + 1):
        yield from (frozenset(c) for c in combinations(names, r))


def is_filter(lat, S) -> bool:
    if not S:
        return False
    for x in S:
        for y in lat.names:
            if lat.leq(lat.index(x), lat.index(y)) and y not in S:
                return False
    for x in S:
        for y in S:
            m = lat.names[lat.meet(lat.index(x), lat.index(y))]
            if m not in S:
                return False
    return True


def brute_filters(lat):
    return sorted((S for S in subsets(lat.names) if is_filter(lat, S)),
                  key=lambda S: (len(S), sorted(S)))


def mi(D, x, y) -> str:
    """(x^d | y^d)^d recomputed by hand."""
    lat = D.base
    dx, dy = D.delta[x], D.delta[y]
    return D.delta[lat.names[lat.join(lat.index(dx), lat.index(dy))]]


def brute_s_filters(D):
    lat = D.base
    out = []
    for S in brute_filters(lat):
        if all(mi(D, x, y) in S for x in S for y in S):
            out.append(S)
    return out


def brute_skeleton(D):
    return frozenset(x for x in D.base.names if D.interior(x) == x)


def all_partitions(names):
    names = list(names)
    if not names:
        yield []
        return
    first, rest = names[0], names[1:]
    for smaller in all_partitions(rest):
        for i, block in enumerate(smaller):
            yield smaller[:i] + [block | {first}] + smaller[i + 1:]
        yield smaller + [{first}]


def is_congruence_blocks(D, blocks) -> bool:
    lat = D.base
    cls = {x: i for i, block in enumerate(blocks) for x in block}

    def same(x, y):
        return cls[x] == cls[y]

    for x in lat.names:
        for y in lat.names:
            if not same(x, y):
                continue
            if not same(D.delta[x], D.delta[y]):
                return False
            for z in lat.names:
                jx = lat.names[lat.join(lat.index(x), lat.index(z))]
                jy = lat.names[lat.join(lat.index(y), lat.index(z))]
                mx = lat.names[lat.meet(lat.index(x), lat.index(z))]
                my = lat.names[lat.meet(lat.index(y), lat.index(z))]
                if not same(jx, jy) or not same(mx, my):
                    return False
    return True


def canon(blocks):
    return frozenset(frozenset(b) for b in blocks)


def brute_congruences(D):
    """Every compatible partition, as a set of sets of frozensets."""
    return {canon(p) for p in all_partitions(D.base.names)
            if is_congruence_blocks(D, p)}


def brute_prime(lat, S) -> bool:
    for x in lat.names:
        for y in lat.names:
            j = lat.names[lat.join(lat.index(x), lat.index(y))]
            if j in S and x not in S and y not in S:
                return False
    return True


def brute_primary(D, S) -> bool:
    return all(x in S or D.delta[x] in S for x in D.base.names)


def brute_maximal(S, proper_family) -> bool:
    return S in proper_family and not any(
        S < T for T in proper_family)
