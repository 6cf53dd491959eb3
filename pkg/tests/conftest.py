"""Shared fixtures and independent oracles for the test suite.

The oracle helpers here deliberately avoid the branching-matrix machinery:
orbit counts come from enumerating tuples, abelian bounds from a direct
search over the abelian subgroup lattice.  They exist to check the package
from the outside.
"""

from __future__ import annotations

import pytest

from commprob.groupspec import CORPUS_NAMES, corpus_group

CORPUS_ORDERS = {
    "s3": 6,
    "d4": 8,
    "q8": 8,
    "s4": 24,
    "gl2_f2": 6,
    "gl2_f3": 48,
    "gl3_f2": 168,
}


@pytest.fixture(scope="session")
def corpus():
    """All bundled groups, built once; branching matrices cache on them."""
    return {name: corpus_group(name) for name in CORPUS_NAMES}


def subgroup_closure(group, seed):
    """Member set of the subgroup generated by `seed` (plus identity)."""
    members = {0} | {int(x) for x in seed}
    changed = True
    while changed:
        changed = False
        current = list(members)
        for a in current:
            ia = group.inv(a)
            if ia not in members:
                members.add(ia)
                changed = True
            for b in current:
                p = group.mul(a, b)
                if p not in members:
                    members.add(p)
                    changed = True
    return frozenset(members)


def enumerate_commuting_tuples(group, d):
    """Every commuting d-tuple, by plain backtracking."""
    found = []

    def extend(prefix):
        if len(prefix) == d:
            found.append(tuple(prefix))
            return
        for x in range(group.order):
            if all(group.commute(x, y) for y in prefix):
                extend(prefix + [x])

    extend([])
    return found


def naive_orbit_count(group, d):
    """(number of commuting d-tuples, orbit count under conjugation)."""
    tuples = enumerate_commuting_tuples(group, d)
    seen = set()
    orbits = 0
    for t in tuples:
        if t in seen:
            continue
        orbits += 1
        for g in range(group.order):
            seen.add(tuple(group.conj(g, x) for x in t))
    return len(tuples), orbits


def bruteforce_max_abelian_order(group):
    """Largest abelian subgroup order via search over the abelian lattice.

    Starts from every cyclic subgroup and extends by commuting elements; an
    abelian subgroup equal to its own centralizer cannot grow.
    """
    frontier = {subgroup_closure(group, [g]) for g in range(group.order)}
    seen = set(frontier)
    best = max(len(s) for s in seen)
    while frontier:
        fresh = set()
        for sub in frontier:
            cent = [
                z
                for z in range(group.order)
                if all(group.commute(z, x) for x in sub)
            ]
            for h in cent:
                if h in sub:
                    continue
                ext = subgroup_closure(group, list(sub) + [h])
                if ext not in seen:
                    seen.add(ext)
                    fresh.add(ext)
                    best = max(best, len(ext))
        frontier = fresh
    return best
