"""Brute-force oracles used to cross-check the library.

Nothing here uses the subgroup lattice index, the residual rules or the
Schreier-Sims chain: subgroups come from plain closure over permutations, and
chain steps are judged through explicit quotient groups.
"""

from __future__ import annotations

from fsnlab import Group, Permutation, quotient
from fsnlab.lattice import all_maximal_chains


def closure_elements(degree: int, gens) -> set:
    """Every element generated by ``gens``, by breadth-first multiplication."""
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def core_of(K, L) -> frozenset:
    """Intersection of the ``L``-conjugates of ``K``, elementwise."""
    kset = frozenset(K.elements())
    out = set(kset)
    for g in L.elements():
        inv = ~g
        out &= {inv * k * g for k in kset}
    return frozenset(out)


def step_in_formation(F, K, L, cache: dict) -> bool:
    """``L/K_L`` lies in ``F``, decided on an explicitly built quotient group."""
    key = (K.mask, L.mask)
    if key not in cache:
        LG = L.as_group()
        core = core_of(K, L)
        N = LG.subgroup(sorted(core))
        Q = quotient(LG, N)
        cache[key] = F(Group(Q.degree, Q.generators))
    return cache[key]


def f_subnormal_by_chains(F, G, H, cache: dict) -> bool:
    """Some maximal chain from ``H`` to ``G`` has every step in core form."""
    for chain in all_maximal_chains(G, H):
        subs = chain.links
        if all(step_in_formation(F, subs[i], subs[i + 1], cache) for i in range(len(subs) - 1)):
            return True
    return False
