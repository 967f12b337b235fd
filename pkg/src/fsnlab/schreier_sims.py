"""Base and strong generating set for permutation groups.

A random Schreier-Sims phase (seeded product replacement) proposes a BSGS,
then the deterministic Schreier generator test completes and certifies it.
Permutations are plain tuples here; ``mul(a, b)`` applies ``a`` first.
"""

from __future__ import annotations

import random

import numpy as np


def mul(a, b):
    return tuple(b[i] for i in a)


def inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _is_id(a):
    return all(i == j for i, j in enumerate(a))


class BSGS:
    """Stabilizer chain: ``base[i]`` with strong generators fixing ``base[:i]``."""

    def __init__(self, degree, generators, seed=0, random_rounds=40):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base = []
        self.strong = []  # strong[i]: generators of G^(i) = stabilizer of base[:i]
        self.transversals = []  # transversals[i]: point -> u with base[i]^u = point
        self._inverses = []
        gens = [tuple(g) for g in generators if not _is_id(g)]
        if gens:
            for g in gens:
                self._add_at(g, 0)
            self._random_phase(gens, seed, random_rounds)
            self._complete()

    # -- construction ----------------------------------------------------

    def _new_base_point(self, g):
        for p in range(self.degree):
            if g[p] != p:
                return p
        raise AssertionError("identity has no moved point")

    def _add_at(self, g, level):
        """Add ``g`` (fixing ``base[:level]``) as a strong generator at ``level`` and below."""
        while level < len(self.base) and g[self.base[level]] == self.base[level]:
            level += 1
        if level == len(self.base):
            self.base.append(self._new_base_point(g))
        while len(self.strong) < len(self.base):
            self.strong.append([])
        for j in range(level + 1):
            if g not in self.strong[j]:
                self.strong[j].append(g)
        self._rebuild_orbits(range(level, -1, -1))
        return level

    def _rebuild_orbits(self, levels):
        while len(self.transversals) < len(self.base):
            self.transversals.append({})
            self._inverses.append({})
        for i in levels:
            b = self.base[i]
            trans = {b: self.identity}
            frontier = [b]
            gens = self.strong[i]
            while frontier:
                nxt = []
                for p in frontier:
                    u = trans[p]
                    for s in gens:
                        q = s[p]
                        if q not in trans:
                            trans[q] = mul(u, s)
                            nxt.append(q)
                frontier = nxt
            self.transversals[i] = trans
            self._inverses[i] = {p: inv(u) for p, u in trans.items()}

    def sift(self, g, start=0):
        """Return ``(residue, level)`` where sifting stopped."""
        for i in range(start, len(self.base)):
            p = g[self.base[i]]
            ui = self._inverses[i].get(p)
            if ui is None:
                return g, i
            g = mul(g, ui)
        return g, len(self.base)

    def _absorb(self, residue, level):
        if level == len(self.base) and _is_id(residue):
            return False
        self._add_at(residue, level)
        return True

    def _random_phase(self, gens, seed, rounds):
        rng = random.Random(seed)
        state = list(gens) * max(1, 10 // len(gens) + 1)
        state = state[:max(10, len(gens))]
        acc = self.identity
        quiet = 0
        for _ in range(50):  # mixing
            i, j = rng.sample(range(len(state)), 2) if len(state) > 1 else (0, 0)
            state[i] = mul(state[i], state[j])
            acc = mul(acc, state[i])
        while quiet < rounds:
            i, j = rng.sample(range(len(state)), 2) if len(state) > 1 else (0, 0)
            state[i] = mul(state[i], state[j])
            acc = mul(acc, state[i])
            residue, level = self.sift(acc)
            if self._absorb(residue, level):
                quiet = 0
            else:
                quiet += 1

    def _complete(self):
        """Deterministic Schreier-Sims: every Schreier generator must sift to the identity."""
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            trans = self.transversals[i]
            for p, u in list(trans.items()):
                for s in self.strong[i]:
                    q = s[p]
                    h = mul(mul(u, s), self._inverses[i][q])
                    residue, level = self.sift(h, i + 1)
                    if level < len(self.base) or not _is_id(residue):
                        restart = self._add_at(residue, level)
                        break
                if restart is not None:
                    break
            if restart is None:
                i -= 1
            else:
                i = min(restart, len(self.base) - 1)

    # -- queries -----------------------------------------------------------

    @property
    def order(self):
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def contains(self, g):
        residue, level = self.sift(tuple(g))
        return level == len(self.base) and _is_id(residue)

    def elements_array(self):
        """All elements as an ``(order, degree)`` array, lexicographically sorted."""
        elems = np.arange(self.degree, dtype=np.int64)[None, :]
        for trans in reversed(self.transversals):
            us = np.array(list(trans.values()), dtype=np.int64)
            # (e * u)[k] = u[e[k]]
            elems = np.concatenate([u[elems] for u in us], axis=0)
        order = np.lexsort(elems.T[::-1])
        return elems[order]
