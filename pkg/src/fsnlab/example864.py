"""Reconstruction of the order-864 group ``(S3 x S3 x A4) x| Z2``.

The group is specified only by structural facts, so the construction runs
through the finite list of candidate actions of ``Z2`` (swap of the two
``S3`` factors combined with an automorphism of ``A4`` of order at most 2)
and keeps the candidates satisfying every fact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import analysis
from .core import ElementTable, Group
from .errors import ConstructionError
from .formations import METANILPOTENT, NILPOTENT
from .groupgen import ActionSpec, alternating, automorphisms, cyclic, direct_product, semidirect_product, symmetric
from .permutation import Permutation

__all__ = ["Candidate", "example_864_facts", "example_864_candidates", "build_example_864",
           "proper_subgroups_of_sylow2_report"]


@dataclass
class Candidate:
    label: str
    group: Group
    facts: dict

    @property
    def passes(self) -> bool:
        return all(f["ok"] for f in self.facts.values())

    def diff(self) -> dict:
        return {k: f for k, f in self.facts.items() if not f["ok"]}


def _fact(observed, expected) -> dict:
    return {"observed": observed, "expected": expected, "ok": observed == expected}


def _elementary_abelian(t: ElementTable, m: int, p: int) -> bool:
    return t.is_abelian(m) and bool((np.isin(t.orders[t.indices(m)], (1, p))).all())


def _has_e16_complemented(t: ElementTable, P: int) -> bool:
    """``P`` has a normal elementary abelian subgroup of order 16 and an involution outside it."""
    lat = subgroup_lattice_of_mask(t, P)
    for m in lat:
        if ElementTable.size(m) == 16 and t.is_normal(m, P) and _elementary_abelian(t, m, 2):
            outside = t.indices(P & ~m)
            if (t.orders[outside] == 2).any():
                return True
    return False


def subgroup_lattice_of_mask(t: ElementTable, m: int) -> list:
    """Masks of all subgroups of ``m`` found by closing over pairs of cyclic subgroups."""
    idx = t.indices(m)
    cyclics = sorted({t.cyclic(int(x)) for x in idx})
    found = set(cyclics) | {1}
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for c in cyclics:
                if c & ~a:
                    j = t.join(a, c)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
        frontier = nxt
    return sorted(found)


def example_864_facts(G: Group) -> dict:
    """Every structural fact used to pin down the group, observed against expected."""
    t = G.table
    full = t.all_mask
    A = analysis(METANILPOTENT, G)
    r_na = A.residual_of(full)
    r_n = NILPOTENT.section_residual(t, full, 1)
    d = t.derived(full)
    fit = t.fitting(full)
    p2 = t.sylow(full, 2)
    p3 = t.sylow(full, 3)
    return {
        "order": _fact(G.order, 864),
        "residual_NA_order": _fact(ElementTable.size(r_na), 36),
        "residual_NA_is_fitting": _fact(r_na == fit, True),
        "residual_NA_elementary_parts": _fact(
            t.is_abelian(r_na) and bool(np.isin(t.orders[t.indices(r_na)], (1, 2, 3, 6)).all()), True),
        "residual_N_order": _fact(ElementTable.size(r_n), 108),
        "derived_order": _fact(ElementTable.size(d), 216),
        "residual_chain": _fact(r_na & ~r_n == 0 and r_n & ~d == 0, True),
        "sylow2_order": _fact(ElementTable.size(p2), 32),
        "sylow2_is_E16_by_Z2": _fact(_has_e16_complemented(t, p2), True),
        "sylow2_self_normalizing": _fact(t.normalizer(p2, full) == p2, True),
        "sylow3_elementary_27": _fact(ElementTable.size(p3) == 27 and _elementary_abelian(t, p3, 3), True),
        "sylow3_NA_subnormal": _fact(A.is_subnormal(p3), True),
    }


def _realizer(a4: Group, beta: np.ndarray, offset: int, degree: int) -> Permutation:
    t = a4.table
    for sigma in symmetric(4).elements():
        if all(t.index(g ** sigma) == beta[t.index(g)] for g in a4.generators):
            return sigma.extend(degree, offset)
    raise ConstructionError("automorphism of A4 is not induced by S4")


def example_864_candidates() -> list:
    """All candidate groups with their fact tables, in lexicographic label order."""
    s3 = symmetric(3)
    a4 = alternating(4)
    N = direct_product(s3, s3, a4, name="S3 x S3 x A4")
    deg = N.degree
    swap = Permutation.from_cycles(deg, "(0 3)(1 4)(2 5)")
    ta = a4.table
    betas = [b for b in automorphisms(a4) if np.array_equal(b[b], np.arange(ta.n))]
    out = []
    for beta in betas:
        r = swap * _realizer(a4, beta, 6, deg)
        images = [g ** r for g in N.generators]
        label = " ".join(str(ta.perm(int(beta[ta.index(g)]))) for g in a4.generators)
        G = semidirect_product(N, cyclic(2), ActionSpec([images], realizers=[r], label=label),
                               name="(S3 x S3 x A4) x| Z2")
        out.append(Candidate(label, G, example_864_facts(G)))
    out.sort(key=lambda c: c.label)
    return out


def build_example_864(return_candidates: bool = False):
    """The lexicographically first candidate satisfying every fact."""
    cands = example_864_candidates()
    passing = [c for c in cands if c.passes]
    if not passing:
        diffs = {c.label: c.diff() for c in cands}
        raise ConstructionError(f"no candidate action satisfies the facts: {diffs}")
    if return_candidates:
        return passing[0].group, passing
    return passing[0].group


def proper_subgroups_of_sylow2_report(G: Group) -> dict:
    """F-subnormality (F = NA) of every proper subgroup of the Sylow 2-subgroup."""
    from .lattice import subgroup_lattice

    t = G.table
    A = analysis(METANILPOTENT, G)
    lat = subgroup_lattice(G)
    sn = A.subnormal_classes()
    p2 = t.sylow(t.all_mask, 2)
    failing = []
    total = 0
    for m in lat.subgroups_of(p2, proper=True):
        total += 1
        if lat.class_of[m] not in sn:
            failing.append(m)
    return {
        "sylow2_order": ElementTable.size(p2),
        "proper_subgroups": total,
        "not_subnormal": len(failing),
        "failing_orders": sorted(ElementTable.size(m) for m in failing),
        "examples": [[str(g) for g in (t.perm(int(i)) for i in t.gens(m))] for m in failing[:3]],
    }
