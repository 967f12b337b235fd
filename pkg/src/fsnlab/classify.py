"""Subgroup classification relative to a formation.

A step ``K <. L`` of a maximal chain is *admissible* when ``L^F <= K``
(equivalently ``L/K_L`` lies in ``F``).  ``H`` is F-subnormal in ``X`` when an
admissible chain joins it to ``X``; it is F-abnormal when no admissible step
starts at or above it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .core import Group, Subgroup, _ambient, _inside
from .errors import InputError
from .formations import NILPOTENT, Formation
from .lattice import ChainWitness, LatticeIndex, normal_subgroups_by_closure, subgroup_lattice

__all__ = [
    "SubgroupClassification", "Analysis", "analysis",
    "is_self_normalizing", "is_f_subnormal", "is_f_abnormal", "carter_subgroups",
    "is_f_projector", "is_schmidt_group", "is_minimal_non_f", "classify_subgroup",
    "classify_lattice",
]


@dataclass(frozen=True)
class SubgroupClassification:
    subgroup: Subgroup
    f_subnormal: bool
    witness: ChainWitness | None
    f_abnormal: bool
    self_normalizing: bool

    def as_dict(self) -> dict:
        return {
            "order": self.subgroup.order,
            "generators": [str(g) for g in self.subgroup.generators],
            "f_subnormal": self.f_subnormal,
            "chain_orders": self.witness.orders() if self.witness is not None else None,
            "f_abnormal": self.f_abnormal,
            "self_normalizing": self.self_normalizing,
        }


class Analysis:
    """Memoized F-subnormality / F-abnormality queries inside one group's lattice."""

    def __init__(self, F: Formation, group: Group):
        self.F = F
        self.group = group
        self.t = group.table
        self.lattice: LatticeIndex = subgroup_lattice(group)
        self._residuals = {}
        self._fsn = {}
        self._lock = threading.Lock()
        self._sn_classes = None

    def residual_of(self, x: int) -> int:
        r = self._residuals.get(x)
        if r is None:
            r = self.F.section_residual(self.t, x, 1)
            with self._lock:
                self._residuals[x] = r
        return r

    def admissible(self, k: int, l: int) -> bool:
        """Is the maximal step ``k <. l`` admissible (``l^F <= k``)?"""
        return self.residual_of(l) & ~k == 0

    def chain(self, h: int, x: int):
        """Masks of an admissible maximal chain from ``h`` up to ``x``, or ``None``."""
        if h == x:
            return (x,)
        key = (h, x)
        if key in self._fsn:
            return self._fsn[key]
        result = None
        rx = self.residual_of(x)
        for m in self.lattice.maximal_containing(x, h):
            if rx & ~m:
                continue
            sub = self.chain(h, m)
            if sub is not None:
                result = sub + (x,)
                break
        with self._lock:
            self._fsn[key] = result
        return result

    def is_subnormal(self, h: int, x: int | None = None) -> bool:
        return self.chain(h, self.t.all_mask if x is None else x) is not None

    def is_abnormal(self, h: int, x: int | None = None) -> bool:
        """No admissible step ``K <. L`` with ``h <= K`` and ``L <= x``."""
        x = self.t.all_mask if x is None else x
        notx = ~x
        for l in self.lattice.overgroups(h, proper=True):
            if l & notx:
                continue
            rl = self.residual_of(l)
            for k in self.lattice.maximal_containing(l, h):
                if rl & ~k == 0:
                    return False
        return True

    def subnormal_classes(self) -> set:
        """Indices of subgroup classes that are F-subnormal in the whole group."""
        if self._sn_classes is None:
            lat = self.lattice
            top = lat.class_of[self.t.all_mask]
            found = {top}
            queue = [top]
            while queue:
                x = lat.classes[queue.pop()].representative.mask
                rx = self.residual_of(x)
                for m in lat.maximal_in(x):
                    cid = lat.class_of[m]
                    if cid not in found and rx & ~m == 0:
                        found.add(cid)
                        queue.append(cid)
            self._sn_classes = found
        return self._sn_classes

    def self_normalizing(self, h: int, x: int | None = None) -> bool:
        x = self.t.all_mask if x is None else x
        return self.t.normalizer(h, x) == h


_analysis_lock = threading.Lock()


def analysis(F: Formation, G) -> Analysis:
    root, _ = _ambient(G)
    return root.memo(("analysis", id(F)), lambda: Analysis(F, root))


# --------------------------------------------------------------------------
# public predicates


def is_self_normalizing(G, H: Subgroup) -> bool:
    root, amb = _inside(G, H)
    return root.table.normalizer(H.mask, amb) == H.mask


def is_f_subnormal(F: Formation, G, H: Subgroup) -> tuple:
    """``(True, ChainWitness)`` if ``H`` is F-subnormal in ``G``, else ``(False, None)``."""
    root, amb = _inside(G, H)
    chain = analysis(F, root).chain(H.mask, amb)
    if chain is None:
        return False, None
    return True, ChainWitness(tuple(Subgroup(root, m) for m in chain))


def is_f_abnormal(F: Formation, G, H: Subgroup) -> bool:
    root, amb = _inside(G, H)
    return analysis(F, root).is_abnormal(H.mask, amb)


def carter_subgroups(G) -> list:
    """Representatives of the classes of nilpotent self-normalizing subgroups."""
    root, amb = _ambient(G)
    if amb != root.table.all_mask:
        raise InputError("carter_subgroups is defined for the whole group")
    t = root.table
    out = []
    for c in subgroup_lattice(root).classes:
        m = c.representative.mask
        if t.normalizer(m, amb) == m and t.is_nilpotent(m):
            out.append(c.representative)
    return out


def is_f_projector(F: Formation, G, H: Subgroup) -> bool:
    """``HN/N`` is F-maximal in ``G/N`` for every normal ``N`` of ``G``.

    For a subgroup-closed F it suffices to test the overgroups in which
    ``HN`` is maximal.
    """
    root, amb = _inside(G, H)
    t = root.table
    lat = subgroup_lattice(root)
    notamb = ~amb
    closed = F.flags.subgroup_closed
    for n in normal_subgroups_by_closure(t, amb):
        hn = t.product_normal(H.mask, n)
        if not F.contains_section(t, hn, n):
            return False
        for y in lat.overgroups(hn, proper=True):
            if y & notamb:
                continue
            if closed and hn not in lat.maximal_in(y):
                continue
            if F.contains_section(t, y, n):
                return False
    return True


def is_minimal_non_f(F: Formation, G) -> bool:
    """``G`` is outside ``F`` while all its maximal subgroups lie in ``F``."""
    if not F.flags.subgroup_closed:
        raise InputError(f"{F.name} is not flagged subgroup-closed")
    root, amb = _ambient(G)
    t = root.table
    if F.contains_section(t, amb, 1):
        return False
    lat = subgroup_lattice(root)
    return all(F.contains_section(t, m, 1) for m in lat.maximal_in(amb))


def is_schmidt_group(G) -> bool:
    return is_minimal_non_f(NILPOTENT, G)


def classify_subgroup(F: Formation, G, H: Subgroup) -> SubgroupClassification:
    sn, witness = is_f_subnormal(F, G, H)
    return SubgroupClassification(H, sn, witness, is_f_abnormal(F, G, H), is_self_normalizing(G, H))


def classify_lattice(F: Formation, G: Group) -> list:
    """Classification of one representative per conjugacy class of subgroups."""
    return [classify_subgroup(F, G, c.representative) for c in subgroup_lattice(G).classes]
