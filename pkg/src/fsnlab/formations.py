"""Formations: membership predicates with declared closure flags.

Membership is evaluated on *sections* ``T/B`` of one ambient element table
(``B`` normal in ``T``), which is how the classification code asks about
``L/K_L`` and ``G/N`` without building quotient groups.  Formations given by
a plain ``Group -> bool`` predicate still work: their sections are realized
as coset-action groups.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .core import ElementTable, Group, Subgroup, _ambient, prime_factors
from .errors import FsnError, InputError
from .lattice import element_classes, is_prime, normal_subgroups_by_closure
from .permutation import Permutation

__all__ = [
    "FormationFlags", "Formation", "ABELIAN", "NILPOTENT", "SUPERSOLUBLE", "METANILPOTENT",
    "SOLUBLE", "BUILTINS", "belongs", "residual", "product_formation", "formation_pi",
    "pi_of_group", "parse_formation", "section_group",
]


@dataclass(frozen=True)
class FormationFlags:
    subgroup_closed: bool = False
    saturated: bool = False
    superradical: bool = False
    contains_nilpotent: bool = False

    def as_dict(self) -> dict:
        return {
            "subgroup_closed": self.subgroup_closed,
            "saturated": self.saturated,
            "superradical": self.superradical,
            "contains_nilpotent": self.contains_nilpotent,
        }


def section_group(t: ElementTable, top: int, bottom: int) -> Group:
    """``T/B`` as a permutation group on the right cosets of ``B`` in ``T``."""
    from .core import get_config
    tidx = t.indices(top)
    bidx = t.indices(bottom)
    labels = np.full(t.n, -1, dtype=np.int64)
    k = 0
    for g in tidx:
        if labels[g] < 0:
            labels[t.mul[bidx, g]] = k
            k += 1
    reps = np.unique(np.where(labels >= 0, labels, k), return_index=True)[1][:k]
    gens = [Permutation._trusted(tuple(int(v) for v in labels[t.mul[reps, s]])) for s in t.gens(top)]
    cfg = get_config()
    cfg = replace(cfg, degree_cap=max(cfg.degree_cap, k))
    return Group(k, gens, config=cfg)


class Formation:
    """A class of groups closed under quotients and subdirect products.

    ``section`` decides ``T/B`` on an element table; ``predicate`` decides a
    standalone :class:`Group`.  At least one must be given.  ``residual_rule``
    optionally computes the residual of a section directly.
    """

    def __init__(self, name: str, flags: FormationFlags,
                 section: Callable | None = None,
                 predicate: Callable[[Group], bool] | None = None,
                 residual_rule: Callable | None = None,
                 description: str = ""):
        if section is None and predicate is None:
            raise InputError("a formation needs a section test or a group predicate")
        self.name = name
        self.flags = flags
        self._section = section
        self._predicate = predicate
        self._residual_rule = residual_rule
        self.description = description

    def __repr__(self):
        return f"Formation({self.name!r})"

    def with_flags(self, **flags) -> "Formation":
        return Formation(self.name, replace(self.flags, **flags), self._section, self._predicate,
                         self._residual_rule, self.description)

    # -- membership ----------------------------------------------------------

    def contains_section(self, t: ElementTable, top: int, bottom: int = 1) -> bool:
        if top == bottom:
            return True
        if self._section is not None:
            return bool(self._section(t, top, bottom))
        return bool(self._predicate(section_group(t, top, bottom)))

    def __call__(self, G) -> bool:
        return belongs(self, G)

    # -- residuals -------------------------------------------------------------

    def section_residual(self, t: ElementTable, top: int, bottom: int = 1) -> int:
        """Smallest normal ``R`` of ``T`` over ``B`` with ``T/R`` in the formation."""
        if self._residual_rule is not None:
            return self._residual_rule(t, top, bottom)
        return self.residual_by_enumeration(t, top, bottom)

    def residual_by_enumeration(self, t: ElementTable, top: int, bottom: int = 1) -> int:
        result = top
        for n in normal_subgroups_by_closure(t, top, bottom):
            if self.contains_section(t, top, n):
                result &= n
        if not self.contains_section(t, top, result):
            raise FsnError(f"{self.name}: intersection of normal subgroups with quotient in the "
                           "class has quotient outside it; not a formation")
        return result


# --------------------------------------------------------------------------
# built-in section tests


def _abelian(t, top, bottom):
    g = np.asarray(t.gens(top), dtype=np.int64)
    if g.size < 2:
        return True
    ab = t.mul[np.ix_(g, g)]
    ba = ab.T
    # a b (b a)^-1 in B for every pair
    q = t.mul[ab, t.inv[ba]]
    inb = t.bools(bottom)
    return bool(inb[q].all())


def _lcs_limit(t, top, bottom):
    cur = top
    while True:
        nxt = t.join(t.commutator(cur, top), bottom)
        if nxt == cur:
            return cur
        cur = nxt


def _derived_limit(t, top, bottom):
    cur = top
    while True:
        nxt = t.join(t.derived(cur), bottom)
        if nxt == cur:
            return cur
        cur = nxt


def _nilpotent(t, top, bottom):
    cur = top
    while cur != bottom:
        nxt = t.join(t.commutator(cur, top), bottom)
        if nxt == cur:
            return False
        cur = nxt
    return True


def _soluble(t, top, bottom):
    return _derived_limit(t, top, bottom) == bottom


def _metanilpotent(t, top, bottom):
    d = t.join(t.commutator(top, top), bottom)
    return _nilpotent(t, d, bottom)


def _metanilpotent_residual(t, top, bottom):
    d = t.join(t.commutator(top, top), bottom)
    return _lcs_limit(t, d, bottom)


def _supersoluble(t, top, bottom):
    """Every chief factor of ``T/B`` has prime order."""
    if _nilpotent(t, top, bottom):
        return True
    if not _soluble(t, top, bottom):
        return False
    reps = [int(c[0]) for c in element_classes(t, top)]
    cur = bottom
    while cur != top:
        best = None
        base = ElementTable.size(cur)
        for x in reps:
            if cur >> x & 1:
                continue
            m = t.normal_closure(t.closure([x], start=cur), top)
            if best is None or ElementTable.size(m) < ElementTable.size(best):
                best = m
                if is_prime(ElementTable.size(m) // base):
                    break
        if not is_prime(ElementTable.size(best) // base):
            return False
        cur = best
    return True


_GROUP_FLAGS = FormationFlags(subgroup_closed=True, saturated=True, superradical=True,
                              contains_nilpotent=True)

ABELIAN = Formation(
    "A", FormationFlags(subgroup_closed=True), _abelian,
    residual_rule=lambda t, top, bottom: t.join(t.commutator(top, top), bottom),
    description="abelian groups")
NILPOTENT = Formation("N", _GROUP_FLAGS, _nilpotent, residual_rule=_lcs_limit,
                      description="nilpotent groups")
SUPERSOLUBLE = Formation(
    "U", replace(_GROUP_FLAGS, superradical=False), _supersoluble,
    description="supersoluble groups")
METANILPOTENT = Formation("NA", _GROUP_FLAGS, _metanilpotent, residual_rule=_metanilpotent_residual,
                          description="groups with nilpotent derived subgroup")
SOLUBLE = Formation("S", _GROUP_FLAGS, _soluble, residual_rule=_derived_limit,
                    description="soluble groups")

BUILTINS = {f.name: f for f in (ABELIAN, NILPOTENT, SUPERSOLUBLE, METANILPOTENT, SOLUBLE)}


# --------------------------------------------------------------------------
# operations


def belongs(F: Formation, G) -> bool:
    root, amb = _ambient(G)
    if not root.has_table and F._predicate is not None and isinstance(G, Group):
        return bool(F._predicate(G))
    return F.contains_section(root.table, amb, 1)


def residual(F: Formation, G) -> Subgroup:
    """``G^F``: intersection of the normal subgroups with quotient in ``F``."""
    if not F.flags.subgroup_closed:
        raise InputError(f"residual requires a subgroup-closed formation; {F.name} is not flagged so")
    root, amb = _ambient(G)
    return Subgroup(root, F.residual_by_enumeration(root.table, amb, 1))


def product_formation(X: Formation, F: Formation, **flags) -> Formation:
    """``XF``: groups whose ``F``-residual lies in ``X``."""
    if not (X.flags.subgroup_closed and F.flags.subgroup_closed):
        raise InputError("product_formation needs two subgroup-closed formations")

    def section(t, top, bottom):
        r = F.section_residual(t, top, bottom)
        return X.contains_section(t, r, bottom)

    base = FormationFlags(subgroup_closed=True)
    return Formation(f"{X.name}*{F.name}", replace(base, **flags), section,
                     description=f"product of {X.name} and {F.name}")


@functools.lru_cache(maxsize=None)
def _cyclic(p: int) -> Group:
    return Group(p, [Permutation(tuple(range(1, p)) + (0,))])


def formation_pi(F: Formation, bound: int) -> set:
    """Primes ``p <= bound`` whose cyclic group of order ``p`` lies in ``F``."""
    return {p for p in range(2, bound + 1) if is_prime(p) and belongs(F, _cyclic(p))}


def pi_of_group(G) -> set:
    root, amb = _ambient(G)
    return set(prime_factors(ElementTable.size(amb) if isinstance(G, Subgroup) else root.order))


@functools.lru_cache(maxsize=None)
def parse_formation(text: str) -> Formation:
    """``A``, ``N``, ``U``, ``NA``, ``S`` or a product ``X*F`` such as ``N*A``."""
    text = text.strip()
    if text in BUILTINS:
        return BUILTINS[text]
    if "*" in text:
        left, right = text.split("*", 1)
        return product_formation(parse_formation(left), parse_formation(right))
    raise InputError(f"unknown formation {text!r}; expected one of {sorted(BUILTINS)} or X*F")
