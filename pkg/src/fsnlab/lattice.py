"""Subgroup lattices up to conjugacy.

Soluble groups are enumerated by cyclic extension: every nontrivial soluble
subgroup ``J`` has a normal subgroup ``A`` of prime index, so ``J = A<x>`` for
some ``x`` in ``N_G(A)`` with ``x^p`` in ``A``.  Other groups fall back to join
closure over primary cyclic subgroups, which is complete for every group.
Every conjugate of every class is stored, so containment questions about
actual subgroups are bitmask scans.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass, field

import numpy as np

from .core import ElementTable, Group, Subgroup, _ambient, _inside, p_part, prime_factors
from .errors import InputError, ResourceCapError

__all__ = [
    "ConjugacyClassOfSubgroups", "LatticeIndex", "ChainWitness",
    "subgroup_lattice", "maximal_subgroups", "maximal_subgroups_containing",
    "normal_subgroups", "sylow_subgroup", "hall_pprime_subgroup",
    "primary_cyclic_subgroups", "frattini_subgroup", "all_maximal_chains",
    "exhaustive_subgroups", "normal_subgroups_by_closure", "element_classes",
    "is_prime_power",
]


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == [n]


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


@dataclass(frozen=True)
class ConjugacyClassOfSubgroups:
    representative: Subgroup
    class_size: int
    order: int
    members: tuple = field(repr=False)

    @property
    def index(self) -> int:
        return self.representative.parent.order // self.order


@dataclass(frozen=True)
class ChainWitness:
    """``links[0] <. links[1] <. ... <. links[-1]``, from the subgroup up to the group."""

    links: tuple

    def __len__(self):
        return len(self.links) - 1

    def orders(self) -> list:
        return [h.order for h in self.links]


class LatticeIndex:
    def __init__(self, group: Group, classes: list, class_of: dict, method: str):
        self.group = group
        self.classes = classes
        self.class_of = class_of
        self.method = method
        self._lock = threading.Lock()
        self._maximal = {}
        self._by_order = {}
        for mask in class_of:
            self._by_order.setdefault(ElementTable.size(mask), []).append(mask)
        for masks in self._by_order.values():
            masks.sort()
        self._orders_desc = sorted(self._by_order, reverse=True)
        self._containment = None

    @property
    def table(self) -> ElementTable:
        return self.group.table

    def rebind(self, group: Group) -> "LatticeIndex":
        """The same lattice for another Group object with an identical element set."""
        classes = [ConjugacyClassOfSubgroups(Subgroup(group, c.representative.mask), c.class_size,
                                             c.order, c.members) for c in self.classes]
        return LatticeIndex(group, classes, self.class_of, self.method)

    def __len__(self):
        return len(self.classes)

    @property
    def total_subgroups(self) -> int:
        return len(self.class_of)

    def subgroup(self, mask: int) -> Subgroup:
        return Subgroup(self.group, mask)

    def class_index(self, h) -> int:
        mask = h.mask if isinstance(h, Subgroup) else h
        return self.class_of[mask]

    def representatives(self) -> list:
        return [c.representative for c in self.classes]

    def all_masks(self):
        return self.class_of.keys()

    # -- scans -----------------------------------------------------------------

    def subgroups_of(self, x: int, proper: bool = False) -> list:
        """Masks of all subgroups of ``x``, largest order first."""
        size = ElementTable.size(x)
        notx = ~x
        out = []
        for order in self._orders_desc:
            if size % order or (proper and order == size):
                continue
            out.extend(m for m in self._by_order[order] if not m & notx)
        return out

    def overgroups(self, h: int, proper: bool = False) -> list:
        """Masks of all subgroups containing ``h``, smallest order first."""
        size = ElementTable.size(h)
        out = []
        for order in reversed(self._orders_desc):
            if order % size or (proper and order == size):
                continue
            out.extend(m for m in self._by_order[order] if m & h == h)
        return out

    def maximal_in(self, x: int) -> tuple:
        """Masks of the maximal subgroups of the subgroup ``x``."""
        cached = self._maximal.get(x)
        if cached is not None:
            return cached
        found = []
        for m in self.subgroups_of(x, proper=True):
            if not any(m & f == m for f in found):
                found.append(m)
        result = tuple(found)
        with self._lock:
            self._maximal[x] = result
        return result

    def maximal_containing(self, x: int, h: int) -> tuple:
        return tuple(m for m in self.maximal_in(x) if m & h == h)

    @property
    def containment(self) -> np.ndarray:
        """``C[i, j]``: class ``i`` lies in some conjugate of class ``j``'s representative."""
        if self._containment is None:
            k = len(self.classes)
            mat = np.zeros((k, k), dtype=bool)
            for j, cj in enumerate(self.classes):
                rep = cj.representative.mask
                notrep = ~rep
                for i, ci in enumerate(self.classes):
                    if cj.order % ci.order:
                        continue
                    mat[i, j] = any(not m & notrep for m in ci.members)
            self._containment = mat
        return self._containment

    @property
    def maximality(self) -> np.ndarray:
        """``M[i, j]``: some conjugate of class ``i`` is maximal in class ``j``'s representative."""
        k = len(self.classes)
        mat = np.zeros((k, k), dtype=bool)
        for j, cj in enumerate(self.classes):
            for m in self.maximal_in(cj.representative.mask):
                mat[self.class_of[m], j] = True
        return mat


# --------------------------------------------------------------------------
# construction


def _conjugacy_orbit(t: ElementTable, mask: int, gens) -> list:
    orbit = [mask]
    seen = {mask}
    i = 0
    while i < len(orbit):
        cur = orbit[i]
        for g in gens:
            nxt = t.conjugate(cur, g)
            if nxt not in seen:
                seen.add(nxt)
                orbit.append(nxt)
        i += 1
    return orbit


class _Builder:
    def __init__(self, group: Group):
        self.group = group
        self.t = group.table
        self.ggens = [int(g) for g in self.t.gens(self.t.all_mask)]
        self.class_of = {}
        self.members = []

    def register(self, mask: int) -> bool:
        if mask in self.class_of:
            return False
        orbit = _conjugacy_orbit(self.t, mask, self.ggens)
        cid = len(self.members)
        for m in orbit:
            self.class_of[m] = cid
        self.members.append(orbit)
        return True

    def finish(self, method: str) -> LatticeIndex:
        # canonical order: by subgroup order, then by smallest member mask
        keyed = []
        for cid, orbit in enumerate(self.members):
            rep = min(orbit)
            keyed.append((ElementTable.size(rep), rep, cid))
        keyed.sort()
        remap = {}
        classes = []
        for new_id, (order, rep, cid) in enumerate(keyed):
            remap[cid] = new_id
            members = tuple(sorted(self.members[cid]))
            classes.append(ConjugacyClassOfSubgroups(
                Subgroup(self.group, rep), len(members), order, members))
        class_of = {m: remap[c] for m, c in self.class_of.items()}
        return LatticeIndex(self.group, classes, class_of, method)


def _order_mod(t: ElementTable, cand: np.ndarray, inside: np.ndarray, limit: int) -> np.ndarray:
    """Smallest ``k >= 1`` with ``x^k`` in the subgroup ``inside`` (0 if above ``limit``)."""
    k_of = np.zeros(cand.size, dtype=np.int64)
    cur = cand.copy()
    for k in range(1, limit + 1):
        hit = inside[cur] & (k_of == 0)
        k_of[hit] = k
        if k_of.all():
            break
        cur = t.mul[cur, cand]
    return k_of


def _cyclic_extension(group: Group) -> LatticeIndex:
    b = _Builder(group)
    t = b.t
    all_mask = t.all_mask
    b.register(1)
    heap = [(1, 1)]
    done = set()
    while heap:
        _, a = heapq.heappop(heap)
        if a in done:
            continue
        done.add(a)
        if a == all_mask:
            continue
        norm = t.normalizer(a, all_mask)
        cand = t.indices(norm & ~a)
        if cand.size == 0:
            continue
        inside = t.bools(a)
        a_idx = np.flatnonzero(inside)
        k_of = _order_mod(t, cand, inside, int(t.orders[cand].max()))
        prime = np.array([is_prime(int(k)) for k in k_of], dtype=bool)
        covered = np.zeros(t.n, dtype=bool)
        for x, p in zip(cand[prime], k_of[prime]):
            if covered[x]:
                continue
            jb = np.zeros(t.n, dtype=bool)
            cur = 0
            for _ in range(int(p)):
                jb[t.mul[a_idx, cur]] = True
                cur = int(t.mul[cur, x])
            covered |= jb
            j = t.mask_from_bool(jb)
            if b.register(j):
                heapq.heappush(heap, (ElementTable.size(j), j))
    return b.finish("cyclic-extension")


def _primary_cyclic_masks(t: ElementTable) -> list:
    seen = set()
    out = []
    for x in range(1, t.n):
        if is_prime_power(int(t.orders[x])):
            c = t.cyclic(x)
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def _join_closure(group: Group) -> LatticeIndex:
    b = _Builder(group)
    t = b.t
    cyclics = _primary_cyclic_masks(t)
    b.register(1)
    queue = [1]
    while queue:
        a = queue.pop()
        for c in cyclics:
            if c & a == c:
                continue
            j = t.join(a, c)
            if b.register(j):
                queue.append(j)
    return b.finish("join-closure")


def exhaustive_subgroups(G: Group) -> set:
    """Every subgroup mask, by join closure with no conjugacy reduction (an oracle)."""
    t = G.table
    cyclics = _primary_cyclic_masks(t)
    found = {1}
    queue = [1]
    while queue:
        a = queue.pop()
        for c in cyclics:
            if c & a == c:
                continue
            j = t.join(a, c)
            if j not in found:
                found.add(j)
                queue.append(j)
    return found


_lattice_lock = threading.Lock()
_lattice_cache = {}


def subgroup_lattice(G: Group, method: str | None = None) -> LatticeIndex:
    """Conjugacy classes of subgroups of ``G``, cached by group fingerprint."""
    if isinstance(G, Subgroup):
        raise InputError("subgroup_lattice takes a Group")
    if G.order > G.config.table_cap:
        raise ResourceCapError(f"lattice of a group of order {G.order} exceeds cap {G.config.table_cap}",
                               G.order, G.config.table_cap)
    if method is None:
        method = "cyclic-extension" if G.table.is_soluble(G.table.all_mask) else "join-closure"

    def build():
        key = (G.fingerprint, method)
        with _lattice_lock:
            hit = _lattice_cache.get(key)
        if hit is not None:
            return hit if hit.group is G else hit.rebind(G)
        lat = _cyclic_extension(G) if method == "cyclic-extension" else _join_closure(G)
        with _lattice_lock:
            _lattice_cache[key] = lat
        return lat

    return G.memo(("lattice", method), build)


def clear_lattice_cache():
    with _lattice_lock:
        _lattice_cache.clear()


# --------------------------------------------------------------------------
# operations


def maximal_subgroups(G) -> list:
    """Representatives of the conjugacy classes (in ``G``) of maximal subgroups of ``G``."""
    root, amb = _ambient(G)
    lat = subgroup_lattice(root)
    seen = set()
    out = []
    for m in lat.maximal_in(amb):
        cid = lat.class_of[m]
        if amb == root.table.all_mask:
            if cid in seen:
                continue
            seen.add(cid)
            out.append(lat.classes[cid].representative)
        else:
            out.append(Subgroup(root, m))
    out.sort(key=lambda h: (h.order, h.mask))
    return out


def maximal_subgroups_containing(G, H: Subgroup) -> list:
    root, amb = _inside(G, H)
    lat = subgroup_lattice(root)
    masks = sorted(lat.maximal_containing(amb, H.mask), key=lambda m: (ElementTable.size(m), m))
    return [Subgroup(root, m) for m in masks]


def normal_subgroups(G) -> list:
    root, amb = _ambient(G)
    t = root.table
    lat = subgroup_lattice(root)
    if amb == t.all_mask:
        out = [c.representative for c in lat.classes
               if c.class_size == 1 and t.is_normal(c.representative.mask, amb)]
    else:
        out = [Subgroup(root, m) for m in lat.subgroups_of(amb) if t.is_normal(m, amb)]
        out.sort(key=lambda h: (h.order, h.mask))
    return out


def element_classes(t: ElementTable, within: int) -> list:
    """Conjugacy classes of elements of the subgroup ``within`` (arrays of indices)."""
    gens = np.asarray(t.gens(within), dtype=np.int64)
    idx = t.indices(within)
    label = np.full(t.n, -1, dtype=np.int64)
    classes = []
    for x in idx:
        if label[x] >= 0:
            continue
        cls = np.array([x], dtype=np.int64)
        label[x] = len(classes)
        frontier = cls
        while frontier.size and gens.size:
            imgs = np.unique(t.conj[np.ix_(gens, frontier)].ravel())
            new = imgs[label[imgs] < 0]
            label[new] = len(classes)
            cls = np.concatenate([cls, new])
            frontier = new
        classes.append(np.sort(cls))
    return classes


def normal_subgroups_by_closure(t: ElementTable, within: int, above: int = 1) -> list:
    """All normal subgroups of ``within`` containing the normal subgroup ``above``.

    Built by joining normal closures of single element classes; independent of
    the lattice.  Results are cached on the table.
    """
    cache = t.__dict__.setdefault("_normal_cache", {})
    key = (within, above)
    if key in cache:
        return list(cache[key])
    reps = [int(c[0]) for c in element_classes(t, within)]
    found = {above}
    queue = [above]
    while queue:
        n = queue.pop()
        for x in reps:
            if n >> x & 1:
                continue
            m = t.normal_closure(t.closure([x], start=n), within)
            if m not in found:
                found.add(m)
                queue.append(m)
    result = tuple(sorted(found, key=lambda m: (ElementTable.size(m), m)))
    cache[key] = result
    return list(result)


def sylow_subgroup(G, p: int) -> Subgroup:
    from .core import sylow_subgroup as _sylow
    return _sylow(G, p)


def hall_pprime_subgroup(G, p: int):
    """A subgroup of order ``|G|/p^a`` (lattice scan), or ``None``."""
    root, amb = _ambient(G)
    size = ElementTable.size(amb)
    target = size // p_part(size, p)
    lat = subgroup_lattice(root)
    for m in lat.subgroups_of(amb):
        if ElementTable.size(m) == target:
            return Subgroup(root, lat.classes[lat.class_of[m]].representative.mask
                            if amb == root.table.all_mask else m)
    return None


def primary_cyclic_subgroups(G) -> list:
    """Class representatives of nontrivial cyclic subgroups of prime-power order."""
    root, amb = _ambient(G)
    t = root.table
    lat = subgroup_lattice(root)
    if amb != t.all_mask:
        raise InputError("primary_cyclic_subgroups is defined for the whole group")
    out = []
    for c in lat.classes:
        if not is_prime_power(c.order):
            continue
        idx = t.indices(c.representative.mask)
        if int(t.orders[idx].max()) == c.order:
            out.append(c.representative)
    return out


def frattini_subgroup(G) -> Subgroup:
    root, amb = _ambient(G)
    lat = subgroup_lattice(root)
    result = amb
    for m in lat.maximal_in(amb):
        result &= m
    return Subgroup(root, result)


def all_maximal_chains(G, H: Subgroup, cap: int = 100_000) -> list:
    """Every chain ``H = H_0 <. H_1 <. ... <. H_n = G`` of actual subgroups."""
    root, amb = _inside(G, H)
    lat = subgroup_lattice(root)
    h = H.mask
    chains = []

    def walk(x, path):
        if x == h:
            if len(chains) >= cap:
                raise ResourceCapError(f"more than {cap} maximal chains", len(chains), cap)
            chains.append(ChainWitness(tuple(Subgroup(root, m) for m in reversed(path))))
            return
        for m in lat.maximal_containing(x, h):
            path.append(m)
            walk(m, path)
            path.pop()

    walk(amb, [amb])
    return chains
