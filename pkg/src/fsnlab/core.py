"""Finite permutation groups, subgroups and the basic subgroup operators.

A :class:`Group` owns a Schreier-Sims chain (exact order, membership).  When
its order is within ``Config.table_cap`` it also gets an :class:`ElementTable`:
the elements in lexicographic order, a multiplication table and conjugation
table.  Subgroups are bitmasks over that element numbering, so everything
downstream (lattice, formation predicates on sections, classification) is
integer arithmetic on one table.
"""

from __future__ import annotations

import hashlib
import threading
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, ResourceCapError
from .permutation import Permutation
from .schreier_sims import BSGS

__all__ = [
    "Config", "configure", "get_config",
    "Group", "Subgroup", "QuotientGroup", "ElementTable",
    "group_from_generators", "contains", "normalizer", "core", "conjugate_subgroup",
    "derived_subgroup", "derived_series", "lower_central_series", "quotient",
    "fitting_subgroup", "center", "centralizer", "is_normal", "is_nilpotent",
    "is_abelian", "is_soluble", "pcore", "sylow_subgroup", "prime_factors",
]


@dataclass(frozen=True)
class Config:
    degree_cap: int = 64
    order_cap: int = 10**6
    table_cap: int = 2000
    seed: int = 0


_config = Config()


def get_config() -> Config:
    return _config


def configure(**changes) -> Config:
    """Replace fields of the process-wide default configuration."""
    global _config
    _config = replace(_config, **changes)
    return _config


def prime_factors(n: int) -> list:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


# --------------------------------------------------------------------------
# element table


class ElementTable:
    """Dense representation of a group of modest order.

    Element 0 is the identity.  ``mul[i, j]`` is the index of ``e_i * e_j``
    (``e_i`` applied first); ``conj[g, x]`` is the index of ``x ** e_g``.
    """

    def __init__(self, elements: np.ndarray):
        self.perms = np.ascontiguousarray(elements, dtype=np.int64)
        n, d = self.perms.shape
        self.n = n
        self.degree = d
        self.nbytes = (n + 7) // 8
        rng = np.random.default_rng(0x5EED)
        while True:
            w = rng.integers(1, 2**62, size=d, dtype=np.int64).astype(np.uint64)
            keys = self.perms.astype(np.uint64) @ w
            order = np.argsort(keys, kind="stable")
            sk = keys[order]
            if n < 2 or np.all(sk[1:] != sk[:-1]):
                break
        self._w = w
        self._sorted_keys = sk
        self._key_order = order
        mul = np.empty((n, n), dtype=np.int32)
        chunk = max(1, 4_000_000 // max(1, n * d))
        for start in range(0, n, chunk):
            stop = min(n, start + chunk)
            # (e_i * e_j)[k] = e_j[e_i[k]]
            prods = self.perms[:, self.perms[start:stop]]  # (n, rows, d) indexed [j, i, k]
            pk = prods.astype(np.uint64) @ w
            mul[start:stop] = self._lookup(pk).T
        self.mul = mul
        self.inv = np.argmax(mul == 0, axis=1).astype(np.int32)
        self.all_mask = (1 << n) - 1
        self._gens_cache = {}
        self._lock = threading.Lock()

    def _lookup(self, keys):
        pos = np.searchsorted(self._sorted_keys, keys)
        return self._key_order[pos].astype(np.int32)

    def index(self, perm) -> int:
        images = np.asarray(perm.images if isinstance(perm, Permutation) else perm, dtype=np.int64)
        if images.shape != (self.degree,):
            raise InputError("degree mismatch")
        key = images.astype(np.uint64) @ self._w
        pos = int(np.searchsorted(self._sorted_keys, key))
        if pos >= self.n or self._sorted_keys[pos] != key:
            raise KeyError("not an element")
        idx = int(self._key_order[pos])
        if not np.array_equal(self.perms[idx], images):
            raise KeyError("not an element")
        return idx

    def perm(self, idx: int) -> Permutation:
        return Permutation._trusted(tuple(int(i) for i in self.perms[idx]))

    @cached_property
    def conj(self) -> np.ndarray:
        left = self.mul[self.inv]  # left[g, x] = g^-1 x
        return self.mul[left, np.arange(self.n, dtype=np.int32)[:, None]]

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.n
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n, dtype=np.int32)
        ar = np.arange(n, dtype=np.int32)
        k = 1
        while not orders.all():
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            cur = self.mul[cur, ar]
            k += 1
        return orders

    # -- masks -------------------------------------------------------------

    def mask(self, indices) -> int:
        b = np.zeros(self.n, dtype=bool)
        b[np.asarray(indices, dtype=np.int64)] = True
        return self.mask_from_bool(b)

    def mask_from_bool(self, b: np.ndarray) -> int:
        return int.from_bytes(np.packbits(b, bitorder="little").tobytes(), "little")

    def bools(self, mask: int) -> np.ndarray:
        raw = np.frombuffer(mask.to_bytes(self.nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.n].astype(bool)

    def indices(self, mask: int) -> np.ndarray:
        return np.flatnonzero(self.bools(mask))

    @staticmethod
    def size(mask: int) -> int:
        return mask.bit_count() if hasattr(mask, "bit_count") else bin(mask).count("1")

    # -- generation ----------------------------------------------------------

    def closure(self, gens, start: int = 1) -> int:
        """Smallest subgroup containing the subgroup ``start`` and ``gens``.

        ``start`` must be a subgroup mask; its generators are folded in.
        """
        gens = list(gens)
        if start != 1:
            gens = list(self.gens(start)) + gens
        gens = np.unique(np.asarray(gens, dtype=np.int64))
        gens = gens[gens != 0]
        inset = self.bools(start)
        if gens.size == 0 or inset[gens].all():
            return start
        frontier = np.flatnonzero(inset)
        while frontier.size:
            prod = self.mul[np.ix_(frontier, gens)].ravel()
            prod = prod[~inset[prod]]
            if prod.size == 0:
                break
            new = np.unique(prod)
            inset[new] = True
            frontier = new
        return self.mask_from_bool(inset)

    def gens(self, mask: int) -> tuple:
        """A small deterministic generating set (indices) for the subgroup ``mask``."""
        cached = self._gens_cache.get(mask)
        if cached is not None:
            return cached
        idx = self.indices(mask)
        if idx.size <= 1:
            result = ()
        else:
            orders = self.orders[idx]
            cand = idx[np.lexsort((idx, -orders))]
            chosen = []
            cur = np.zeros(self.n, dtype=bool)
            cur[0] = True
            target = idx.size
            count = 1
            while count < target:
                x = int(cand[np.argmax(~cur[cand])])
                chosen.append(x)
                curmask = self._closure_raw(chosen)
                cur = self.bools(curmask)
                count = int(cur.sum())
            result = tuple(chosen)
        with self._lock:
            self._gens_cache[mask] = result
        return result

    def _closure_raw(self, gens) -> int:
        gens = np.asarray(gens, dtype=np.int64)
        inset = np.zeros(self.n, dtype=bool)
        inset[0] = True
        frontier = np.array([0], dtype=np.int64)
        while frontier.size:
            prod = self.mul[np.ix_(frontier, gens)].ravel()
            prod = prod[~inset[prod]]
            if prod.size == 0:
                break
            new = np.unique(prod)
            inset[new] = True
            frontier = new
        return self.mask_from_bool(inset)

    def join(self, a: int, b: int) -> int:
        if a & b == b:
            return a
        if a & b == a:
            return b
        return self.closure(self.gens(b), start=a)

    def product_normal(self, h: int, n: int) -> int:
        """``HN`` for ``N`` normalized by ``H`` (a product of subgroups)."""
        hi = self.indices(h)
        ni = self.indices(n)
        b = np.zeros(self.n, dtype=bool)
        b[self.mul[np.ix_(hi, ni)].ravel()] = True
        return self.mask_from_bool(b)

    def cyclic(self, x: int) -> int:
        b = np.zeros(self.n, dtype=bool)
        cur = x
        b[0] = True
        while cur != 0:
            b[cur] = True
            cur = int(self.mul[cur, x])
        return self.mask_from_bool(b)

    def power(self, x: int, k: int) -> int:
        result = 0
        base = x
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    # -- conjugation -----------------------------------------------------------

    def conjugate(self, mask: int, g: int) -> int:
        b = np.zeros(self.n, dtype=bool)
        b[self.conj[g, self.indices(mask)]] = True
        return self.mask_from_bool(b)

    def normalizes(self, x_idx: np.ndarray, h: int) -> np.ndarray:
        """Boolean per ``x`` in ``x_idx``: does ``x`` normalize subgroup ``h``?"""
        gens = np.asarray(self.gens(h), dtype=np.int64)
        if gens.size == 0:
            return np.ones(len(x_idx), dtype=bool)
        inh = self.bools(h)
        return inh[self.conj[np.ix_(x_idx, gens)]].all(axis=1)

    def normalizer(self, h: int, within: int) -> int:
        xi = self.indices(within)
        return self.mask(xi[self.normalizes(xi, h)])

    def is_normal(self, h: int, within: int) -> bool:
        gens = np.asarray(self.gens(within), dtype=np.int64)
        hg = np.asarray(self.gens(h), dtype=np.int64)
        if gens.size == 0 or hg.size == 0:
            return True
        inh = self.bools(h)
        return bool(inh[self.conj[np.ix_(gens, hg)]].all())

    def core(self, m: int, within: int) -> int:
        """Largest subgroup of ``m`` normal in ``within``."""
        gens = np.asarray(self.gens(within), dtype=np.int64)
        if gens.size == 0:
            return m
        cur = self.bools(m)
        while True:
            idx = np.flatnonzero(cur)
            keep = cur[self.conj[np.ix_(gens, idx)]].all(axis=0)
            if keep.all():
                return self.mask_from_bool(cur)
            cur = cur.copy()
            cur[idx[~keep]] = False

    def normal_closure(self, m: int, within: int) -> int:
        """Smallest normal subgroup of ``within`` containing the subgroup ``m``."""
        gens = np.asarray(self.gens(within), dtype=np.int64)
        cur = m
        while True:
            hg = np.asarray(self.gens(cur), dtype=np.int64)
            if hg.size == 0 or gens.size == 0:
                return cur
            images = np.unique(self.conj[np.ix_(gens, hg)].ravel())
            inc = self.bools(cur)
            new = images[~inc[images]]
            if new.size == 0:
                return cur
            cur = self.closure(new, start=cur)

    def commutator(self, a: int, b: int) -> int:
        """``[A, B]``, for subgroups normalizing each other."""
        ga = np.asarray(self.gens(a), dtype=np.int64)
        gb = np.asarray(self.gens(b), dtype=np.int64)
        if ga.size == 0 or gb.size == 0:
            return 1
        inv = self.inv
        x = self.mul[inv[ga][:, None], inv[gb][None, :]]  # a^-1 b^-1
        x = self.mul[x, ga[:, None]]
        x = self.mul[x, gb[None, :]]
        comms = np.unique(x.ravel())
        base = self.closure(comms)
        return self.normal_closure(base, self.join(a, b))

    # -- series -------------------------------------------------------------------

    def derived(self, m: int) -> int:
        return self.commutator(m, m)

    def derived_series(self, m: int) -> list:
        series = [m]
        while True:
            nxt = self.derived(series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def lower_central_series(self, m: int) -> list:
        series = [m]
        while True:
            nxt = self.commutator(series[-1], m)
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def is_abelian(self, m: int) -> bool:
        g = np.asarray(self.gens(m), dtype=np.int64)
        if g.size < 2:
            return True
        return bool(np.array_equal(self.mul[np.ix_(g, g)], self.mul[np.ix_(g, g)].T))

    def is_nilpotent(self, m: int) -> bool:
        return self.lower_central_series(m)[-1] == 1

    def is_soluble(self, m: int) -> bool:
        return self.derived_series(m)[-1] == 1

    def centralizer(self, m: int, within: int) -> int:
        gens = np.asarray(self.gens(m), dtype=np.int64)
        xi = self.indices(within)
        if gens.size == 0:
            return within
        ok = (self.conj[np.ix_(xi, gens)] == gens[None, :]).all(axis=1)
        return self.mask(xi[ok])

    def sylow(self, m: int, p: int) -> int:
        """A Sylow ``p``-subgroup of ``m``, grown inside successive normalizers."""
        target = p_part(self.size(m), p)
        ppow = self.orders.copy()
        while True:
            reduced = ppow % p == 0
            if not reduced.any():
                break
            ppow[reduced] //= p
        is_pelt = ppow == 1
        cur = 1
        while self.size(cur) < target:
            nm = self.normalizer(cur, m)
            cand = self.indices(nm & ~cur)
            cand = cand[is_pelt[cand]]
            if cand.size == 0:
                raise AssertionError("Sylow growth stalled")
            cur = self.closure([int(cand[0])], start=cur)
        return cur

    def pcore(self, m: int, p: int) -> int:
        if self.size(m) % p:
            return 1
        return self.core(self.sylow(m, p), m)

    def fitting(self, m: int) -> int:
        result = 1
        for p in prime_factors(self.size(m)):
            result = self.join(result, self.pcore(m, p))
        return result


# --------------------------------------------------------------------------
# groups and subgroups


class Group:
    """A finite permutation group given by generators."""

    def __init__(self, degree: int, generators: Iterable = (), *, name: str | None = None,
                 config: Config | None = None):
        config = config or _config
        if degree < 1:
            raise InputError("degree must be positive")
        if degree > config.degree_cap:
            raise ResourceCapError(f"degree {degree} exceeds cap {config.degree_cap}",
                                   degree, config.degree_cap)
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise InputError(f"generator {g} has degree {g.degree}, expected {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.config = config
        self._bsgs = BSGS(degree, [g.images for g in gens], seed=config.seed)
        self.order = self._bsgs.order
        if self.order > config.order_cap:
            raise ResourceCapError(f"group order {self.order} exceeds cap {config.order_cap}",
                                   self.order, config.order_cap)
        self._cache = {}
        self._lock = threading.Lock()

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"<Group {label}order {self.order}, degree {self.degree}>"

    def __len__(self):
        return self.order

    def __contains__(self, g):
        return contains(self, g)

    def contains(self, g) -> bool:
        return contains(self, g)

    @cached_property
    def table(self) -> ElementTable:
        if self.order > self.config.table_cap:
            raise ResourceCapError(
                f"group order {self.order} exceeds the element-table cap {self.config.table_cap}",
                self.order, self.config.table_cap)
        return ElementTable(self._bsgs.elements_array())

    @property
    def has_table(self) -> bool:
        return self.order <= self.config.table_cap

    def elements(self) -> list:
        t = self.table
        return [t.perm(i) for i in range(t.n)]

    @cached_property
    def fingerprint(self) -> str:
        """Digest of the element set; equal for equal permutation groups."""
        h = hashlib.sha256()
        h.update(f"{self.degree}:{self.order}:".encode())
        if self.has_table:
            census = np.bincount(self.table.orders)
            h.update(census.tobytes())
            h.update(self.table.perms.astype(np.int16).tobytes())
        else:
            for g in sorted(g.images for g in self.generators):
                h.update(repr(g).encode())
        return h.hexdigest()

    def subgroup(self, generators: Iterable = ()) -> "Subgroup":
        t = self.table
        idx = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != self.degree:
                raise InputError("degree mismatch")
            try:
                idx.append(t.index(g))
            except KeyError:
                raise InputError(f"{g} is not an element of the group") from None
        return Subgroup(self, t.closure(idx))

    def full(self) -> "Subgroup":
        return Subgroup(self, self.table.all_mask)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, 1)

    def element_index(self, g) -> int:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        try:
            return self.table.index(g)
        except KeyError:
            raise InputError(f"{g} is not an element of the group") from None

    def memo(self, key, factory):
        """Per-group cache for derived structures (lattice, analyses)."""
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = factory()
        with self._lock:
            return self._cache.setdefault(key, value)


class Subgroup:
    """A subgroup of ``parent``, stored as a bitmask over the parent's element table."""

    __slots__ = ("parent", "mask", "__weakref__")

    def __init__(self, parent: Group, mask: int):
        self.parent = parent
        self.mask = mask

    @property
    def table(self) -> ElementTable:
        return self.parent.table

    @property
    def order(self) -> int:
        return ElementTable.size(self.mask)

    def __len__(self):
        return self.order

    @property
    def generators(self) -> tuple:
        t = self.table
        return tuple(t.perm(i) for i in t.gens(self.mask))

    def elements(self) -> list:
        t = self.table
        return [t.perm(i) for i in t.indices(self.mask)]

    def __contains__(self, g) -> bool:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        try:
            i = self.table.index(g)
        except KeyError:
            return False
        return bool(self.mask >> i & 1)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __le__(self, other: "Subgroup") -> bool:
        _same_parent(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: "Subgroup") -> "Subgroup":
        _same_parent(self, other)
        return Subgroup(self.parent, self.mask & other.mask)

    def join(self, other: "Subgroup") -> "Subgroup":
        _same_parent(self, other)
        return Subgroup(self.parent, self.table.join(self.mask, other.mask))

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_normal(self, ambient=None) -> bool:
        return is_normal(ambient if ambient is not None else self.parent, self)

    def as_group(self, name: str | None = None) -> Group:
        """This subgroup as a standalone permutation group of the parent's degree."""
        gens = self.generators
        return Group(self.parent.degree, gens, name=name, config=self.parent.config)

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent!r}>"


class QuotientGroup(Group):
    """``G/N`` realized on the right cosets of ``N``; remembers the projection."""

    def __init__(self, source: Group, kernel: "Subgroup", labels: np.ndarray, degree: int, gens,
                 config: Config):
        super().__init__(degree, gens, name=f"{source.name or 'G'}/N", config=config)
        self.source = source
        self.kernel = kernel
        self._labels = labels
        self._gen_images = {}

    def _image_index(self, src_idx: int) -> int:
        """Index in this group's table of the image of source element ``src_idx``."""
        cached = self._gen_images.get(src_idx)
        if cached is not None:
            return cached
        t = self.source.table
        row = self._labels[t.mul[self._reps, src_idx]]
        img = self.table.index(tuple(int(v) for v in row))
        self._gen_images[src_idx] = img
        return img

    @cached_property
    def _reps(self) -> np.ndarray:
        return np.unique(self._labels, return_index=True)[1]

    def project(self, h: "Subgroup") -> "Subgroup":
        """The image ``HN/N`` as a subgroup of this quotient."""
        if h.parent is not self.source:
            raise InputError("subgroup does not belong to the quotient's source group")
        imgs = [self._image_index(i) for i in self.source.table.gens(h.mask)]
        return Subgroup(self, self.table.closure(imgs))

    def preimage(self, k: "Subgroup") -> "Subgroup":
        """The full preimage of a subgroup of the quotient."""
        t = self.source.table
        gens = [self._image_index(int(i)) for i in range(t.n)]
        inside = self.table.bools(k.mask)[np.asarray(gens)]
        return Subgroup(self.source, t.mask(np.flatnonzero(inside)))


def _same_parent(a: Subgroup, b: Subgroup):
    if a.parent is not b.parent:
        raise InputError("subgroups of different parent groups")


def _ambient(a) -> tuple:
    """``(root group, mask)`` for a Group or a Subgroup used as an ambient group."""
    if isinstance(a, Subgroup):
        return a.parent, a.mask
    if isinstance(a, Group):
        return a, a.table.all_mask
    raise InputError(f"expected a Group or Subgroup, got {type(a).__name__}")


def _inside(ambient, h: Subgroup) -> tuple:
    root, amb = _ambient(ambient)
    if not isinstance(h, Subgroup) or h.parent is not root:
        raise InputError("subgroup does not belong to this group")
    if h.mask & ~amb:
        raise InputError("subgroup is not contained in the ambient group")
    return root, amb


# --------------------------------------------------------------------------
# operations


def group_from_generators(degree: int, gens: Sequence = (), name: str | None = None,
                          config: Config | None = None) -> Group:
    return Group(degree, gens, name=name, config=config)


def contains(G, g) -> bool:
    if not isinstance(g, Permutation):
        g = Permutation(g)
    if isinstance(G, Subgroup):
        if g.degree != G.parent.degree:
            raise InputError(f"degree mismatch: {g.degree} vs {G.parent.degree}")
        return g in G
    if g.degree != G.degree:
        raise InputError(f"degree mismatch: {g.degree} vs {G.degree}")
    return G._bsgs.contains(g.images)


def normalizer(G, H: Subgroup) -> Subgroup:
    root, amb = _inside(G, H)
    return Subgroup(root, root.table.normalizer(H.mask, amb))


def core(G, H: Subgroup) -> Subgroup:
    root, amb = _inside(G, H)
    return Subgroup(root, root.table.core(H.mask, amb))


def conjugate_subgroup(H: Subgroup, g) -> Subgroup:
    root = H.parent
    i = root.element_index(g)
    return Subgroup(root, root.table.conjugate(H.mask, i))


def is_normal(G, H: Subgroup) -> bool:
    root, amb = _inside(G, H)
    return root.table.is_normal(H.mask, amb)


def derived_subgroup(G) -> Subgroup:
    root, amb = _ambient(G)
    return Subgroup(root, root.table.derived(amb))


def derived_series(G) -> list:
    """``G >= G' >= G'' >= ...`` ending at the trivial group or at the first repeated term."""
    root, amb = _ambient(G)
    t = root.table
    series = [amb]
    while series[-1] != 1:
        nxt = t.derived(series[-1])
        series.append(nxt)
        if nxt == series[-2]:
            break
    return [Subgroup(root, m) for m in series]


def lower_central_series(G) -> list:
    root, amb = _ambient(G)
    return [Subgroup(root, m) for m in root.table.lower_central_series(amb)]


def center(G) -> Subgroup:
    root, amb = _ambient(G)
    return Subgroup(root, root.table.centralizer(amb, amb))


def centralizer(G, H: Subgroup) -> Subgroup:
    root, amb = _inside(G, H)
    return Subgroup(root, root.table.centralizer(H.mask, amb))


def is_abelian(G) -> bool:
    root, amb = _ambient(G)
    return root.table.is_abelian(amb)


def is_nilpotent(G) -> bool:
    root, amb = _ambient(G)
    return root.table.is_nilpotent(amb)


def is_soluble(G) -> bool:
    root, amb = _ambient(G)
    return root.table.is_soluble(amb)


def sylow_subgroup(G, p: int) -> Subgroup:
    root, amb = _ambient(G)
    size = ElementTable.size(amb)
    if p < 2 or size % p:
        raise InputError(f"{p} does not divide the group order {size}")
    return Subgroup(root, root.table.sylow(amb, p))


def pcore(G, p: int) -> Subgroup:
    root, amb = _ambient(G)
    return Subgroup(root, root.table.pcore(amb, p))


def fitting_subgroup(G) -> Subgroup:
    root, amb = _ambient(G)
    return Subgroup(root, root.table.fitting(amb))


def quotient(G: Group, N: Subgroup) -> QuotientGroup:
    """``G/N`` acting on the right cosets of ``N``, with a fresh Schreier-Sims chain."""
    if isinstance(G, Subgroup):
        raise InputError("quotient requires a Group; use Subgroup.as_group() first")
    root, amb = _inside(G, N)
    t = root.table
    if not t.is_normal(N.mask, amb):
        raise InputError("quotient by a non-normal subgroup")
    labels = np.full(t.n, -1, dtype=np.int64)
    nidx = t.indices(N.mask)
    k = 0
    for g in range(t.n):
        if labels[g] < 0:
            labels[t.mul[nidx, g]] = k
            k += 1
    reps = np.unique(labels, return_index=True)[1]
    gens = []
    for s in t.gens(amb):
        images = labels[t.mul[reps, s]]
        gens.append(Permutation._trusted(tuple(int(v) for v in images)))
    config = replace(root.config, degree_cap=max(root.config.degree_cap, k))
    return QuotientGroup(root, N, labels, k, gens, config)
