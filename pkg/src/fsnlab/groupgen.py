"""Group constructions: standard families, products, extensions, isomorphism tests.

Abstract constructions (semidirect products by automorphism images, cyclic
extensions) are carried out on multiplication tables, realized as regular
permutation groups and then shrunk to a small faithful degree by acting on
the cosets of core-free subgroups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

import numpy as np

from .core import ElementTable, Group, get_config
from .errors import ConstructionError, InputError
from .permutation import Permutation

__all__ = [
    "cyclic", "elementary_abelian", "dihedral", "symmetric", "alternating", "quaternion8",
    "make_standard", "direct_product", "ActionSpec", "semidirect_product", "table_group",
    "reduce_degree", "automorphisms", "cyclic_extension", "invariants", "find_isomorphism",
    "are_isomorphic", "affine_group",
]


def _cycle(n: int, start: int = 0, degree: int | None = None) -> Permutation:
    degree = degree if degree is not None else start + n
    images = list(range(degree))
    for i in range(n):
        images[start + i] = start + (i + 1) % n
    return Permutation(images)


# --------------------------------------------------------------------------
# standard groups


def cyclic(m: int) -> Group:
    if m < 1:
        raise InputError("cyclic group order must be positive")
    return Group(max(m, 1), [_cycle(m)] if m > 1 else [], name=f"C{m}")


def elementary_abelian(p: int, n: int) -> Group:
    """``E_{p^n}`` as a product of ``n`` disjoint ``p``-cycles."""
    deg = p * n
    return Group(deg, [_cycle(p, p * i, deg) for i in range(n)], name=f"E{p}^{n}")


def dihedral(n: int) -> Group:
    """Dihedral group of order ``2n``; ``n = 2`` gives the Klein four-group on 4 points."""
    if n < 2:
        raise InputError("dihedral(n) needs n >= 2")
    if n == 2:
        return Group(4, [Permutation.from_cycles(4, "(0 1)(2 3)"),
                         Permutation.from_cycles(4, "(0 2)(1 3)")], name="D4")
    refl = Permutation([(-i) % n for i in range(n)])
    return Group(n, [_cycle(n), refl], name=f"D{2 * n}")


def symmetric(n: int) -> Group:
    if n < 1:
        raise InputError("symmetric(n) needs n >= 1")
    gens = [] if n == 1 else [_cycle(n), Permutation.from_cycles(n, "(0 1)")]
    return Group(n, gens, name=f"S{n}")


def alternating(n: int) -> Group:
    if n < 1:
        raise InputError("alternating(n) needs n >= 1")
    gens = [Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)]
    return Group(n, gens, name=f"A{n}")


def quaternion8() -> Group:
    """Right regular representation of ``Q8 = <i, j>``."""
    # elements 0..7: 1, i, -1, -i, j, k, -j, -k
    i_img = [1, 2, 3, 0, 7, 4, 5, 6]
    j_img = [4, 5, 6, 7, 2, 3, 0, 1]
    return Group(8, [Permutation(i_img), Permutation(j_img)], name="Q8")


_STANDARD = {
    "cyclic": cyclic,
    "elementary_abelian": elementary_abelian,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "quaternion8": quaternion8,
}


def make_standard(kind: str, *params: int) -> Group:
    """``make_standard("dihedral", 5)``; the kinds are the keys of the standard table."""
    try:
        fn = _STANDARD[kind]
    except KeyError:
        raise InputError(f"unknown group kind {kind!r}; expected one of {sorted(_STANDARD)}") from None
    return fn(*params)


def direct_product(*groups: Group, name: str | None = None) -> Group:
    """Direct product acting on the disjoint union of the point sets."""
    if not groups:
        raise InputError("direct_product needs at least one factor")
    degree = sum(G.degree for G in groups)
    gens, offset = [], 0
    for G in groups:
        gens.extend(g.extend(degree, offset) for g in G.generators)
        offset += G.degree
    label = name or " x ".join(G.name or f"G{G.order}" for G in groups)
    return Group(degree, gens, name=label)


def affine_group(p: int, n: int, matrices, translations: bool = True, name: str | None = None) -> Group:
    """Group of affine maps of ``F_p^n`` generated by the given matrices (rows act on row vectors)."""
    vecs = list(itertools.product(range(p), repeat=n))
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for m in matrices:
        m = np.asarray(m, dtype=np.int64) % p
        gens.append(Permutation([index[tuple(int(x) for x in (np.asarray(v) @ m) % p)] for v in vecs]))
    if translations:
        for k in range(n):
            e = [0] * n
            e[k] = 1
            gens.append(Permutation([index[tuple((v[i] + e[i]) % p for i in range(n))] for v in vecs]))
    return Group(p ** n, gens, name=name)


# --------------------------------------------------------------------------
# tables


def _orders(mul: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    ar = np.arange(n)
    out = np.zeros(n, dtype=np.int64)
    cur = ar.copy()
    for k in range(1, n + 1):
        hit = (cur == 0) & (out == 0)
        out[hit] = k
        if out.all():
            break
        cur = mul[cur, ar]
    return out


def _closure(mul: np.ndarray, gens) -> np.ndarray:
    n = mul.shape[0]
    inset = np.zeros(n, dtype=bool)
    inset[0] = True
    frontier = np.array([0])
    gens = np.asarray(list(gens), dtype=np.int64)
    while frontier.size and gens.size:
        nxt = np.unique(mul[np.ix_(frontier, gens)].ravel())
        nxt = nxt[~inset[nxt]]
        inset[nxt] = True
        frontier = nxt
    return inset


def _table_gens(mul: np.ndarray) -> list:
    """A small generating set: repeatedly add an element of largest order outside the span."""
    orders = _orders(mul)
    by_order = np.argsort(-orders, kind="stable")
    inset = np.zeros(mul.shape[0], dtype=bool)
    inset[0] = True
    gens = []
    while not inset.all():
        g = int(next(x for x in by_order if not inset[x]))
        gens.append(g)
        inset = _closure(mul, gens)
    return gens


def _table_of(G: Group) -> np.ndarray:
    return G.table.mul.astype(np.int64)


def table_group(mul: np.ndarray, gens=None, name: str | None = None, reduce: bool = True) -> Group:
    """The group with multiplication table ``mul`` (identity at index 0)."""
    n = mul.shape[0]
    if gens is None:
        gens = _table_gens(mul)
    perms = [Permutation._trusted(tuple(int(v) for v in mul[:, g])) for g in gens]
    cfg = get_config()
    cfg = replace(cfg, degree_cap=max(cfg.degree_cap, n), table_cap=max(cfg.table_cap, n))
    G = Group(n, perms, name=name, config=cfg)
    if G.order != n:
        raise ConstructionError(f"table generators span {G.order} of {n} elements")
    return reduce_degree(G) if reduce else G


def _coset_action(t: ElementTable, h: int, gens) -> list:
    hidx = t.indices(h)
    labels = np.full(t.n, -1, dtype=np.int64)
    k = 0
    for g in range(t.n):
        if labels[g] < 0:
            labels[t.mul[hidx, g]] = k
            k += 1
    reps = np.unique(labels, return_index=True)[1]
    return [labels[t.mul[reps, s]] for s in gens]


def reduce_degree(G: Group, name: str | None = None) -> Group:
    """A faithful action of ``G`` on cosets of core-free-in-total subgroups, chosen greedily."""
    from .lattice import subgroup_lattice

    t = G.table
    full = t.all_mask
    lat = subgroup_lattice(G)
    chosen, cores, cur = [], [], full
    for c in sorted(lat.classes, key=lambda c: (-c.order, c.representative.mask)):
        if c.order == G.order:
            continue
        core = t.core(c.representative.mask, full)
        if cur & core != cur:
            chosen.append(c.representative.mask)
            cores.append(core)
            cur &= core
            if cur == 1:
                break
    # drop subgroups whose cores are not needed for a trivial intersection
    i = 0
    while i < len(chosen):
        rest = full
        for j, core in enumerate(cores):
            if j != i:
                rest &= core
        if rest == 1 and len(chosen) > 1:
            del chosen[i], cores[i]
        else:
            i += 1
    if G.order == 1:
        return Group(1, [], name=name or G.name)
    gens = [int(s) for s in t.gens(full)]
    blocks = [_coset_action(t, h, gens) for h in chosen]
    images = [np.concatenate([b[i] + off for b, off in zip(blocks, _offsets(blocks))])
              for i in range(len(gens))]
    degree = sum(len(b[0]) for b in blocks)
    if degree >= G.degree:
        return G if name is None else Group(G.degree, G.generators, name=name, config=G.config)
    out = Group(degree, [Permutation._trusted(tuple(int(v) for v in im)) for im in images],
                name=name or G.name)
    if out.order != G.order:
        raise ConstructionError("coset action is not faithful")
    return out


def _offsets(blocks) -> list:
    offs, acc = [], 0
    for b in blocks:
        offs.append(acc)
        acc += len(b[0])
    return offs


# --------------------------------------------------------------------------
# homomorphisms and automorphisms


def _extend_hom(mul_a, gens_a, mul_b, images, check=None):
    """Index map extending ``gens_a[i] -> images[i]`` to a homomorphism, or ``None``."""
    n = mul_a.shape[0]
    img = np.full(n, -1, dtype=np.int64)
    img[0] = 0
    queue = [0]
    while queue:
        e = queue.pop()
        ie = img[e]
        for s, v in zip(gens_a, images):
            f = mul_a[e, s]
            w = mul_b[ie, v]
            if img[f] < 0:
                if check is not None and not check(f, w):
                    return None
                img[f] = w
                queue.append(f)
            elif img[f] != w:
                return None
    return img


def automorphisms(G, limit: int = 100_000) -> list:
    """All automorphisms of a group, as index arrays over its element table."""
    mul = G if isinstance(G, np.ndarray) else _table_of(G)
    n = mul.shape[0]
    gens = _table_gens(mul)
    inv = _invariant_vector(mul)
    cands = [np.flatnonzero(inv == inv[g]) for g in gens]
    out = []
    for images in itertools.product(*cands):
        img = _extend_hom(mul, gens, mul, images, check=lambda f, w: inv[f] == inv[w])
        if img is not None and np.unique(img).size == n:
            out.append(img)
            if len(out) > limit:
                raise ConstructionError(f"more than {limit} automorphisms")
    return out


def _compose_tables(mul_h, mul_n, alphas) -> np.ndarray:
    """``(h1, n1)(h2, n2) = (h1 h2, alpha_{h2}(n1) n2)`` with index ``h * |N| + n``."""
    nh, nn = mul_h.shape[0], mul_n.shape[0]
    out = np.empty((nh * nn, nh * nn), dtype=np.int64)
    for h1 in range(nh):
        for h2 in range(nh):
            block = mul_n[alphas[h2][:, None], np.arange(nn)[None, :]]
            out[h1 * nn:(h1 + 1) * nn, h2 * nn:(h2 + 1) * nn] = mul_h[h1, h2] * nn + block
    return out


def cyclic_extension(mul_n: np.ndarray, alpha: np.ndarray, c: int, p: int) -> np.ndarray:
    """Table of ``<N, z>`` with ``z^p = c``, ``z^-1 n z = alpha(n)``; index ``i * |N| + n`` is ``z^i n``.

    Requires ``alpha(c) = c`` and ``alpha^p`` equal to conjugation by ``c``.
    """
    nn = mul_n.shape[0]
    inv = np.argmax(mul_n == 0, axis=1)
    ar = np.arange(nn)
    pows = [ar]
    for _ in range(p):
        pows.append(alpha[pows[-1]])
    if alpha[c] != c or not np.array_equal(pows[p], mul_n[mul_n[inv[c], ar], c]):
        raise InputError("alpha and c do not define a cyclic extension")
    out = np.empty((p * nn, p * nn), dtype=np.int64)
    for i in range(p):
        for j in range(p):
            # (z^i a)(z^j b) = z^(i+j) alpha^j(a) b
            block = mul_n[pows[j][:, None], ar[None, :]]
            k = i + j
            if k >= p:
                block = mul_n[np.full_like(block, c), block]
                k -= p
            out[i * nn:(i + 1) * nn, j * nn:(j + 1) * nn] = k * nn + block
    return out


# --------------------------------------------------------------------------
# semidirect products


@dataclass
class ActionSpec:
    """How each complement generator acts on the normal factor.

    ``images[j][i]`` is ``h_j^-1 n_i h_j`` for the ``i``-th generator ``n_i`` of
    the normal factor.  ``realizers[j]``, if given, is a permutation of the
    normal factor's points whose conjugation induces the same map; it allows
    a small-degree construction.
    """

    images: list
    realizers: list | None = None
    label: str = ""
    extra: dict = field(default_factory=dict)


def _automorphism_from_images(N: Group, images) -> np.ndarray:
    t = N.table
    gens = [t.index(g) for g in N.generators]
    try:
        imgs = [t.index(x if isinstance(x, Permutation) else Permutation(x)) for x in images]
    except KeyError:
        raise InputError("an action image is not an element of the normal factor") from None
    mul = t.mul.astype(np.int64)
    a = _extend_hom(mul, gens, mul, imgs)
    if a is None or np.unique(a).size != t.n:
        raise InputError("action images do not extend to an automorphism")
    return a


def semidirect_product(N: Group, H: Group, action: ActionSpec, name: str | None = None) -> Group:
    """``N x| H`` with the action given by ``action``; order ``|N||H|`` is checked."""
    if len(action.images) != len(H.generators):
        raise InputError("one image list per complement generator is required")
    for imgs in action.images:
        if len(imgs) != len(N.generators):
            raise InputError("one image per normal-factor generator is required")
    autos = [_automorphism_from_images(N, imgs) for imgs in action.images]
    target = N.order * H.order
    if action.realizers is not None:
        G = _realized(N, H, action, autos, name)
        if G is not None:
            return G
    th = H.table
    hgens = [th.index(g) for g in H.generators]
    alphas = [None] * th.n
    alphas[0] = np.arange(N.order)
    queue = [0]
    while queue:
        h = queue.pop()
        for s, a in zip(hgens, autos):
            hs = int(th.mul[h, s])
            val = a[alphas[h]]
            if alphas[hs] is None:
                alphas[hs] = val
                queue.append(hs)
            elif not np.array_equal(alphas[hs], val):
                raise InputError("the action is not a homomorphism from the complement")
    mul = _compose_tables(th.mul.astype(np.int64), N.table.mul.astype(np.int64), alphas)
    gens = [int(N.table.index(g)) for g in N.generators] + [hg * N.order for hg in hgens]
    G = table_group(mul, gens=gens, name=name)
    if G.order != target:
        raise ConstructionError(f"semidirect product has order {G.order}, expected {target}")
    return G


def _realized(N, H, action, autos, name):
    t = N.table
    for r, a in zip(action.realizers, autos):
        if r.degree != N.degree:
            raise InputError("realizer degree differs from the normal factor's degree")
        for g in N.generators:
            if t.index(g ** r) != a[t.index(g)]:
                raise InputError("realizer does not induce the stated images")
    target = N.order * H.order
    degree = N.degree + H.degree
    gens = [g.extend(degree) for g in N.generators]
    for r, h in zip(action.realizers, H.generators):
        gens.append(r.extend(degree) * h.extend(degree, N.degree))
    G = Group(degree, gens, name=name)
    if G.order != target:
        return None
    # drop the complement's points when the action on the normal factor's points is faithful
    small = Group(N.degree, [Permutation._trusted(g.images[:N.degree]) for g in gens], name=name)
    return small if small.order == target else G


# --------------------------------------------------------------------------
# isomorphism


def _invariant_vector(mul: np.ndarray) -> np.ndarray:
    """Per-element isomorphism invariant: order, centralizer size, number of square roots."""
    n = mul.shape[0]
    orders = _orders(mul)
    cent = (mul == mul.T).sum(axis=1)
    roots = np.bincount(mul[np.arange(n), np.arange(n)], minlength=n)
    return orders * (n + 1) ** 2 + cent * (n + 1) + roots


def invariants(G) -> tuple:
    """Cheap isomorphism invariant of a whole group."""
    mul = G if isinstance(G, np.ndarray) else _table_of(G)
    vec = _invariant_vector(mul)
    vals, counts = np.unique(vec, return_counts=True)
    n = mul.shape[0]
    inv = np.argmax(mul == 0, axis=1)
    a = np.arange(n)
    comm = mul[mul[inv[:, None], inv[None, :]], mul[a[:, None], a[None, :]]]
    derived = int(_closure(mul, np.unique(comm)).sum())
    return (n, derived) + tuple(zip(vals.tolist(), counts.tolist()))


def find_isomorphism(A, B):
    """An isomorphism ``A -> B`` as an index array between element tables, or ``None``."""
    ma = A if isinstance(A, np.ndarray) else _table_of(A)
    mb = B if isinstance(B, np.ndarray) else _table_of(B)
    if ma.shape != mb.shape:
        return None
    n = ma.shape[0]
    ia, ib = _invariant_vector(ma), _invariant_vector(mb)
    if not np.array_equal(np.sort(ia), np.sort(ib)):
        return None
    gens = _table_gens(ma)
    cands = [np.flatnonzero(ib == ia[g]) for g in gens]
    for images in itertools.product(*cands):
        img = _extend_hom(ma, gens, mb, images, check=lambda f, w: ia[f] == ib[w])
        if img is not None and np.unique(img).size == n:
            return img
    return None


def are_isomorphic(A, B) -> bool:
    return find_isomorphism(A, B) is not None
