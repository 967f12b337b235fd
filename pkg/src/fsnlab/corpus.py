"""Group files and the shipped corpora.

A group file is a JSON document::

    {"name": "S3", "degree": 3, "generators": ["(0 1 2)", "(0 1)"],
     "expected_order": 6, "tags": ["soluble"]}

A corpus is a directory of such files, or one JSON list of them.  Two corpora
ship with the package: every group of order at most 24 (one file per
isomorphism type, produced by :func:`generate_small_groups`) and a fixed
family of soluble groups of orders 25 to 200 (:func:`generate_family`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .core import Group, prime_factors
from .errors import InputError
from .groupgen import (
    affine_group, alternating, automorphisms, cyclic, cyclic_extension, dihedral, direct_product,
    find_isomorphism, invariants, quaternion8, symmetric, table_group,
)
from .permutation import Permutation, format_cycles, parse_cycles

__all__ = [
    "GroupSpec", "parse_group_spec", "parse_group_file", "render_group_spec", "spec_from_group",
    "load_corpus", "write_corpus", "packaged_corpus", "generate_small_groups", "generate_family",
    "SMALL_GROUP_COUNTS",
]

# number of isomorphism types of groups of order 1..24
SMALL_GROUP_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15)

_FIELDS = ("name", "degree", "generators", "expected_order", "tags")


@dataclass
class GroupSpec:
    name: str
    degree: int
    generators: list
    expected_order: int | None = None
    tags: list = field(default_factory=list)
    source: str = ""

    def build(self) -> Group:
        gens = []
        for k, text in enumerate(self.generators):
            try:
                gens.append(parse_cycles(text, self.degree))
            except InputError as exc:
                raise InputError(f"{self.source or self.name}: generator {k}: {exc}") from None
        G = Group(self.degree, gens, name=self.name)
        if self.expected_order is not None and G.order != self.expected_order:
            raise InputError(f"{self.source or self.name}: expected order {self.expected_order}, "
                             f"generators give order {G.order}")
        return G

    def as_dict(self) -> dict:
        return {"name": self.name, "degree": self.degree, "generators": list(self.generators),
                "expected_order": self.expected_order, "tags": list(self.tags)}


def _spec_from_obj(obj, source: str) -> GroupSpec:
    if not isinstance(obj, dict):
        raise InputError(f"{source}: a group file must hold a JSON object")
    unknown = set(obj) - set(_FIELDS)
    if unknown:
        raise InputError(f"{source}: unknown fields {sorted(unknown)}")
    try:
        name = obj["name"]
        degree = obj["degree"]
        gens = obj["generators"]
    except KeyError as exc:
        raise InputError(f"{source}: missing field {exc.args[0]!r}") from None
    if not isinstance(name, str):
        raise InputError(f"{source}: name must be a string")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise InputError(f"{source}: degree must be a positive integer")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise InputError(f"{source}: generators must be a list of cycle strings")
    order = obj.get("expected_order")
    if order is not None and (not isinstance(order, int) or isinstance(order, bool) or order < 1):
        raise InputError(f"{source}: expected_order must be a positive integer")
    tags = obj.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise InputError(f"{source}: tags must be a list of strings")
    return GroupSpec(name, degree, gens, order, tags, source)


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: parse error at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from None


def parse_group_spec(text: str, source: str = "<text>") -> GroupSpec:
    return _spec_from_obj(_load_json(text, source), source)


def parse_group_file(path_or_text) -> Group:
    """Build the group described by a file path or by the JSON text itself."""
    if isinstance(path_or_text, Path) or not str(path_or_text).lstrip().startswith("{"):
        path = Path(path_or_text)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        return parse_group_spec(text, str(path)).build()
    return parse_group_spec(str(path_or_text)).build()


def render_group_spec(spec: GroupSpec) -> str:
    return json.dumps(spec.as_dict(), indent=2) + "\n"


def spec_from_group(G: Group, name: str | None = None, tags=()) -> GroupSpec:
    return GroupSpec(name or G.name or f"order{G.order}", G.degree,
                     [format_cycles(g) for g in G.generators], G.order, list(tags))


def load_corpus(path) -> list:
    """Group specs from a directory of ``.json`` files (sorted by file name) or one JSON list."""
    path = Path(path)
    if path.is_dir():
        files = sorted(path.glob("*.json"))
        if not files:
            raise InputError(f"no .json group files in {path}")
        return [parse_group_spec(f.read_text(encoding="utf-8"), str(f)) for f in files]
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    data = _load_json(text, str(path))
    if isinstance(data, dict):
        return [_spec_from_obj(data, str(path))]
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a group object or a list of them")
    return [_spec_from_obj(obj, f"{path}[{k}]") for k, obj in enumerate(data)]


def write_corpus(path, specs) -> None:
    """Write one JSON list, one entry per line group."""
    path = Path(path)
    body = ",\n".join("  " + json.dumps(s.as_dict()) for s in specs)
    path.write_text("[\n" + body + "\n]\n", encoding="utf-8")


def packaged_corpus(name: str) -> list:
    """``"soluble_le_24"`` or ``"family_le_200"``."""
    ref = resources.files("fsnlab").joinpath("data", f"{name}.json")
    if not ref.is_file():
        raise InputError(f"no packaged corpus named {name!r}")
    with resources.as_file(ref) as p:
        return load_corpus(p)


# --------------------------------------------------------------------------
# generation


def _inner(mul: np.ndarray, c: int) -> np.ndarray:
    inv = np.argmax(mul == 0, axis=1)
    return mul[mul[inv[c], np.arange(mul.shape[0])], c]


def _extensions(mul_n: np.ndarray, p: int):
    """Tables of all cyclic extensions ``<N, z>`` with ``z^p`` in ``N`` and ``N`` of index ``p``."""
    n = mul_n.shape[0]
    inner = [_inner(mul_n, c) for c in range(n)]
    for alpha in automorphisms(mul_n):
        ap = np.arange(n)
        for _ in range(p):
            ap = alpha[ap]
        for c in range(n):
            if alpha[c] == c and np.array_equal(ap, inner[c]):
                yield cyclic_extension(mul_n, alpha, c, p)


def generate_small_groups(max_order: int = 24) -> dict:
    """Multiplication tables of every group of order up to ``max_order``, one per isomorphism type.

    Every group of order below 60 is soluble, so it has a normal subgroup of
    prime index and is a cyclic extension of a group of smaller order; running
    through all extensions of all smaller groups therefore reaches every type.
    Candidates are kept only if no isomorphism to an earlier one exists.
    """
    if max_order >= 60:
        raise InputError("extension enumeration is only complete below order 60")
    tables = {1: [np.zeros((1, 1), dtype=np.int64)]}
    for n in range(2, max_order + 1):
        found = {}
        for p in sorted(set(prime_factors(n))):
            for base in tables[n // p]:
                for mul in _extensions(base, p):
                    key = invariants(mul)
                    bucket = found.setdefault(key, [])
                    if not any(find_isomorphism(mul, other) is not None for other in bucket):
                        bucket.append(mul)
        tables[n] = [m for key in sorted(found, key=repr) for m in found[key]]
    return tables


def small_group_specs(max_order: int = 24) -> list:
    out = []
    for n, mats in sorted(generate_small_groups(max_order).items()):
        for k, mul in enumerate(mats, start=1):
            G = table_group(mul, name=f"G{n}_{k}")
            tags = ["soluble"]
            if G.table.is_abelian(G.table.all_mask):
                tags.append("abelian")
            elif G.table.is_nilpotent(G.table.all_mask):
                tags.append("nilpotent")
            out.append(spec_from_group(G, tags=tags))
    return out


def _sl23() -> Group:
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]

    def act(m):
        return Permutation([vecs.index(((m[0][0] * a + m[1][0] * b) % 3, (m[0][1] * a + m[1][1] * b) % 3))
                            for a, b in vecs])
    return Group(8, [act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])], name="SL(2,3)")


def _gl23() -> Group:
    G = _sl23()
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    det2 = Permutation([vecs.index((a, (2 * b) % 3)) for a, b in vecs])
    return Group(8, list(G.generators) + [det2], name="GL(2,3)")


def _frobenius(q: int, m: int) -> Group:
    """``C_q x| C_m`` with ``C_m`` acting by multiplication by an element of order ``m``."""
    r = next(r for r in range(2, q) if pow(r, m, q) == 1 and all(pow(r, d, q) != 1 for d in range(1, m)))
    return Group(q, [Permutation([(i + 1) % q for i in range(q)]), Permutation([(i * r) % q for i in range(q)])],
                 name=f"C{q}:C{m}")


def _family_members() -> list:
    s3, s4, a4, d8 = symmetric(3), symmetric(4), alternating(4), dihedral(4)
    q8, sl, gl = quaternion8(), _sl23(), _gl23()
    c = cyclic
    members = [
        direct_product(s3, s3, name="S3 x S3"),
        direct_product(s3, c(5), name="S3 x C5"),
        direct_product(a4, c(3), name="A4 x C3"),
        direct_product(s4, c(2), name="S4 x C2"),
        direct_product(s4, c(3), name="S4 x C3"),
        direct_product(s4, s3, name="S4 x S3"),
        direct_product(a4, a4, name="A4 x A4"),
        direct_product(a4, c(2), c(2), name="A4 x C2 x C2"),
        direct_product(sl, c(2), name="SL(2,3) x C2"),
        direct_product(sl, c(3), name="SL(2,3) x C3"),
        direct_product(s3, d8, name="S3 x D8"),
        direct_product(s3, q8, name="S3 x Q8"),
        direct_product(d8, c(3), name="D8 x C3"),
        direct_product(s3, c(2), c(2), c(2), name="S3 x E8"),
        direct_product(_frobenius(7, 3), c(2), name="C7:C3 x C2"),
        direct_product(_frobenius(7, 3), c(3), name="C7:C3 x C3"),
        direct_product(_frobenius(5, 4), c(2), name="C5:C4 x C2"),
        direct_product(s3, s3, c(3), name="S3 x S3 x C3"),
        direct_product(a4, s3, name="A4 x S3"),
        direct_product(c(3), c(3), c(3), name="E27"),
        gl,
        _frobenius(13, 3), _frobenius(13, 4), _frobenius(13, 6), _frobenius(13, 12),
        _frobenius(11, 5), _frobenius(11, 10), _frobenius(7, 6), _frobenius(5, 4),
        _frobenius(17, 8), _frobenius(19, 9), _frobenius(31, 5), _frobenius(29, 7),
        _frobenius(37, 4), _frobenius(41, 5), _frobenius(43, 3), _frobenius(31, 6),
        dihedral(13), dihedral(15), dihedral(16), dihedral(18), dihedral(20), dihedral(21),
        dihedral(25), dihedral(27), dihedral(30), dihedral(36), dihedral(45), dihedral(50),
        affine_group(3, 2, [[[0, 1], [2, 0]], [[1, 1], [1, 2]]], name="E9:Q8"),
        affine_group(3, 2, [[[0, 1], [2, 0]]], name="E9:C4"),
        affine_group(3, 2, [[[2, 0], [0, 1]], [[1, 0], [0, 2]]], name="E9:E4"),
        affine_group(3, 2, [[[1, 1], [0, 1]], [[2, 0], [0, 1]]], name="E9:(upper unitriangular x C2)"),
        affine_group(3, 2, [[[0, 1], [2, 0]], [[1, 1], [1, 2]], [[1, 0], [0, 2]]], name="E9:SD16"),
        affine_group(3, 2, [[[1, 1], [0, 1]], [[0, 1], [2, 0]]], name="ASL(2,3)"),
        affine_group(2, 3, [[[0, 1, 0], [0, 0, 1], [1, 1, 0]]], name="E8:C7"),
        affine_group(2, 3, [[[0, 1, 0], [0, 0, 1], [1, 0, 0]]], name="E8:C3"),
        affine_group(5, 2, [[[0, 1], [4, 0]]], name="E25:C4"),
        affine_group(5, 2, [[[2, 0], [0, 3]]], name="E25:C4 diagonal"),
        affine_group(5, 2, [[[0, 1], [4, 4]]], name="E25:C3"),
        affine_group(5, 2, [[[0, 1], [4, 0]], [[2, 0], [0, 2]]], name="E25:(C4 x C4)"),
        affine_group(7, 2, [[[0, 1], [6, 6]]], name="E49:C3"),
        affine_group(7, 2, [[[0, 1], [6, 0]]], name="E49:C4"),
        affine_group(2, 4, [[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]]], name="E16:C15"),
        affine_group(2, 4, [[[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 1]]], name="E16:C3"),
    ]
    return members


def generate_family(min_order: int = 25, max_order: int = 200) -> list:
    """The documented family of soluble groups with orders in ``[min_order, max_order]``.

    Members are fixed constructions (direct products of small groups,
    Frobenius groups ``C_q x| C_m``, dihedral groups and affine groups over
    small fields); insoluble members or orders outside the range are dropped
    and isomorphic duplicates are removed.
    """
    out, seen = [], {}
    for G in _family_members():
        t = G.table
        if not (min_order <= G.order <= max_order) or not t.is_soluble(t.all_mask):
            continue
        key = invariants(G)
        if any(find_isomorphism(G, H) is not None for H in seen.get(key, [])):
            continue
        seen.setdefault(key, []).append(G)
        out.append(G)
    out.sort(key=lambda G: (G.order, G.name))
    return [spec_from_group(G, tags=["soluble", "family"]) for G in out]


def build_packaged_corpora(outdir=None) -> dict:
    """Regenerate the shipped corpus files; returns the number of groups per corpus."""
    outdir = Path(outdir) if outdir is not None else Path(__file__).with_name("data")
    outdir.mkdir(parents=True, exist_ok=True)
    small = small_group_specs(24)
    family = generate_family()
    write_corpus(outdir / "soluble_le_24.json", small)
    write_corpus(outdir / "family_le_200.json", family)
    return {"soluble_le_24": len(small), "family_le_200": len(family)}


if __name__ == "__main__":
    print(build_packaged_corpora())
