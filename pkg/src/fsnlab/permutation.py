"""Permutations on ``{0, ..., degree-1}`` and cycle notation.

Products act on the right: ``(p * q)(i) == q(p(i))``, so ``p * q`` means
"apply ``p`` first".  Conjugation is ``x ** g == ~g * x * g``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import InputError

__all__ = ["Permutation", "parse_cycles", "format_cycles"]


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a bijection on 0..{len(images) - 1}: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: "str | Iterable[Sequence[int]]") -> "Permutation":
        if isinstance(cycles, str):
            return parse_cycles(cycles, degree)
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 0 <= c < degree:
                    raise InputError(f"point {c} outside 0..{degree - 1}")
                if c in seen:
                    raise InputError(f"point {c} repeated in cycle notation")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise InputError("degree mismatch in product")
        o = other.images
        return Permutation._trusted(tuple(o[i] for i in self.images))

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, other):
        if isinstance(other, Permutation):
            return ~other * self * other
        n = int(other)
        base = self if n >= 0 else ~self
        n = abs(n)
        result = Permutation.identity(self.degree)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list:
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def extend(self, degree: int, offset: int = 0) -> "Permutation":
        """Embed into a larger degree, shifting points by ``offset``."""
        if offset + len(self.images) > degree:
            raise InputError("extension degree too small")
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[i + offset] = j + offset
        return Permutation._trusted(tuple(images))

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self):
        return format_cycles(self)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse ``"(0 1 2)(3 4)"`` style notation; commas and spaces both separate points."""
    stripped = text.strip()
    pos = 0
    cycles = []
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise InputError(f"malformed cycle notation {text!r} at column {pos + 1}: {stripped[pos:]!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(b) for b in body]
        except ValueError:
            raise InputError(f"non-integer point in {m.group(0)!r} at column {pos + 1}") from None
        if pts:
            cycles.append(pts)
        pos = m.end()
    return Permutation.from_cycles(degree, cycles)


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
