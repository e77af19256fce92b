"""Permutations of ``range(m)`` and breadth-first closure of permutation groups.

Composition follows function notation: ``compose(a, b)`` (also ``a * b``)
maps ``x`` to ``a(b(x))``, so in a word like ``S_g T_g`` the rightmost
factor acts first.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ClosureCapExceeded, DegreeMismatch

DEFAULT_MAX_ORDER = 10**6


class Permutation:
    """A bijection of ``{0, ..., m-1}`` stored as its image tuple."""

    __slots__ = ("image", "_hash")

    def __init__(self, image: Iterable[int]):
        image = tuple(int(x) for x in image)
        if not image:
            raise ValueError("permutation degree must be positive")
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a bijection of range({len(image)}): {list(image)}")
        self.image = image
        self._hash = hash(image)

    @classmethod
    def _trusted(cls, image: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.image = image
        p._hash = hash(image)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("permutation degree must be positive")
        return cls._trusted(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __getitem__(self, x: int) -> int:
        return self.image[x]

    def __len__(self) -> int:
        return len(self.image)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.image == other.image

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.image < other.image

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse_perm(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length > 1, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self.image[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.image[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.image)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({list(self.image)})"

    def to_list(self) -> list[int]:
        return list(self.image)


def compose(*perms: Permutation) -> Permutation:
    """Product of ``perms`` with the rightmost applied first.

    ``compose(a, b)(x) == a(b(x))``.
    """
    if not perms:
        raise ValueError("compose needs at least one permutation")
    result = perms[-1].image
    m = len(result)
    for p in reversed(perms[:-1]):
        if len(p.image) != m:
            raise DegreeMismatch(f"degrees {len(p.image)} and {m} differ")
        img = p.image
        result = tuple(img[x] for x in result)
    return Permutation._trusted(result)


def inverse_perm(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.image):
        inv[x] = i
    return Permutation._trusted(tuple(inv))


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """``[a, b] = a b a^-1 b^-1``."""
    return compose(a, b, inverse_perm(a), inverse_perm(b))


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    elements: frozenset[Permutation] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return contains(self, p)

    def __len__(self) -> int:
        return self.order


def closure(generators: Sequence[Permutation], max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    """Enumerate the group generated by ``generators`` breadth-first.

    For a finite set of permutations the monoid generated by left
    multiplication already contains all inverses, so only products are
    explored. Raises :class:`ClosureCapExceeded` once more than
    ``max_order`` elements have been found.
    """
    generators = tuple(generators)
    if not generators:
        raise ValueError("closure needs at least one generator")
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(f"generator degrees {g.degree} and {degree} differ")

    gens = sorted({g.image for g in generators})
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > max_order:
                    raise ClosureCapExceeded(f"closure exceeded {max_order} elements")
                queue.append(y)
    return PermGroup(degree, generators, frozenset(Permutation._trusted(x) for x in seen))


def contains(group: PermGroup, p: Permutation) -> bool:
    if p.degree != group.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {group.degree} differ")
    return p in group.elements
