"""Normal divisors, quotient loops and the birepresentation induced on G/Ker."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .birep import Birepresentation, is_faithful, kernel, regular_birepresentation
from .errors import NotASubloop, QuotientError
from .loops import CayleyTable, classify, generated_subloop, is_subloop, left_translation, right_translation, unit
from .perms import Permutation, compose, inverse_perm


@dataclass(frozen=True)
class InnerMaps:
    L_assoc: dict[tuple[int, int], Permutation]
    M_plus: dict[int, Permutation]


def inner_maps(G: CayleyTable) -> InnerMaps:
    """``L(g;h) = L(gh)^-1 L(g) L(h)`` for all pairs and ``M+(g) = R(g) L(g)^-1``."""
    n = G.order
    L = [left_translation(G, g) for g in range(n)]
    R = [right_translation(G, g) for g in range(n)]
    Li = [inverse_perm(p) for p in L]
    M = G.rows
    return InnerMaps(
        {(g, h): compose(Li[M[g][h]], L[g], L[h]) for g, h in product(range(n), repeat=2)},
        {g: compose(R[g], Li[g]) for g in range(n)},
    )


def is_normal_divisor(G: CayleyTable, N, maps: InnerMaps | None = None) -> bool:
    """True iff the subloop ``N`` is mapped into itself by every L(g;h) and M+(g)."""
    N = frozenset(N)
    if not is_subloop(G, N):
        raise NotASubloop(f"{sorted(N)} is not a subloop")
    maps = maps or inner_maps(G)
    for p in list(maps.L_assoc.values()) + list(maps.M_plus.values()):
        if any(p[k] not in N for k in N):
            return False
    return True


def normal_divisors(G: CayleyTable) -> list[frozenset[int]]:
    """Normal divisors among the subloops generated by at most two elements,
    plus ``G`` itself. Sorted by size, then by element list.
    """
    n = G.order
    maps = inner_maps(G)
    subloops = {generated_subloop(G, ()), frozenset(range(n))}
    subloops.update(generated_subloop(G, (g,)) for g in range(n))
    subloops.update(generated_subloop(G, pair) for pair in combinations(range(n), 2))
    found = [N for N in subloops if is_normal_divisor(G, N, maps)]
    return sorted(found, key=lambda N: (len(N), sorted(N)))


@dataclass(frozen=True)
class QuotientStructure:
    parent: CayleyTable
    divisor: frozenset[int]
    cosets: tuple[tuple[int, ...], ...]
    quotient_table: CayleyTable
    projection: tuple[int, ...]

    @property
    def unit_coset(self) -> int:
        return self.projection[unit(self.parent)]

    def to_dict(self) -> dict:
        return {
            "divisor": sorted(self.divisor),
            "cosets": [list(c) for c in self.cosets],
            "quotient_table": self.quotient_table.rows,
        }


def quotient(G: CayleyTable, N) -> QuotientStructure:
    """Build ``G/N`` from the cosets ``gN``.

    Raises :class:`QuotientError` if some ``gN != Ng``, if the cosets do
    not partition ``G``, if the coset product is not well defined, or if
    the result is not a Moufang loop.
    """
    N = frozenset(N)
    if not is_subloop(G, N):
        raise NotASubloop(f"{sorted(N)} is not a subloop")
    M, n = G.rows, G.order
    blocks = {}
    for g in range(n):
        left = frozenset(M[g][k] for k in N)
        right = frozenset(M[k][g] for k in N)
        if left != right:
            raise QuotientError(f"left and right cosets of {g} differ")
        blocks.setdefault(left, None)
    cosets = sorted((tuple(sorted(b)) for b in blocks), key=lambda c: c[0])
    projection = [-1] * n
    for i, c in enumerate(cosets):
        for g in c:
            if projection[g] != -1:
                raise QuotientError(f"cosets overlap at element {g}")
            projection[g] = i

    m = len(cosets)
    table = [[-1] * m for _ in range(m)]
    for g, h in product(range(n), repeat=2):
        a, b, c = projection[g], projection[h], projection[M[g][h]]
        if table[a][b] == -1:
            table[a][b] = c
        elif table[a][b] != c:
            raise QuotientError(f"coset product ill defined at representatives {g}, {h}")
    Q = CayleyTable(table)
    cls = classify(Q)
    if not cls.is_moufang:
        raise QuotientError("quotient is not a Moufang loop: " + cls.summary())
    if unit(Q) != projection[unit(G)]:
        raise QuotientError("unit of the quotient is not the coset of the divisor")
    return QuotientStructure(G, N, tuple(cosets), Q, tuple(projection))


def pullback(b: Birepresentation, qs: QuotientStructure) -> Birepresentation:
    """Compose a birepresentation of ``G/N`` with the projection ``G -> G/N``."""
    if b.loop != qs.quotient_table:
        raise ValueError("birepresentation is not defined on this quotient")
    pr = qs.projection
    return Birepresentation(qs.parent, [b.S[pr[g]] for g in range(qs.parent.order)],
                            [b.T[pr[g]] for g in range(qs.parent.order)])


def kernel_is_normal_check(b: Birepresentation) -> bool:
    """The kernel is a normal divisor, checked both via invariance and by
    evaluating S and T at ``M+(g)k`` and ``L(g;h)k`` for every kernel element ``k``."""
    K = kernel(b)
    maps = inner_maps(b.loop)
    if not is_normal_divisor(b.loop, K, maps):
        return False
    trivial = lambda x: b.S[x].is_identity() and b.T[x].is_identity()
    for k in K:
        if not all(trivial(p[k]) for p in maps.M_plus.values()):
            return False
        if not all(trivial(p[k]) for p in maps.L_assoc.values()):
            return False
    return True


def induced_birepresentation(b: Birepresentation) -> tuple[QuotientStructure, Birepresentation]:
    """The birepresentation ``gK -> S(g), T(g)`` of ``G/K`` where ``K`` is the kernel.

    Representative independence is checked over every element of every
    coset, and the result is checked to be faithful.
    """
    K = kernel(b)
    qs = quotient(b.loop, K)
    for coset in qs.cosets:
        g0 = coset[0]
        for g in coset[1:]:
            if b.S[g] != b.S[g0] or b.T[g] != b.T[g0]:
                raise QuotientError(f"S, T differ on representatives {g0} and {g} of one coset")
    induced = Birepresentation(qs.quotient_table, [b.S[c[0]] for c in qs.cosets],
                               [b.T[c[0]] for c in qs.cosets])
    if not is_faithful(induced):
        raise QuotientError("induced birepresentation is not faithful")
    return qs, induced


def quotient_report(G: CayleyTable, N) -> dict:
    """Quotient by ``N`` plus faithfulness of the induced birepresentation of
    the regular birepresentation of ``G/N`` pulled back to ``G``."""
    qs = quotient(G, N)
    lifted = pullback(regular_birepresentation(qs.quotient_table), qs)
    if kernel(lifted) != qs.divisor:
        raise QuotientError("kernel of the pulled-back birepresentation is not the divisor")
    _, induced = induced_birepresentation(lifted)
    return {**qs.to_dict(), "faithful": is_faithful(induced)}
