"""Decide, on finite data, the hypotheses under which a groupoid carrying a
triple of permutation families (S, T, P) with an involution-like map ``bar``
must be a Moufang loop, and re-derive that conclusion from the table."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import NotMoufang
from .loops import CayleyTable, classify, inverses
from .perms import Permutation, compose, inverse_perm


@dataclass(frozen=True)
class ReconstructionInput:
    groupoid: CayleyTable
    S: tuple[Permutation, ...]
    T: tuple[Permutation, ...]
    P: tuple[Permutation, ...]
    bar: tuple[int, ...]

    def __post_init__(self):
        n = self.groupoid.order
        for name in ("S", "T", "P"):
            fam = tuple(getattr(self, name))
            if len(fam) != n:
                raise ValueError(f"family {name} has {len(fam)} members, groupoid has order {n}")
            object.__setattr__(self, name, fam)
        bar = tuple(int(x) for x in self.bar)
        if len(bar) != n or any(not 0 <= x < n for x in bar):
            raise ValueError("bar must map every element to an element")
        object.__setattr__(self, "bar", bar)
        degrees = {p.degree for p in self.S + self.T + self.P}
        if len(degrees) != 1:
            raise ValueError("all permutations must have the same degree")

    def replace_S(self, g: int, p: Permutation) -> "ReconstructionInput":
        S = list(self.S)
        S[g] = p
        return ReconstructionInput(self.groupoid, tuple(S), self.T, self.P, self.bar)


@dataclass(frozen=True)
class ReconstructionVerdict:
    is_moufang_loop: bool
    unit: int | None = None
    inverse_map: tuple[int, ...] | None = None
    failed_condition: int | None = None
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ok": self.is_moufang_loop,
            "unit": self.unit,
            "inverse": list(self.inverse_map) if self.inverse_map is not None else None,
            "failed_condition": self.failed_condition,
            "witness": self.witness or None,
        }


def _fail(cond: int, **witness) -> ReconstructionVerdict:
    return ReconstructionVerdict(False, failed_condition=cond, witness=witness)


def check_conditions(inp: ReconstructionInput) -> ReconstructionVerdict:
    """Check the four hypotheses in order and stop at the first failure.

    1. ``S(g)T(g)P(g) = 1``;
    2. ``S(g)^-1 = S(bar g)`` and ``T(g)^-1 = T(bar g)``;
    3. the six shifted relations with ``bar g`` in place of ``g^-1``;
    4. ``g -> (S(g), T(g))`` is injective.

    When all hold, the unit ``g * bar(g)`` is computed and checked to be
    independent of ``g`` and two-sided, ``bar`` is checked to be the
    two-sided inverse, and the Moufang identity is checked on the table.
    A failure at that stage (which would refute the implication) is
    reported with ``failed_condition=None``.
    """
    G, S, T, P, bar = inp.groupoid, inp.S, inp.T, inp.P, inp.bar
    M, n = G.rows, G.order
    one = Permutation.identity(S[0].degree)

    for g in range(n):
        if compose(S[g], T[g], P[g]) != one:
            return _fail(1, relation="S(g)T(g)P(g) = 1", g=g)

    for g in range(n):
        if S[bar[g]] != inverse_perm(S[g]):
            return _fail(2, relation="S(g)^-1 = S(bar g)", g=g)
        if T[bar[g]] != inverse_perm(T[g]):
            return _fail(2, relation="T(g)^-1 = T(bar g)", g=g)

    relations = (
        ("S((bar g)h) = P(g)S(h)T(g)", lambda g, h: S[M[bar[g]][h]], lambda g, h: compose(P[g], S[h], T[g])),
        ("T((bar g)h) = S(g)T(h)P(g)", lambda g, h: T[M[bar[g]][h]], lambda g, h: compose(S[g], T[h], P[g])),
        ("P((bar g)h) = T(g)P(h)S(g)", lambda g, h: P[M[bar[g]][h]], lambda g, h: compose(T[g], P[h], S[g])),
        ("S(h(bar g)) = T(g)S(h)P(g)", lambda g, h: S[M[h][bar[g]]], lambda g, h: compose(T[g], S[h], P[g])),
        ("T(h(bar g)) = P(g)T(h)S(g)", lambda g, h: T[M[h][bar[g]]], lambda g, h: compose(P[g], T[h], S[g])),
        ("P(h(bar g)) = S(g)P(h)T(g)", lambda g, h: P[M[h][bar[g]]], lambda g, h: compose(S[g], P[h], T[g])),
    )
    for name, lhs, rhs in relations:
        for g, h in product(range(n), repeat=2):
            if lhs(g, h) != rhs(g, h):
                return _fail(3, relation=name, g=g, h=h)

    seen: dict[tuple[Permutation, Permutation], int] = {}
    for g in range(n):
        key = (S[g], T[g])
        if key in seen:
            return _fail(4, relation="S(g) = S(h), T(g) = T(h) implies g = h", g=seen[key], h=g)
        seen[key] = g

    e = M[0][bar[0]]
    for g in range(n):
        if M[g][bar[g]] != e or M[bar[g]][g] != e:
            return _fail(None, relation="g(bar g) = (bar g)g is independent of g", g=g)
    for g in range(n):
        if M[e][g] != g or M[g][e] != g:
            return _fail(None, relation="g(bar g) is a two-sided unit", g=g)
    cls = classify(G)
    if not cls.is_moufang:
        w = cls.witness("moufang")
        return _fail(None, relation="Moufang loop", elements=list(w.elements))
    return ReconstructionVerdict(True, unit=e, inverse_map=bar)


def forge_from_translations(G: CayleyTable, bar=None) -> ReconstructionInput:
    """Package ``S = L``, ``T = R``, ``P = L^-1 R^-1`` for any quasigroup.

    Without an explicit ``bar``, each ``g`` is sent to an element whose
    left translation inverts ``L(g)`` when one exists, else to itself.
    """
    n = G.order
    S = tuple(Permutation(G.rows[g]) for g in range(n))
    T = tuple(Permutation(G.table[:, g].tolist()) for g in range(n))
    P = tuple(compose(inverse_perm(S[g]), inverse_perm(T[g])) for g in range(n))
    if bar is None:
        where = {p: g for g, p in reversed(list(enumerate(S)))}
        bar = tuple(where.get(inverse_perm(S[g]), g) for g in range(n))
    return ReconstructionInput(G, S, T, P, tuple(bar))


def reconstruct_from_regular(G: CayleyTable) -> ReconstructionInput:
    """The regular triple of a Moufang loop with ``bar`` the loop inversion."""
    cls = classify(G)
    if not cls.is_moufang:
        raise NotMoufang("regular reconstruction input needs a Moufang loop: " + cls.summary())
    return forge_from_translations(G, inverses(G))
