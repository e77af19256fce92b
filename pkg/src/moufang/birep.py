"""Birepresentations (S, T) of finite Moufang loops and their triality.

A birepresentation assigns to every loop element ``g`` two permutations
``S[g]`` and ``T[g]`` of a finite set with

    S(e) = T(e) = 1,
    S(g)T(g)S(h) = S(gh)T(g),
    S(g)T(g)T(h) = T(hg)S(g).

Words of permutations are read right to left (see :mod:`moufang.perms`).
The quadratic family ``P(g) = S(g)^-1 T(g)^-1`` completes the triple
(S, T, P) on which the six triality substitutions act.

Every checker returns :class:`RelationReport` objects instead of raising,
so that failures can be reported, serialized and compared.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Sequence

from .errors import MoufangError, RelationViolation
from .loops import CayleyTable, inverses, is_subloop, left_translation, right_translation, unit
from .perms import DEFAULT_MAX_ORDER, Permutation, PermGroup, closure, commutator, compose, inverse_perm

MAX_VIOLATIONS = 32

Family = Sequence[Permutation]


# -- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    g: int
    h: int | None
    lhs: Permutation
    rhs: Permutation

    def to_dict(self) -> dict:
        return {"g": self.g, "h": self.h, "lhs": self.lhs.to_list(), "rhs": self.rhs.to_list()}


@dataclass
class RelationReport:
    relation: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, g, h, lhs, rhs) -> None:
        self.checked += 1
        if lhs != rhs:
            self.failures += 1
            if len(self.violations) < MAX_VIOLATIONS:
                self.violations.append(Violation(g, h, lhs, rhs))

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }

    def render(self) -> str:
        if self.ok:
            return f"PASS  {self.relation}  ({self.checked} checked)"
        lines = [f"FAIL  {self.relation}  ({self.failures} of {self.checked} violated)"]
        for v in self.violations[:3]:
            at = f"g={v.g}" if v.h is None else f"g={v.g}, h={v.h}"
            lines.append(f"        {at}: {v.lhs.cycle_notation()} != {v.rhs.cycle_notation()}")
        return "\n".join(lines)


def _check_pairs(name: str, n: int, lhs: Callable, rhs: Callable) -> RelationReport:
    rep = RelationReport(name)
    for g, h in product(range(n), repeat=2):
        rep.record(g, h, lhs(g, h), rhs(g, h))
    return rep


def _check_elements(name: str, n: int, lhs: Callable, rhs: Callable) -> RelationReport:
    rep = RelationReport(name)
    for g in range(n):
        rep.record(g, None, lhs(g), rhs(g))
    return rep


def all_ok(reports) -> bool:
    return all(r.ok for r in reports)


# -- validation of raw families ---------------------------------------------

def _as_family(G: CayleyTable, F: Family, name: str) -> tuple[Permutation, ...]:
    F = tuple(p if isinstance(p, Permutation) else Permutation(p) for p in F)
    if len(F) != G.order:
        raise ValueError(f"family {name} has {len(F)} members, loop has order {G.order}")
    return F


def validate(G: CayleyTable, S: Family, T: Family) -> list[RelationReport]:
    """Check the defining relations of a birepresentation on raw families.

    The first three reports are the definition proper; the last two are
    the equivalent forms ``S(h)T(g)S(g) = T(g)S(hg)`` and
    ``T(h)T(g)S(g) = S(g)T(gh)``.
    """
    S = _as_family(G, S, "S")
    T = _as_family(G, T, "T")
    degree = S[0].degree
    if any(p.degree != degree for p in S + T):
        raise ValueError("all permutations in a birepresentation must have the same degree")
    n = G.order
    M = G.rows
    e = unit(G)
    one = Permutation.identity(degree)

    unit_rep = RelationReport("S(e) = T(e) = 1")
    unit_rep.record(e, None, S[e], one)
    unit_rep.record(e, None, T[e], one)
    return [
        unit_rep,
        _check_pairs("S(g)T(g)S(h) = S(gh)T(g)", n,
                     lambda g, h: compose(S[g], T[g], S[h]),
                     lambda g, h: compose(S[M[g][h]], T[g])),
        _check_pairs("S(g)T(g)T(h) = T(hg)S(g)", n,
                     lambda g, h: compose(S[g], T[g], T[h]),
                     lambda g, h: compose(T[M[h][g]], S[g])),
        _check_pairs("S(h)T(g)S(g) = T(g)S(hg)", n,
                     lambda g, h: compose(S[h], T[g], S[g]),
                     lambda g, h: compose(T[g], S[M[h][g]])),
        _check_pairs("T(h)T(g)S(g) = S(g)T(gh)", n,
                     lambda g, h: compose(T[h], T[g], S[g]),
                     lambda g, h: compose(S[g], T[M[g][h]])),
    ]


class Birepresentation:
    """A validated birepresentation of a Moufang loop.

    Construction raises :class:`RelationViolation` unless the defining
    relations hold for all pairs. Use :func:`validate` to inspect
    families that may not be birepresentations.
    """

    def __init__(self, loop: CayleyTable, S: Family, T: Family):
        self.loop = loop
        self.S = _as_family(loop, S, "S")
        self.T = _as_family(loop, T, "T")
        reports = validate(loop, self.S, self.T)
        if not all_ok(reports[:3]):
            bad = next(r for r in reports[:3] if not r.ok)
            raise RelationViolation(f"not a birepresentation: {bad.relation} fails", reports)

    @property
    def degree(self) -> int:
        return self.S[0].degree

    @property
    def order(self) -> int:
        return self.loop.order

    @cached_property
    def unit(self) -> int:
        return unit(self.loop)

    @cached_property
    def inv(self) -> list[int]:
        return inverses(self.loop)

    @cached_property
    def S_inv(self) -> tuple[Permutation, ...]:
        return tuple(inverse_perm(p) for p in self.S)

    @cached_property
    def T_inv(self) -> tuple[Permutation, ...]:
        return tuple(inverse_perm(p) for p in self.T)

    def __repr__(self) -> str:
        return f"Birepresentation(order={self.order}, degree={self.degree})"


def regular_birepresentation(G: CayleyTable) -> Birepresentation:
    """``(L, R)``: left and right translations acting on the loop itself."""
    n = G.order
    return Birepresentation(G, [left_translation(G, g) for g in range(n)],
                            [right_translation(G, g) for g in range(n)])


def trivial_birepresentation(G: CayleyTable, degree: int = 1) -> Birepresentation:
    one = Permutation.identity(degree)
    return Birepresentation(G, [one] * G.order, [one] * G.order)


# -- the triple (S, T, P) ---------------------------------------------------

class TrialityTriple:
    """A birepresentation together with ``P`` satisfying ``S(g)T(g)P(g) = 1``."""

    def __init__(self, base: Birepresentation, P: Family):
        self.base = base
        self.P = _as_family(base.loop, P, "P")
        one = Permutation.identity(base.degree)
        for g in range(base.order):
            if compose(self.S[g], self.T[g], self.P[g]) != one:
                raise RelationViolation(f"S(g)T(g)P(g) != 1 at g={g}")
        if self.P[base.unit] != one:
            raise RelationViolation("P(e) != 1")
        for g in range(base.order):
            if self.P[base.inv[g]] != inverse_perm(self.P[g]):
                raise RelationViolation(f"P(g^-1) != P(g)^-1 at g={g}")

    @property
    def loop(self) -> CayleyTable:
        return self.base.loop

    @property
    def S(self):
        return self.base.S

    @property
    def T(self):
        return self.base.T

    @cached_property
    def P_inv(self) -> tuple[Permutation, ...]:
        return tuple(inverse_perm(p) for p in self.P)

    def families(self) -> tuple[tuple[Permutation, ...], ...]:
        return (self.S, self.T, self.P)

    def family(self, letter: str) -> tuple[Permutation, ...]:
        """``"S"``, ``"T"``, ``"P"`` or the inverse families ``"S^-1"`` etc."""
        b = self.base
        return {"S": b.S, "T": b.T, "P": self.P,
                "S^-1": b.S_inv, "T^-1": b.T_inv, "P^-1": self.P_inv}[letter]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrialityTriple):
            return NotImplemented
        return self.loop == other.loop and self.families() == other.families()

    def __repr__(self) -> str:
        return f"TrialityTriple(order={self.loop.order}, degree={self.base.degree})"


def quadratic_family(b: Birepresentation) -> TrialityTriple:
    """Complete ``b`` with ``P(g) = S(g)^-1 T(g)^-1``.

    Checks that ``S(g)`` and ``T(g)`` commute and that ``P(g)`` commutes
    with both.
    """
    for g in range(b.order):
        if compose(b.S[g], b.T[g]) != compose(b.T[g], b.S[g]):
            raise RelationViolation(f"S(g) and T(g) do not commute at g={g}")
    P = [compose(b.S_inv[g], b.T_inv[g]) for g in range(b.order)]
    for g in range(b.order):
        if compose(P[g], b.S[g]) != compose(b.S[g], P[g]) or compose(P[g], b.T[g]) != compose(b.T[g], P[g]):
            raise RelationViolation(f"P(g) does not commute with S(g), T(g) at g={g}")
    return TrialityTriple(b, P)


def regular_triple(G: CayleyTable) -> TrialityTriple:
    return quadratic_family(regular_birepresentation(G))


# -- consequences of the defining relations ---------------------------------

def st_commute_check(b: Birepresentation) -> RelationReport:
    return _check_elements("S(g)T(g) = T(g)S(g)", b.order,
                           lambda g: compose(b.S[g], b.T[g]), lambda g: compose(b.T[g], b.S[g]))


def inverse_map_check(b: Birepresentation) -> RelationReport:
    """``S(g^-1) = S(g)^-1`` and ``T(g^-1) = T(g)^-1``; one record per family and element."""
    rep = RelationReport("S(g^-1) = S(g)^-1, T(g^-1) = T(g)^-1")
    for g in range(b.order):
        rep.record(g, None, b.S[b.inv[g]], b.S_inv[g])
        rep.record(g, None, b.T[b.inv[g]], b.T_inv[g])
    return rep


def commutation_check(b: Birepresentation) -> RelationReport:
    S, T = b.S, b.T
    return _check_pairs("S(g)S(h)T(h)T(g) = T(h)T(g)S(g)S(h)", b.order,
                        lambda g, h: compose(S[g], S[h], T[h], T[g]),
                        lambda g, h: compose(T[h], T[g], S[g], S[h]))


def translation_expression_check(b: Birepresentation) -> list[RelationReport]:
    """Expressions for ``S``, ``T`` at ``g^-1 h`` and ``h g^-1`` in terms of S, T at g and h."""
    S, T, Si, Ti = b.S, b.T, b.S_inv, b.T_inv
    M, inv, n = b.loop.rows, b.inv, b.order
    return [
        _check_pairs("S(g^-1 h) = T(g)^-1 S(g)^-1 S(h) T(g)", n,
                     lambda g, h: S[M[inv[g]][h]], lambda g, h: compose(Ti[g], Si[g], S[h], T[g])),
        _check_pairs("T(g^-1 h) = S(g) T(h) T(g)^-1 S(g)^-1", n,
                     lambda g, h: T[M[inv[g]][h]], lambda g, h: compose(S[g], T[h], Ti[g], Si[g])),
        _check_pairs("S(h g^-1) = T(g) S(h) T(g)^-1 S(g)^-1", n,
                     lambda g, h: S[M[h][inv[g]]], lambda g, h: compose(T[g], S[h], Ti[g], Si[g])),
        _check_pairs("T(h g^-1) = S(g)^-1 T(g)^-1 T(h) S(g)", n,
                     lambda g, h: T[M[h][inv[g]]], lambda g, h: compose(Si[g], Ti[g], T[h], S[g])),
    ]


def quadratic_relations_check(t: TrialityTriple) -> list[RelationReport]:
    one = Permutation.identity(t.base.degree)
    n, inv = t.loop.order, t.base.inv
    return [
        _check_elements("S(g)T(g)P(g) = 1", n,
                        lambda g: compose(t.S[g], t.T[g], t.P[g]), lambda g: one),
        _check_elements("P(g^-1) = P(g)^-1", n, lambda g: t.P[inv[g]], lambda g: t.P_inv[g]),
        _check_elements("P(g)S(g) = S(g)P(g)", n,
                        lambda g: compose(t.P[g], t.S[g]), lambda g: compose(t.S[g], t.P[g])),
        _check_elements("P(g)T(g) = T(g)P(g)", n,
                        lambda g: compose(t.P[g], t.T[g]), lambda g: compose(t.T[g], t.P[g])),
    ]


def shifted_relation_check(t: TrialityTriple) -> list[RelationReport]:
    """The six relations expressing each family at ``g^-1 h`` and ``h g^-1``."""
    S, T, P = t.S, t.T, t.P
    M, inv, n = t.loop.rows, t.base.inv, t.loop.order
    left = lambda g, h: M[inv[g]][h]
    right = lambda g, h: M[h][inv[g]]
    return [
        _check_pairs("S(g^-1 h) = P(g)S(h)T(g)", n,
                     lambda g, h: S[left(g, h)], lambda g, h: compose(P[g], S[h], T[g])),
        _check_pairs("T(g^-1 h) = S(g)T(h)P(g)", n,
                     lambda g, h: T[left(g, h)], lambda g, h: compose(S[g], T[h], P[g])),
        _check_pairs("P(g^-1 h) = T(g)P(h)S(g)", n,
                     lambda g, h: P[left(g, h)], lambda g, h: compose(T[g], P[h], S[g])),
        _check_pairs("S(h g^-1) = T(g)S(h)P(g)", n,
                     lambda g, h: S[right(g, h)], lambda g, h: compose(T[g], S[h], P[g])),
        _check_pairs("T(h g^-1) = P(g)T(h)S(g)", n,
                     lambda g, h: T[right(g, h)], lambda g, h: compose(P[g], T[h], S[g])),
        _check_pairs("P(h g^-1) = S(g)P(h)T(g)", n,
                     lambda g, h: P[right(g, h)], lambda g, h: compose(S[g], P[h], T[g])),
    ]


def triality_commutation_check(t: TrialityTriple) -> list[RelationReport]:
    """The quartic commutation relation for each of (S,T), (T,P), (P,S)."""
    out = []
    for a, b in (("S", "T"), ("T", "P"), ("P", "S")):
        A, B = t.family(a), t.family(b)
        out.append(_check_pairs(
            f"{a}(g){a}(h){b}(h){b}(g) = {b}(h){b}(g){a}(g){a}(h)", t.loop.order,
            lambda g, h, A=A, B=B: compose(A[g], A[h], B[h], B[g]),
            lambda g, h, A=A, B=B: compose(B[h], B[g], A[g], A[h])))
    return out


def triple_closure_check(t: TrialityTriple) -> list[RelationReport]:
    M, n = t.loop.rows, t.loop.order
    out = []
    for letter in "STP":
        F = t.family(letter)
        out.append(_check_pairs(
            f"{letter}(g){letter}(h){letter}(g) = {letter}(ghg)", n,
            lambda g, h, F=F: compose(F[g], F[h], F[g]),
            lambda g, h, F=F: F[M[M[g][h]][g]]))
    return out


# -- triality ---------------------------------------------------------------

TRIALITY_PAIRS = ("(S,T)", "(T^-1,S^-1)", "(T,P)", "(P^-1,T^-1)", "(P,S)", "(S^-1,P^-1)")


def _pair_families(t: TrialityTriple, name: str):
    a, b = name[1:-1].split(",")
    return t.family(a), t.family(b)


def triality_pair_reports(t: TrialityTriple) -> dict[str, list[RelationReport]]:
    return {name: validate(t.loop, *_pair_families(t, name)) for name in TRIALITY_PAIRS}


def triality_pairs(t: TrialityTriple) -> dict[str, Birepresentation]:
    """The six birepresentations built from the families of ``t``, each validated."""
    out = {}
    for name in TRIALITY_PAIRS:
        try:
            out[name] = Birepresentation(t.loop, *_pair_families(t, name))
        except RelationViolation as exc:
            raise RelationViolation(f"triality pair {name} is not a birepresentation", exc.reports) from exc
    return out


# Each substitution sends the triple (S, T, P) to a new triple whose i-th
# family is family ``src`` of the old one, inverted when ``inv`` is set.
SUBSTITUTIONS: dict[str, tuple[tuple[int, bool], ...]] = {
    "1": ((0, False), (1, False), (2, False)),
    "tau": ((1, True), (0, True), (2, True)),
    "rho": ((1, False), (2, False), (0, False)),
    "rho2": ((2, False), (0, False), (1, False)),
    "rho.tau": ((2, True), (1, True), (0, True)),
    "rho2.tau": ((0, True), (2, True), (1, True)),
}


def compose_substitutions(first: str, second: str) -> str:
    """Name of the substitution equal to applying ``first`` and then ``second``."""
    a, b = SUBSTITUTIONS[first], SUBSTITUTIONS[second]
    combined = tuple((a[src][0], a[src][1] != flip) for src, flip in b)
    return next(name for name, mapping in SUBSTITUTIONS.items() if mapping == combined)


def triality_substitute(t: TrialityTriple, sub: str) -> TrialityTriple:
    """Apply a triality substitution and revalidate the resulting triple."""
    mapping = SUBSTITUTIONS[sub]
    fams = t.families()
    invs = (t.base.S_inv, t.base.T_inv, t.P_inv)
    new = [invs[src] if flip else fams[src] for src, flip in mapping]
    try:
        base = Birepresentation(t.loop, new[0], new[1])
        return TrialityTriple(base, new[2])
    except RelationViolation as exc:
        raise RelationViolation(f"substitution {sub} does not yield a triality triple: {exc}") from exc


# -- kernel, faithfulness, envelope ------------------------------------------

def kernel(b: Birepresentation) -> frozenset[int]:
    """``{g : S(g) = T(g) = 1}``, checked to be a subloop."""
    K = frozenset(g for g in range(b.order) if b.S[g].is_identity() and b.T[g].is_identity())
    if not is_subloop(b.loop, K):
        raise MoufangError(f"kernel {sorted(K)} is not a subloop")
    return K


def is_faithful(b: Birepresentation) -> bool:
    by_kernel = kernel(b) == {b.unit}
    by_injectivity = len({(b.S[g], b.T[g]) for g in range(b.order)}) == b.order
    if by_kernel != by_injectivity:
        raise MoufangError("kernel and injectivity criteria for faithfulness disagree")
    return by_kernel


def enveloping_group(b: Birepresentation, max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    return closure(list(b.S) + list(b.T), max_order=max_order)


# -- associators and minimality ---------------------------------------------

@dataclass(frozen=True)
class AssociatorSet:
    S_assoc: dict[tuple[int, int], Permutation]
    T_assoc: dict[tuple[int, int], Permutation]
    commutators: dict[tuple[int, int], Permutation]
    commutators_swapped: dict[tuple[int, int], Permutation]

    def trivial(self) -> bool:
        return all(p.is_identity() for d in (self.S_assoc, self.T_assoc, self.commutators,
                                              self.commutators_swapped) for p in d.values())


def associators(b: Birepresentation) -> AssociatorSet:
    """``S(g;h) = S(gh)^-1 S(g)S(h)``, ``T(g;h) = T(gh)T(g)^-1 T(h)^-1``,
    ``[T(g), S(h)^-1]`` and ``[S(g)^-1, T(h)]`` for all pairs."""
    M = b.loop.rows
    S, T, Si, Ti = b.S, b.T, b.S_inv, b.T_inv
    pairs = list(product(range(b.order), repeat=2))
    return AssociatorSet(
        {(g, h): compose(Si[M[g][h]], S[g], S[h]) for g, h in pairs},
        {(g, h): compose(T[M[g][h]], Ti[g], Ti[h]) for g, h in pairs},
        {(g, h): commutator(T[g], Si[h]) for g, h in pairs},
        {(g, h): commutator(Si[g], T[h]) for g, h in pairs},
    )


MINIMALITY_CHAINS = (("S", "T"), ("T", "P"), ("P", "S"))


def chain_members(t: TrialityTriple, a: str, b: str) -> list[tuple[str, Callable[[int, int], Permutation]]]:
    """The six expressions of the minimality chain for the pair (A, B).

    For (S, T) these are ``[T(g),S(h)^-1]``, ``S(gh)^-1 S(g)S(h)``,
    ``T(gh)T(g)^-1 T(h)^-1``, ``[S(g)^-1,T(h)]``, ``S(g)^-1 S(h)^-1 S(hg)``
    and ``T(g)T(h)T(hg)^-1``; the other chains are their rotations.
    """
    A, B = t.family(a), t.family(b)
    Ai, Bi = t.family(a + "^-1"), t.family(b + "^-1")
    M = t.loop.rows
    return [
        (f"[{b}(g),{a}(h)^-1]", lambda g, h: commutator(B[g], Ai[h])),
        (f"{a}(gh)^-1 {a}(g){a}(h)", lambda g, h: compose(Ai[M[g][h]], A[g], A[h])),
        (f"{b}(gh){b}(g)^-1 {b}(h)^-1", lambda g, h: compose(B[M[g][h]], Bi[g], Bi[h])),
        (f"[{a}(g)^-1,{b}(h)]", lambda g, h: commutator(Ai[g], B[h])),
        (f"{a}(g)^-1 {a}(h)^-1 {a}(hg)", lambda g, h: compose(Ai[g], Ai[h], A[M[h][g]])),
        (f"{b}(g){b}(h){b}(hg)^-1", lambda g, h: compose(B[g], B[h], Bi[M[h][g]])),
    ]


def minimality_check(t: TrialityTriple) -> list[RelationReport]:
    """Every member of each chain equals the first; then the associator chain."""
    out = []
    n = t.loop.order
    for a, b in MINIMALITY_CHAINS:
        members = chain_members(t, a, b)
        first_name, first = members[0]
        for name, fn in members[1:]:
            out.append(_check_pairs(f"{first_name} = {name}", n, first, fn))

    A = associators(t.base)
    Sa, Ta, C, Cs = A.S_assoc, A.T_assoc, A.commutators, A.commutators_swapped
    rhs = [
        ("S(g;h)", lambda g, h: Sa[g, h]),
        ("T(g;h)", lambda g, h: Ta[g, h]),
        ("[S(g)^-1,T(h)]", lambda g, h: Cs[g, h]),
        ("S(h;g)^-1", lambda g, h: inverse_perm(Sa[h, g])),
        ("T(h;g)^-1", lambda g, h: inverse_perm(Ta[h, g])),
    ]
    for name, fn in rhs:
        out.append(_check_pairs(f"[T(g),S(h)^-1] = {name}", n, lambda g, h: C[g, h], fn))
    return out


def is_associative_birep(b: Birepresentation) -> bool:
    """True iff ``S(g)S(h) = S(gh)`` for all pairs.

    The equivalent conditions ``T(g)T(h) = T(hg)`` and
    ``S(g)T(h) = T(h)S(g)`` are evaluated too; disagreement raises.
    ``T`` reverses products here: right translations of a group satisfy
    ``R(g)R(h) = R(hg)``.
    """
    M, S, T, n = b.loop.rows, b.S, b.T, b.order
    pairs = list(product(range(n), repeat=2))
    s_hom = all(compose(S[g], S[h]) == S[M[g][h]] for g, h in pairs)
    t_hom = all(compose(T[g], T[h]) == T[M[h][g]] for g, h in pairs)
    commute = all(compose(S[g], T[h]) == compose(T[h], S[g]) for g, h in pairs)
    if not s_hom == t_hom == commute:
        raise MoufangError(
            f"associativity conditions disagree: S {s_hom}, T {t_hom}, commuting {commute}")
    return s_hom


# -- the full battery -------------------------------------------------------

def run_all_checks(t: TrialityTriple) -> dict[str, list[RelationReport]]:
    """Every relation checker, grouped by section, in a fixed order."""
    b = t.base
    sections = {
        "defining relations": validate(t.loop, b.S, b.T),
        "commuting and inverses": [st_commute_check(b), inverse_map_check(b), commutation_check(b)],
        "translation expressions": translation_expression_check(b),
        "quadratic family": quadratic_relations_check(t),
        "shifted relations": shifted_relation_check(t),
        "triality commutation": triality_commutation_check(t),
    }
    for name, reps in triality_pair_reports(t).items():
        sections[f"triality pair {name}"] = reps
    sections["triple closure"] = triple_closure_check(t)
    sections["minimality"] = minimality_check(t)
    return sections
