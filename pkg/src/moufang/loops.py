"""Finite binary structures given by Cayley tables.

Elements are the indices ``0..n-1``; ``table[g, h]`` is the product ``g*h``.
Nothing assumes that index 0 is the unit: :func:`unit` detects it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InverseMismatch, NotALoop, TableParseError
from .perms import Permutation


class CayleyTable:
    """An ``n x n`` multiplication table over element indices.

    The array is copied and made read-only, so tables can be shared freely.
    """

    __slots__ = ("table", "labels", "_rows")

    def __init__(self, table, labels: Sequence[str] | None = None):
        arr = np.array(table, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"Cayley table must be a nonempty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise ValueError(f"entry {arr[tuple(bad)]} at ({bad[0]}, {bad[1]}) is outside [0, {n})")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError(f"labels must be {n} distinct strings")
        arr.flags.writeable = False
        self.table = arr
        self.labels = labels
        self._rows = None

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def mul(self, g: int, h: int) -> int:
        return self.rows[g][h]

    @property
    def rows(self) -> list[list[int]]:
        """The table as nested Python lists, for tight scalar loops.

        The lists are cached and shared; copy them before mutating.
        """
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels else str(g)

    def relabel(self, perm: Sequence[int]) -> "CayleyTable":
        """Return the isomorphic table in which element ``g`` is renamed ``perm[g]``."""
        perm = np.asarray(perm)
        inv = np.argsort(perm)
        new = perm[self.table[np.ix_(inv, inv)]]
        return CayleyTable(new)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.table.tobytes(), self.labels))

    def __repr__(self) -> str:
        return f"CayleyTable(order={self.order})"


# -- text format ------------------------------------------------------------

def parse_cayley_table(text: str) -> CayleyTable:
    """Parse the plain-text table format.

    Line 1 holds ``n``; the next ``n`` lines hold ``n`` integers each.
    Lines starting with ``#`` are comments; a ``# labels: a b c`` comment
    attaches display labels. Blank lines are ignored.
    """
    content: list[tuple[int, str]] = []
    labels = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("labels:"):
                labels = body[len("labels:"):].split()
            continue
        content.append((lineno, line))

    if not content:
        raise TableParseError("missing header line with the table order", 1)
    lineno, header = content[0]
    try:
        n = int(header)
    except ValueError:
        raise TableParseError(f"malformed header {header!r}, expected an integer", lineno) from None
    if n < 1:
        raise TableParseError(f"table order must be positive, got {n}", lineno)

    rows = content[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lineno
        raise TableParseError(f"expected {n} rows, found {len(rows)}", last + (len(rows) < n))
    table = []
    for lineno, line in rows:
        fields = line.split()
        if len(fields) != n:
            raise TableParseError(f"expected {n} entries, found {len(fields)}", lineno)
        row = []
        for tok in fields:
            try:
                v = int(tok)
            except ValueError:
                raise TableParseError(f"malformed entry {tok!r}", lineno) from None
            if not 0 <= v < n:
                raise TableParseError(f"entry {v} out of range [0, {n})", lineno)
            row.append(v)
        table.append(row)
    if labels is not None and (len(labels) != n or len(set(labels)) != n):
        raise TableParseError(f"labels comment must list {n} distinct labels")
    return CayleyTable(table, labels)


def format_cayley_table(G: CayleyTable, comments: Iterable[str] = ()) -> str:
    width = len(str(G.order - 1))
    lines = [str(G.order)]
    lines += [" ".join(str(x).rjust(width) for x in row) for row in G.rows]
    if G.labels:
        lines.append("# labels: " + " ".join(G.labels))
    lines += ["# " + c for c in comments]
    return "\n".join(lines) + "\n"


# -- classification ---------------------------------------------------------

class Witness(NamedTuple):
    property: str
    elements: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class AlgebraClass:
    order: int
    is_quasigroup: bool
    unit: int | None
    is_loop: bool
    is_moufang: bool
    is_group: bool
    is_commutative: bool
    witnesses: tuple[Witness, ...] = field(default=())

    @property
    def is_associative(self) -> bool:
        return not any(w.property == "associative" for w in self.witnesses)

    def witness(self, prop: str) -> Witness | None:
        return next((w for w in self.witnesses if w.property == prop), None)

    @property
    def kind(self) -> str:
        if self.is_group:
            return "group"
        if self.is_moufang:
            return "Moufang loop"
        if self.is_loop:
            return "loop"
        if self.is_quasigroup:
            return "quasigroup"
        return "groupoid"

    def summary(self) -> str:
        assoc = "associative" if self.is_associative else "nonassociative"
        comm = "commutative" if self.is_commutative else "noncommutative"
        return f"{self.kind}, {assoc}, {comm}, order {self.order}"

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "kind": self.kind,
            "is_quasigroup": self.is_quasigroup,
            "unit": self.unit,
            "is_loop": self.is_loop,
            "is_moufang": self.is_moufang,
            "is_group": self.is_group,
            "is_associative": self.is_associative,
            "is_commutative": self.is_commutative,
            "witnesses": [
                {"property": w.property, "elements": list(w.elements), "detail": w.detail}
                for w in self.witnesses
            ],
        }


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray):
    bad = np.argwhere(lhs != rhs)
    return None if len(bad) == 0 else tuple(int(x) for x in bad[0])


def _quasigroup_witness(A: np.ndarray) -> Witness | None:
    n = A.shape[0]
    for g in range(n):
        row = A[g]
        if len(np.unique(row)) != n:
            h, k = _repeat(row)
            return Witness("quasigroup", (g, h, k), f"row {g}: {g}*{h} = {g}*{k} = {row[h]}")
    for g in range(n):
        col = A[:, g]
        if len(np.unique(col)) != n:
            h, k = _repeat(col)
            return Witness("quasigroup", (h, k, g), f"column {g}: {h}*{g} = {k}*{g} = {col[h]}")
    return None


def _repeat(v: np.ndarray) -> tuple[int, int]:
    first = {}
    for i, x in enumerate(v.tolist()):
        if x in first:
            return first[x], i
        first[x] = i
    raise AssertionError("no repeat")


def _find_unit(A: np.ndarray) -> int | None:
    idx = np.arange(A.shape[0])
    left = np.all(A == idx[None, :], axis=1)   # e*g == g
    right = np.all(A == idx[:, None], axis=0)  # g*e == g
    cands = np.flatnonzero(left & right)
    return int(cands[0]) if len(cands) else None


def classify(G: CayleyTable) -> AlgebraClass:
    """Exhaustively place ``G`` in the chain groupoid, quasigroup, loop, Moufang loop, group.

    The Moufang test is the identity ``(gh)(kg) = (g(hk))g`` over all
    triples. Each failed property gets a witness; a property that fails
    only because a weaker one failed inherits that weaker witness.
    """
    A = G.table
    n = G.order
    witnesses: list[Witness] = []

    qw = _quasigroup_witness(A)
    is_quasigroup = qw is None
    if qw:
        witnesses.append(qw)

    e = _find_unit(A)
    is_loop = is_quasigroup and e is not None
    loop_w = None
    if not is_loop:
        if qw is not None:
            loop_w = Witness("loop", qw.elements, "not a quasigroup: " + qw.detail)
        else:
            # candidate 0 fails on some side
            g = next(g for g in range(n) if A[0, g] != g or A[g, 0] != g)
            loop_w = Witness("loop", (0, g), f"no two-sided unit; e.g. 0*{g} = {A[0, g]}, {g}*0 = {A[g, 0]}")
        witnesses.append(loop_w)

    g, h, k = np.ix_(np.arange(n), np.arange(n), np.arange(n))
    gh = A[g, h]
    hk = A[h, k]
    moufang_bad = _first_mismatch(A[gh, A[k, g]], A[A[g, hk], g])
    assoc_bad = _first_mismatch(A[gh, k], A[g, hk])

    moufang_identity = moufang_bad is None
    is_moufang = is_loop and moufang_identity
    if not is_moufang:
        if moufang_bad is not None:
            a, b, c = moufang_bad
            witnesses.append(Witness(
                "moufang", moufang_bad,
                f"(gh)(kg) = {A[A[a, b], A[c, a]]} but (g(hk))g = {A[A[a, A[b, c]], a]}"))
        else:
            witnesses.append(Witness("moufang", loop_w.elements, loop_w.detail))

    if assoc_bad is not None:
        a, b, c = assoc_bad
        witnesses.append(Witness(
            "associative", assoc_bad, f"(gh)k = {A[A[a, b], c]} but g(hk) = {A[a, A[b, c]]}"))
    is_group = is_moufang and assoc_bad is None
    if not is_group:
        w = witnesses[-1] if assoc_bad is not None else next(
            w for w in witnesses if w.property == "moufang")
        witnesses.append(Witness("group", w.elements, w.detail))

    comm_bad = _first_mismatch(A, A.T)
    if comm_bad is not None:
        a, b = comm_bad
        witnesses.append(Witness("commutative", (a, b), f"gh = {A[a, b]} but hg = {A[b, a]}"))

    return AlgebraClass(
        order=n,
        is_quasigroup=is_quasigroup,
        unit=e if is_loop else None,
        is_loop=is_loop,
        is_moufang=is_moufang,
        is_group=is_group,
        is_commutative=comm_bad is None,
        witnesses=tuple(witnesses),
    )


def is_quasigroup(G: CayleyTable) -> bool:
    return _quasigroup_witness(G.table) is None


def is_loop(G: CayleyTable) -> bool:
    return is_quasigroup(G) and _find_unit(G.table) is not None


def is_moufang(G: CayleyTable) -> bool:
    return classify(G).is_moufang


def unit(G: CayleyTable) -> int:
    """The two-sided unit of ``G``; raises :class:`NotALoop` if there is none."""
    e = _find_unit(G.table)
    if e is None:
        raise NotALoop("table has no two-sided unit")
    return e


def left_inverse(G: CayleyTable, g: int, e: int | None = None) -> int:
    e = unit(G) if e is None else e
    xs = np.flatnonzero(G.table[:, g] == e)
    if len(xs) != 1:
        raise NotALoop(f"equation x*{g} = {e} has {len(xs)} solutions")
    return int(xs[0])


def right_inverse(G: CayleyTable, g: int, e: int | None = None) -> int:
    e = unit(G) if e is None else e
    xs = np.flatnonzero(G.table[g] == e)
    if len(xs) != 1:
        raise NotALoop(f"equation {g}*x = {e} has {len(xs)} solutions")
    return int(xs[0])


def inverse(G: CayleyTable, g: int) -> int:
    """The two-sided inverse of ``g``.

    Raises :class:`InverseMismatch` when left and right inverses differ,
    which cannot happen in a Moufang loop.
    """
    e = unit(G)
    left = left_inverse(G, g, e)
    right = right_inverse(G, g, e)
    if left != right:
        raise InverseMismatch(f"element {g} has left inverse {left} but right inverse {right}")
    return left


def inverses(G: CayleyTable) -> list[int]:
    return [inverse(G, g) for g in range(G.order)]


def left_translation(G: CayleyTable, g: int) -> Permutation:
    """``L_g : h -> gh``, row ``g`` of the table."""
    return Permutation(G.rows[g])


def right_translation(G: CayleyTable, g: int) -> Permutation:
    """``R_g : h -> hg``, column ``g`` of the table."""
    return Permutation(G.table[:, g].tolist())


# -- consequences of the Moufang identity -----------------------------------

@dataclass(frozen=True)
class IdentityReport:
    checked: int
    violation: tuple[str, tuple[int, ...], int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None


def check_diassociativity_identities(G: CayleyTable) -> IdentityReport:
    """Check the two-variable identities every Moufang loop satisfies.

    Covered, in order: left and right alternativity, flexibility, the
    cancellations ``g^-1(gh) = h`` and ``(hg)g^-1 = h``, ``(g^-1)^-1 = g``
    and ``(gh)^-1 = h^-1 g^-1``. Returns the first violation as
    ``(identity, elements, lhs, rhs)``. If some element's left and right
    inverses differ, that is reported as the violation ``inverse``.
    """
    M = G.rows
    n = G.order
    checked = 0

    def fail(name, elems, lhs, rhs):
        return IdentityReport(checked, (name, elems, lhs, rhs))

    for g in range(n):
        gg = M[g][g]
        for h in range(n):
            checked += 3
            if M[g][M[g][h]] != M[gg][h]:
                return fail("g(gh) = (gg)h", (g, h), M[g][M[g][h]], M[gg][h])
            if M[M[h][g]][g] != M[h][gg]:
                return fail("(hg)g = h(gg)", (g, h), M[M[h][g]][g], M[h][gg])
            if M[M[g][h]][g] != M[g][M[h][g]]:
                return fail("(gh)g = g(hg)", (g, h), M[M[g][h]][g], M[g][M[h][g]])

    e = unit(G)
    inv = []
    for g in range(n):
        checked += 1
        left, right = left_inverse(G, g, e), right_inverse(G, g, e)
        if left != right:
            return fail("inverse", (g,), left, right)
        inv.append(left)

    for g in range(n):
        checked += 1
        if inv[inv[g]] != g:
            return fail("(g^-1)^-1 = g", (g,), inv[inv[g]], g)
        for h in range(n):
            checked += 3
            if M[inv[g]][M[g][h]] != h:
                return fail("g^-1(gh) = h", (g, h), M[inv[g]][M[g][h]], h)
            if M[M[h][g]][inv[g]] != h:
                return fail("(hg)g^-1 = h", (g, h), M[M[h][g]][inv[g]], h)
            if inv[M[g][h]] != M[inv[h]][inv[g]]:
                return fail("(gh)^-1 = h^-1 g^-1", (g, h), inv[M[g][h]], M[inv[h]][inv[g]])
    return IdentityReport(checked)


# -- subloops ---------------------------------------------------------------

def generated_subloop(G: CayleyTable, generators: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing ``generators`` and the unit that is closed
    under products and (left and right) inverses."""
    e = unit(G)
    M = G.rows
    inv_l = [left_inverse(G, g, e) for g in range(G.order)]
    inv_r = [right_inverse(G, g, e) for g in range(G.order)]
    found = {e, *generators}
    queue = deque(found)
    while queue:
        x = queue.popleft()
        new = [inv_l[x], inv_r[x]]
        for y in list(found):
            new.append(M[x][y])
            new.append(M[y][x])
        for z in new:
            if z not in found:
                found.add(z)
                queue.append(z)
    return frozenset(found)


def is_subloop(G: CayleyTable, N: Iterable[int]) -> bool:
    """True if ``N`` contains the unit and is closed under products.

    For a finite loop, closure under products already forces closure
    under left and right division.
    """
    N = set(N)
    if unit(G) not in N:
        return False
    M = G.rows
    return all(M[a][b] in N for a in N for b in N)


def subtable(G: CayleyTable, N: Iterable[int]) -> CayleyTable:
    """The Cayley table of the closed subset ``N``, indices in ascending order."""
    elems = sorted(N)
    pos = {x: i for i, x in enumerate(elems)}
    M = G.rows
    return CayleyTable([[pos[M[a][b]] for b in elems] for a in elems])
