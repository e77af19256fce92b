"""Built-in test corpus: small groups, their Chein doubles, and table files."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import IO

import numpy as np

from .errors import NotAGroup
from .loops import AlgebraClass, CayleyTable, classify, format_cayley_table, inverses, parse_cayley_table, unit

DATA_DIR_ENV = "MOUFANG_DATA_DIR"


def cyclic(n: int) -> CayleyTable:
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    i = np.arange(n)
    return CayleyTable((i[:, None] + i[None, :]) % n)


def direct_product(A: CayleyTable, B: CayleyTable) -> CayleyTable:
    """Componentwise product; element ``(a, b)`` has index ``a * |B| + b``."""
    m = B.order
    a = np.arange(A.order * m) // m
    b = np.arange(A.order * m) % m
    return CayleyTable(A.table[a[:, None], a[None, :]] * m + B.table[b[:, None], b[None, :]])


S3_ELEMENTS = ((0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1))
S3_LABELS = ("e", "(012)", "(021)", "(01)", "(02)", "(12)")


def symmetric3() -> CayleyTable:
    """S3 ordered as identity, the 3-cycles, then the transpositions.

    Products compose right to left: ``(g*h)(x) = g(h(x))``.
    """
    index = {p: i for i, p in enumerate(S3_ELEMENTS)}
    table = [[index[tuple(g[h[x]] for x in range(3))] for h in S3_ELEMENTS] for g in S3_ELEMENTS]
    return CayleyTable(table, S3_LABELS)


def chein_double(G: CayleyTable) -> CayleyTable:
    """The Chein loop M(G, 2) on pairs ``(g, eps)``, indexed ``g + eps*n``.

    Multiplication::

        (g,0)(h,0) = (gh, 0)        (g,0)(h,1) = (hg, 1)
        (g,1)(h,0) = (gh^-1, 1)     (g,1)(h,1) = (h^-1 g, 0)

    The result is Moufang for every group ``G`` and is a group exactly
    when ``G`` is abelian.
    """
    cls = classify(G)
    if not cls.is_group:
        raise NotAGroup("Chein doubling needs a group: " + cls.summary())
    n = G.order
    A = G.table
    inv = np.array(inverses(G))
    g = np.arange(n)[:, None]
    h = np.arange(n)[None, :]
    out = np.empty((2 * n, 2 * n), dtype=np.int64)
    out[:n, :n] = A[g, h]
    out[:n, n:] = A[h, g] + n
    out[n:, :n] = A[g, inv[h]] + n
    out[n:, n:] = A[inv[h], g]
    labels = None
    if G.labels:
        labels = list(G.labels) + [f"{x}u" for x in G.labels]
    return CayleyTable(out, labels)


# -- catalog entries --------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    table: CayleyTable
    is_moufang: bool
    is_group: bool
    is_commutative: bool

    def matches(self, cls: AlgebraClass) -> bool:
        return (cls.is_moufang, cls.is_group, cls.is_commutative) == (
            self.is_moufang, self.is_group, self.is_commutative)


@lru_cache(maxsize=None)
def entries() -> tuple[CatalogEntry, ...]:
    """Z1..Z8, Z2xZ2, S3 and the Chein double of each, in that order."""
    groups = [(f"Z{n}", cyclic(n), True) for n in range(1, 9)]
    groups.append(("Z2xZ2", direct_product(cyclic(2), cyclic(2)), True))
    groups.append(("S3", symmetric3(), False))
    out = [CatalogEntry(name, t, True, True, comm) for name, t, comm in groups]
    for name, t, comm in groups:
        # M(G,2) is commutative only for elementary abelian 2-groups G
        double_comm = bool(np.all(np.diag(t.table) == unit(t)))
        out.append(CatalogEntry(f"M_{name}_2", chein_double(t), True, comm, comm and double_comm))
    return tuple(out)


def get(name: str) -> CayleyTable:
    for e in entries():
        if e.name == name:
            return e.table
    raise KeyError(f"no catalog entry named {name!r}")


def names() -> list[str]:
    return [e.name for e in entries()]


def moufang_entries() -> list[CatalogEntry]:
    return [e for e in entries() if e.is_moufang]


# -- files ------------------------------------------------------------------

def save(table: CayleyTable, sink: str | os.PathLike | IO[str], comments=()) -> None:
    text = format_cayley_table(table, comments)
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        Path(sink).write_text(text, encoding="utf-8")


def load(source: str | os.PathLike | IO[str]) -> CayleyTable:
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    return parse_cayley_table(text)


def data_dir() -> Path:
    """Directory holding ``<name>.tbl`` files; ``$MOUFANG_DATA_DIR`` or ``./data``."""
    return Path(os.environ.get(DATA_DIR_ENV, "data"))


def write_all(directory: str | os.PathLike | None = None) -> list[Path]:
    directory = Path(directory) if directory is not None else data_dir()
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for e in entries():
        p = directory / f"{e.name}.tbl"
        save(e.table, p, comments=[e.name])
        paths.append(p)
    return paths
