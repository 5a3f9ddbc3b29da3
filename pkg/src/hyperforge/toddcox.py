"""Coset enumeration front end.

Picks the compiled kernel when the extension built, otherwise the
pure-Python one; both produce identical tables.  Completed tables are
verified by replaying every relator from every coset and every
subgroup word from coset 0.
"""

import os

import numpy as np

from .errors import Overflow, IncompleteTable, InvalidParams
from .perms import PermGroup
from . import _tcpure

try:
    from . import _tccore
except ImportError:  # pragma: no cover
    _tccore = None

DEFAULT_MAX_COSETS = 5 * 10 ** 6


def default_max_cosets():
    env = os.environ.get("HYPERFORGE_MAX_COSETS")
    if env:
        return int(env)
    return DEFAULT_MAX_COSETS


def backend_name():
    return "compiled" if _tccore is not None else "pure"


class CosetTable:
    """Complete table: table[c][x] = coset c.gen_x; row 0 = subgroup."""

    def __init__(self, ngens, table, subgens):
        self.ngens = ngens
        self.table = np.asarray(table, dtype=np.int64)
        self.subgens = tuple(tuple(w) for w in subgens)
        self.complete = True

    @property
    def ncosets(self):
        return self.table.shape[0]

    def to_csv(self):
        lines = [",".join(str(x) for x in range(self.ngens))]
        for row in self.table:
            lines.append(",".join(str(int(v)) for v in row))
        return "\n".join(lines) + "\n"


def _verify(t, relators):
    n = t.ncosets
    idx = np.arange(n)
    for word in relators:
        cur = idx
        for x in word:
            cur = t.table[cur, x]
        if not np.array_equal(cur, idx):
            raise IncompleteTable("relator %r does not close" % (word,))
    for word in t.subgens:
        c = 0
        for x in word:
            c = int(t.table[c, x])
        if c != 0:
            raise IncompleteTable("subgroup word %r leaves coset 0" % (word,))
    for x in range(t.ngens):
        col = t.table[:, x]
        if not np.array_equal(col[col], idx):
            raise IncompleteTable("generator %d is not an involution" % x)


def todd_coxeter(p, subgens=(), max_cosets=None, backend=None):
    """Enumerate cosets of <subgens> in the presented group."""
    if max_cosets is None:
        max_cosets = default_max_cosets()
    if max_cosets < 1:
        raise InvalidParams("max_cosets must be positive")
    subgens = [tuple(int(x) for x in w) for w in subgens]
    for w in subgens:
        if any(x < 0 or x >= p.ngens for x in w):
            raise InvalidParams("subgroup word letter out of range")
    if backend is None:
        backend = backend_name()
    if backend == "compiled":
        if _tccore is None:
            raise InvalidParams("compiled kernel not available")
        flat = _tccore.enumerate_cosets(p.ngens, list(p.relators),
                                        subgens, max_cosets)
    elif backend == "pure":
        flat = _tcpure.enumerate_cosets(p.ngens, list(p.relators),
                                        subgens, max_cosets)
    else:
        raise InvalidParams("unknown backend %r" % (backend,))
    if flat is None:
        raise Overflow(max_cosets)
    table = np.asarray(flat, dtype=np.int64).reshape(-1, p.ngens)
    t = CosetTable(p.ngens, table, subgens)
    _verify(t, p.relators)
    return t


def perm_image(t):
    """Right action of the generators on cosets, as a PermGroup."""
    if not t.complete:
        raise IncompleteTable("table is not complete")
    gens = [t.table[:, x].copy() for x in range(t.ngens)]
    regular = not t.subgens
    return PermGroup(t.ncosets, gens, regular=regular,
                     order=t.ncosets if regular else None)
