"""Finite typed incidence systems and their structural queries.

Elements are dense integers 0..m-1, each with a type in 0..rank-1.
Incidence is a symmetric irreflexive relation joining elements of
distinct types only.  A flag is a set of pairwise incident elements,
a chamber a flag meeting every type.
"""

import json
import math

from .errors import (
    SelfIncidence, SameTypeIncidence, UnknownElement, NotAFlag,
    NotAGeometry, SizeLimitExceeded,
)

DEFAULT_MAX_FLAGS = 10 ** 6


class IncidenceGeometry:
    """Immutable incidence system.

    type_of[e] is the type of element e; adj[e] a sorted tuple of the
    elements incident to e.  labels, when present, carries one
    caller-meaningful name per element (construction provenance).
    """

    def __init__(self, rank, type_of, adj, labels=None, provenance=None):
        self.rank = rank
        self.type_of = tuple(type_of)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.adjsets = tuple(frozenset(a) for a in self.adj)
        self.nelements = len(self.type_of)
        self.labels = tuple(labels) if labels is not None else None
        self.provenance = provenance

    def elements_of_type(self, i):
        return [e for e in range(self.nelements) if self.type_of[e] == i]

    def type_counts(self):
        counts = [0] * self.rank
        for t in self.type_of:
            counts[t] += 1
        return tuple(counts)

    def incident(self, x, y):
        return y in self.adjsets[x]

    def incidence_pairs(self):
        return [(x, y) for x in range(self.nelements)
                for y in self.adj[x] if x < y]

    def __eq__(self, other):
        if not isinstance(other, IncidenceGeometry):
            return NotImplemented
        return (self.rank == other.rank and self.type_of == other.type_of
                and self.adj == other.adj)

    def __repr__(self):
        return "IncidenceGeometry(rank=%d, counts=%s)" % (
            self.rank, self.type_counts())


def build_geometry(rank, types, pairs, labels=None, provenance=None):
    """Validate raw data and assemble a geometry.

    types: iterable of per-element type indices (element ids are the
    positions).  pairs: iterable of (x, y) incidences, symmetrized.
    """
    types = list(types)
    m = len(types)
    for t in types:
        if not (0 <= t < rank):
            raise UnknownElement("type %r out of range" % (t,))
    adj = [set() for _ in range(m)]
    for x, y in pairs:
        if not (0 <= x < m) or not (0 <= y < m):
            raise UnknownElement("incidence (%r,%r)" % (x, y))
        if x == y:
            raise SelfIncidence("element %d incident to itself" % x)
        if types[x] == types[y]:
            raise SameTypeIncidence("elements %d,%d share type %d"
                                    % (x, y, types[x]))
        adj[x].add(y)
        adj[y].add(x)
    return IncidenceGeometry(rank, types, adj, labels=labels,
                             provenance=provenance)


def _check_flag(g, f):
    f = sorted(set(f))
    seen_types = set()
    for x in f:
        if not (0 <= x < g.nelements):
            raise UnknownElement(str(x))
        t = g.type_of[x]
        if t in seen_types:
            raise NotAFlag("two elements of type %d" % t)
        seen_types.add(t)
    for a in f:
        for b in f:
            if a < b and not g.incident(a, b):
                raise NotAFlag("%d and %d not incident" % (a, b))
    return f


def flag_candidates(g, f):
    """Elements incident to every member of f (the residue's elements)."""
    cand = frozenset(range(g.nelements))
    for x in f:
        cand = cand & g.adjsets[x]
    return cand


def residue(g, f):
    """Sub-geometry on the elements incident to all of flag f.

    Types are re-indexed densely in increasing order of the cotype;
    original ids are kept in labels.
    """
    f = _check_flag(g, f)
    cand = sorted(flag_candidates(g, f))
    cotype = sorted(set(range(g.rank)) - {g.type_of[x] for x in f})
    tmap = {t: i for i, t in enumerate(cotype)}
    index = {e: i for i, e in enumerate(cand)}
    types = [tmap[g.type_of[e]] for e in cand]
    pairs = [(index[x], index[y]) for x in cand for y in g.adj[x]
             if y in index and x < y]
    labels = [g.labels[e] if g.labels is not None else e for e in cand]
    return build_geometry(len(cotype), types, pairs, labels=labels)


def truncation(g, J):
    """Restriction to the types in J, re-indexed densely."""
    J = sorted(set(J))
    for t in J:
        if not (0 <= t < g.rank):
            raise UnknownElement("type %r" % (t,))
    tmap = {t: i for i, t in enumerate(J)}
    keep = [e for e in range(g.nelements) if g.type_of[e] in tmap]
    index = {e: i for i, e in enumerate(keep)}
    types = [tmap[g.type_of[e]] for e in keep]
    pairs = [(index[x], index[y]) for x in keep for y in g.adj[x]
             if y in index and x < y]
    labels = [g.labels[e] if g.labels is not None else e for e in keep]
    return build_geometry(len(J), types, pairs, labels=labels)


def shadow(g, x, i):
    """The set of i-elements incident to x; own type gives {x}."""
    if not (0 <= x < g.nelements):
        raise UnknownElement(str(x))
    if g.type_of[x] == i:
        return {x}
    return {y for y in g.adj[x] if g.type_of[y] == i}


def _scan_flags(g, visit, max_flags=DEFAULT_MAX_FLAGS):
    """Depth-first walk over all flags (including the empty one).

    visit(flag_tuple, candidates) is called once per flag; candidates
    is the frozenset of elements incident to every flag member.
    Elements are added in increasing id order so each flag is seen once.
    """
    count = 0
    all_elems = frozenset(range(g.nelements))
    stack = [((), all_elems)]
    while stack:
        flag, cand = stack.pop()
        count += 1
        if count > max_flags:
            raise SizeLimitExceeded("more than %d flags" % max_flags)
        visit(flag, cand)
        last = flag[-1] if flag else -1
        for c in sorted(cand, reverse=True):
            if c > last:
                stack.append((flag + (c,), cand & g.adjsets[c]))


def enumerate_chambers(g, max_flags=DEFAULT_MAX_FLAGS):
    chambers = []

    def visit(flag, cand):
        if len(flag) == g.rank:
            chambers.append(flag)

    _scan_flags(g, visit, max_flags)
    chambers.sort()
    return chambers


def is_geometry(g, max_flags=DEFAULT_MAX_FLAGS):
    """True when every maximal flag is a chamber."""
    ok = [True]

    def visit(flag, cand):
        if not cand and len(flag) < g.rank:
            ok[0] = False

    _scan_flags(g, visit, max_flags)
    return ok[0] and all(c > 0 for c in g.type_counts())


def _connected_subset(g, elems):
    """Connectivity of the incidence graph induced on elems."""
    elems = set(elems)
    if len(elems) <= 1:
        return True
    start = next(iter(elems))
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in g.adj[x]:
            if y in elems and y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(elems)


def is_connected(g):
    return _connected_subset(g, range(g.nelements))


def is_residually_connected(g, max_flags=DEFAULT_MAX_FLAGS):
    """Every residue of rank >= 2 (corank >= 2 flags, incl. empty) connected."""
    if not is_geometry(g, max_flags):
        raise NotAGeometry("input is not a geometry")
    memo = {}
    ok = [True]

    def visit(flag, cand):
        if not ok[0] or g.rank - len(flag) < 2:
            return
        key = cand
        verdict = memo.get(key)
        if verdict is None:
            verdict = _connected_subset(g, cand)
            memo[key] = verdict
        if not verdict:
            ok[0] = False

    _scan_flags(g, visit, max_flags)
    return ok[0]


def is_thin(g, max_flags=DEFAULT_MAX_FLAGS):
    """Every corank-1 flag extends in exactly two ways."""
    if not is_geometry(g, max_flags):
        raise NotAGeometry("input is not a geometry")
    ok = [True]

    def visit(flag, cand):
        if len(flag) == g.rank - 1 and len(cand) != 2:
            ok[0] = False

    _scan_flags(g, visit, max_flags)
    return ok[0]


def _rank2_label(g, points, lines):
    """(gonality, point diameter, line diameter) of a rank-2 residue.

    Computed by BFS on the bipartite incidence graph; gonality is half
    the shortest circuit length, math.inf when the graph is acyclic.
    """
    nodes = sorted(points) + sorted(lines)
    if not points or not lines:
        return (math.inf, 0, 0)
    index = {e: i for i, e in enumerate(nodes)}
    nbrs = [[index[y] for y in g.adj[x] if y in index] for x in nodes]
    n = len(nodes)
    girth = math.inf
    dp = 0
    dl = 0
    npts = len(points)
    for src in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[src] = 0
        todo = [src]
        ecc = 0
        local_cycle = math.inf
        while todo:
            nxt = []
            for u in todo:
                for v in nbrs[u]:
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        ecc = max(ecc, dist[v])
                        nxt.append(v)
                    elif v != parent[u] and dist[v] >= dist[u]:
                        # non-tree edge closes a cycle through src
                        local_cycle = min(local_cycle,
                                          dist[u] + dist[v] + 1)
            todo = nxt
        girth = min(girth, local_cycle)
        if -1 in dist:
            ecc = math.inf
        if src < npts:
            dp = max(dp, ecc)
        else:
            dl = max(dl, ecc)
    g_val = math.inf if math.isinf(girth) else girth // 2
    return (g_val, dp, dl)


class BuekenhoutDiagram:
    """Per type-pair rank-2 residue labels.

    entries[(i,j)] with i<j is a sorted tuple of distinct
    ((g,d_P,d_L), multiplicity) observed over all residues of cotype
    {i,j}; a pair is uniform when one label occurs.
    """

    def __init__(self, rank, entries):
        self.rank = rank
        self.entries = entries

    def is_uniform(self, i, j):
        return len(self.entries[(min(i, j), max(i, j))]) == 1

    def label(self, i, j):
        ent = self.entries[(min(i, j), max(i, j))]
        if len(ent) != 1:
            raise NotAGeometry("non-uniform labels at pair (%d,%d)" % (i, j))
        return ent[0][0]

    def is_digon(self, i, j):
        return self.is_uniform(i, j) and self.label(i, j) == (2, 2, 2)

    def edge_labels(self):
        """Map (i,j) -> gonality for non-digon uniform pairs."""
        out = {}
        for pair in self.entries:
            if self.is_uniform(*pair) and not self.is_digon(*pair):
                out[pair] = self.label(*pair)[0]
        return out

    def shape(self):
        """(sorted node degrees, sorted edge gonalities) of the diagram."""
        edges = self.edge_labels()
        deg = [0] * self.rank
        for (i, j) in edges:
            deg[i] += 1
            deg[j] += 1
        return (tuple(sorted(deg)), tuple(sorted(edges.values())))

    def __repr__(self):
        return "BuekenhoutDiagram(%r)" % (self.entries,)


def _flags_of_type(g, T):
    """All flags whose type set is exactly T (sorted list of types)."""
    T = sorted(T)
    flags = [()]
    for t in T:
        elems = g.elements_of_type(t)
        new = []
        for f in flags:
            for e in elems:
                if all(g.incident(e, x) for x in f):
                    new.append(f + (e,))
        flags = new
    return flags


def buekenhout_diagram(g, max_flags=DEFAULT_MAX_FLAGS):
    if not is_geometry(g, max_flags):
        raise NotAGeometry("input is not a geometry")
    entries = {}
    for i in range(g.rank):
        for j in range(i + 1, g.rank):
            cotype = [t for t in range(g.rank) if t not in (i, j)]
            seen = {}
            done = set()
            for f in _flags_of_type(g, cotype):
                cand = flag_candidates(g, f) if f else \
                    frozenset(range(g.nelements))
                pts = frozenset(x for x in cand if g.type_of[x] == i)
                lns = frozenset(x for x in cand if g.type_of[x] == j)
                key = (pts, lns)
                if key in done:
                    continue
                done.add(key)
                lab = _rank2_label(g, pts, lns)
                seen[lab] = seen.get(lab, 0) + 1
            entries[(i, j)] = tuple(sorted(seen.items()))
    return BuekenhoutDiagram(g.rank, entries)


def relabel_types(g, tmap):
    """New geometry with type t renamed to tmap[t] (a permutation of types)."""
    types = [tmap[t] for t in g.type_of]
    pairs = g.incidence_pairs()
    return build_geometry(g.rank, types, pairs, labels=g.labels)


def to_json(g):
    data = {
        "rank": g.rank,
        "elements": [{"id": e, "type": g.type_of[e]}
                     for e in range(g.nelements)],
        "incidences": sorted([min(p), max(p)] for p in g.incidence_pairs()),
    }
    if g.provenance is not None:
        data["provenance"] = g.provenance
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def from_json(text):
    data = json.loads(text)
    elems = sorted(data["elements"], key=lambda d: d["id"])
    if [d["id"] for d in elems] != list(range(len(elems))):
        raise UnknownElement("element ids must be dense 0..m-1")
    types = [d["type"] for d in elems]
    pairs = [tuple(p) for p in data["incidences"]]
    return build_geometry(data["rank"], types, pairs,
                          provenance=data.get("provenance"))
