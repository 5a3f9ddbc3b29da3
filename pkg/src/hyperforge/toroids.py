"""Cubic toroid factory and the halved/double-halved presentations.

The toroids are the quotients of the cubic tessellation of n-space by
the translation lattice generated by (s^k, 0^(n-k)) with k in {1,2,n}.
Their symmetry groups come from one extra relator on top of the linear
Coxeter diagram 4-3-...-3-4; the halving subgroups have their own
closed-form presentations on Y- and cycle-shaped diagrams, which
verify_family cross-checks against direct subgroup computation.
"""

import numpy as np

from .errors import InvalidParams, UnsupportedCase, PropertyViolation, \
    MismatchReport
from .presentations import GroupPresentation, coxeter_presentation, \
    relator_parity_bipartite
from .toddcox import todd_coxeter, perm_image
from .perms import coxeter_matrix, intersection_property
from . import engine
from . import geometry as geo
from . import constructions as cons
from . import iso

# full flag-scan verification only below this chamber count
FULL_CHECK_LIMIT = 50000


class ToroidParams:
    """Parameters (n, k, s) of the toroid {4,3^(n-2),4}_(s^k,0^(n-k))."""

    def __init__(self, n, k, s):
        if n < 3:
            raise InvalidParams("n must be at least 3")
        if k not in (1, 2, n):
            raise InvalidParams("k must be 1, 2 or n")
        if s < 2:
            raise InvalidParams("s must be at least 2")
        self.n = n
        self.k = k
        self.s = s

    def __repr__(self):
        return "ToroidParams(n=%d, k=%d, s=%d)" % (self.n, self.k, self.s)


def diagram_matrix(rank, edges):
    """Coxeter matrix from a diagram given as {(i,j): label}; missing
    pairs commute."""
    m = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 1
    for (i, j), label in edges.items():
        m[i][j] = label
        m[j][i] = label
    return tuple(tuple(row) for row in m)


def linear_matrix(n):
    """The linear diagram 4-3-...-3-4 on n+1 nodes."""
    edges = {(t, t + 1): 3 for t in range(n)}
    edges[(0, 1)] = 4
    edges[(n - 1, n)] = 4
    return diagram_matrix(n + 1, edges)


def halved_matrix(n):
    """Y diagram: node 2 forked to 0 and 1 by 3-edges, then a 3-chain
    ending in a 4-edge at the far end."""
    edges = {(0, 2): 3, (1, 2): 3}
    for t in range(2, n - 1):
        edges[(t, t + 1)] = 3
    edges[(n - 1, n)] = 4
    return diagram_matrix(n + 1, edges)


def double_halved_matrix(n):
    """Diagram after halving both ends: a 4-cycle for n=3, a fork at
    each end of a 3-chain for n >= 4."""
    if n == 3:
        edges = {(0, 2): 3, (1, 2): 3, (1, 3): 3, (0, 3): 3}
    else:
        edges = {(0, 2): 3, (1, 2): 3, (n - 2, n): 3}
        for t in range(2, n - 1):
            edges[(t, t + 1)] = 3
    return diagram_matrix(n + 1, edges)


def _word(*parts):
    out = []
    for part in parts:
        out.extend(part)
    return tuple(out)


def _up(a, b):
    return list(range(a, b + 1))


def _down(a, b):
    return list(range(a, b - 1, -1))


def cubic_toroid_presentation(p):
    """Linear Coxeter relators plus (r0 r1 ... rn r(n-1) ... rk)^(ks)."""
    n, k, s = p.n, p.k, p.s
    base = _word(_up(0, n), _down(n - 1, k))
    return coxeter_presentation(linear_matrix(n), extra=(base * (k * s),))


def predict_truncation_bipartite(p):
    """The vertex-edge graph is bipartite unless k and s are both odd."""
    return not (p.k % 2 == 1 and p.s % 2 == 1)


def predict_degenerate_leaf(p):
    """The (0,1) leaf collapses exactly for (k, s) = (1, 2)."""
    return p.k == 1 and p.s == 2


def _substitute(relators, repl):
    """Replace generator 0 by the word repl inside each relator that
    mentions it; other relators are dropped (already implied)."""
    out = []
    for w in relators:
        if 0 not in w:
            continue
        new = []
        for x in w:
            if x == 0:
                new.extend(repl)
            else:
                new.append(x)
        out.append(tuple(new))
    return out


def _halving_closure(n, k, s):
    """Extra relators pinning the non-bipartite halved presentation.

    When the vertex-edge graph is non-bipartite the halving subgroup
    is the whole group, so the old generator is itself a word in the
    new ones; substituting that word back into every old relator (and
    adding the definition of the replaced generator) yields a
    complete presentation.
    """
    if k == 1:
        base = _word([0], _up(2, n), _down(n - 1, 2), [1])
        old0 = _word(_up(1, n), _down(n - 1, 1), base * (s - 1))
    else:  # k == n
        base = _word([0], _up(2, n), [1], _up(2, n))
        old0 = _word(_up(1, n), base * ((n * s - 1) // 2))
    original = cubic_toroid_presentation(ToroidParams(n, k, s)).relators
    closure = _substitute(original, old0)
    # the new generator really is old0 conjugating rho_1
    closure.append(tuple(_word([0], old0, [1], old0[::-1])))
    return tuple(closure)


def halved_presentation(p):
    """Presentation of the subgroup <r0 r1 r0, r1, ..., rn> on the Y
    diagram: the closed-form extra relator per parity case of (k, s),
    plus closure relators for the non-bipartite cases."""
    n, k, s = p.n, p.k, p.s
    if predict_degenerate_leaf(p):
        raise UnsupportedCase("degenerate leaf for (k,s)=(1,2)")
    if k == 1:
        w = _word([0], _up(2, n), _down(n - 1, 2), [1])
        power = 2 * s if s % 2 == 1 else s
    elif k == 2:
        w = _word([0], _up(2, n), _down(n - 1, 2), [1],
                  _up(2, n), _down(n - 1, 2))
        power = s
    else:
        w = _word([0], _up(2, n), [1], _up(2, n))
        power = n * s if s % 2 == 1 and n % 2 == 1 else n * s // 2
    extra = (w * power,)
    if not predict_truncation_bipartite(p):
        extra = extra + _halving_closure(n, k, s)
    return coxeter_presentation(halved_matrix(n), extra=extra)


def _rewrite_even_subgroup(relators, m, j):
    """Index-2 rewriting: relators of the subgroup of words with an
    even count of generator m, on generators that keep their index
    except that index m becomes the conjugate (m j m).

    Standard two-coset Reidemeister-Schreier: scan each relator from
    both cosets, dropping the letters m (they switch cosets) and
    replacing a letter x seen in the far coset by its conjugate,
    which is the new generator for x = j and equals x otherwise
    (since x and m commute)."""
    out = []
    for w in relators:
        for start in (0, 1):
            c = start
            word = []
            for x in w:
                if x == m:
                    c ^= 1
                elif c == 0:
                    word.append(x)
                else:
                    word.append(m if x == j else x)
            if c != start:
                raise UnsupportedCase(
                    "relator has odd count of generator %d" % m)
            if word:
                out.append(tuple(word))
    return tuple(dict.fromkeys(out))


def double_halved_presentation(p):
    """Presentation of the subgroup after halving both leafs, with
    r~0 = r0 r1 r0 at index 0 and r~n = rn r(n-1) rn at index n: the
    closed-form extra relator per case, plus the rewriting of the
    halved presentation into the index-2 subgroup (the second
    truncation is always bipartite)."""
    n, k, s = p.n, p.k, p.s
    if (k, s) in ((1, 2), (2, 2)):
        raise UnsupportedCase("excluded case (k,s)=(%d,%d)" % (k, s))
    if n == 3:
        if k == 1:
            w = (0, 2, 3, 1)
            power = 2 * s if s % 2 == 1 else s
        elif k == 2:
            w = (0, 2, 1, 3, 1, 2)
            power = s
        else:
            w = (0, 2, 1, 3)
            power = 3 * s if s % 2 == 1 else 3 * s // 2
    elif n == 4:
        if k == 1:
            w = (0, 2, 3, 4, 2, 1)
            power = 2 * s if s % 2 == 1 else s
        elif k == 2:
            w = (0, 2, 3, 4, 2, 1, 2, 3, 4, 2)
            power = s
        else:
            w = (0, 2, 3, 1, 2, 4)
            power = 2 * s
    else:
        if k == 1:
            w = _word([0], _up(2, n - 1), [n], _down(n - 2, 2), [1])
            power = 2 * s if s % 2 == 1 else s
        elif k == 2:
            w = _word([0], _up(2, n - 1), [n], _down(n - 2, 2), [1],
                      _up(2, n - 1), [n], _down(n - 2, 2))
            power = s
        else:
            w = _word([0], _up(2, n - 1), [1], _up(2, n - 2), [n])
            power = n * s if s % 2 == 1 and n % 2 == 1 else n * s // 2
    closure = _rewrite_even_subgroup(halved_presentation(p).relators,
                                     n, n - 1)
    return coxeter_presentation(double_halved_matrix(n),
                                extra=(w * power,) + closure)


def matrix_shape(m):
    """(sorted node degrees, sorted labels) of the diagram edges with
    label above 2."""
    rank = len(m)
    degrees = [0] * rank
    labels = []
    for i in range(rank):
        for j in range(i + 1, rank):
            if m[i][j] > 2:
                degrees[i] += 1
                degrees[j] += 1
                labels.append(m[i][j])
    return tuple(sorted(degrees)), tuple(sorted(labels))


def _verify_hypertope(pg, g, context):
    """Thin + residually connected + flag-transitive, by exhaustive
    scan when small and by the string/group certificate when large."""
    if pg.degree <= FULL_CHECK_LIMIT:
        if not geo.is_geometry(g):
            raise PropertyViolation("%s: not a geometry" % context)
        if not geo.is_thin(g):
            raise PropertyViolation("%s: not thin" % context)
        if not geo.is_residually_connected(g):
            raise PropertyViolation("%s: not residually connected"
                                    % context)
        if not iso.is_flag_transitive(g, engine.natural_action(g)):
            raise PropertyViolation("%s: not flag-transitive" % context)
    else:
        if not intersection_property(pg):
            raise PropertyViolation("%s: intersection property fails"
                                    % context)


def build_cubic_toroid(p, max_cosets=None, check=True):
    """Enumerate the toroid group and its coset geometry; verify the
    regular-hypertope properties and the linear diagram."""
    pres = cubic_toroid_presentation(p)
    t = todd_coxeter(pres, max_cosets=max_cosets)
    pg = perm_image(t)
    g = engine.coset_geometry(pg)
    if check:
        _verify_hypertope(pg, g, "toroid %r" % (p,))
        if coxeter_matrix(pg) != linear_matrix(p.n):
            raise PropertyViolation("toroid %r: diagram is not linear"
                                    " 4-3-...-3-4" % (p,))
    return pg, g


def geometry_diagram_shape(g):
    """(sorted node degrees, sorted gonality labels) of the non-digon
    edges of the computed diagram."""
    d = geo.buekenhout_diagram(g)
    degrees = [0] * g.rank
    labels = []
    for (i, j) in d.edge_labels():
        degrees[i] += 1
        degrees[j] += 1
        labels.append(d.label(i, j)[0])
    return tuple(sorted(degrees)), tuple(sorted(labels))


def _agreement(pres, hg, context, diffs, max_cosets=None):
    """Presentation group vs directly computed subgroup: order,
    Coxeter matrix, coset geometry isomorphism."""
    t = todd_coxeter(pres, max_cosets=max_cosets)
    qg = perm_image(t)
    entry = {"order_presentation": qg.order(), "order_subgroup": hg.order()}
    if qg.order() != hg.order():
        diffs.append((context, "order", qg.order(), hg.order()))
        return entry, None
    cm_p = coxeter_matrix(qg)
    cm_h = coxeter_matrix(hg)
    entry["coxeter_matrix_equal"] = cm_p == cm_h
    if cm_p != cm_h:
        diffs.append((context, "coxeter_matrix", cm_p, cm_h))
    gq = engine.coset_geometry(qg)
    gh = engine.coset_geometry(hg)
    ident = list(range(qg.ngens))
    emap = engine.induced_geometry_map(gq, gh, ident, ident)
    entry["coset_geometry_isomorphic"] = emap is not None
    if emap is None:
        diffs.append((context, "coset_geometry_iso", True, False))
    return entry, gh


def verify_family(p, depth=0, max_cosets=None):
    """Cross-check one (n, k, s) cell: build the toroid (depth 0),
    halve at (0,1) (depth 1), halve again at (n,n-1) (depth 2),
    comparing each stage against its closed-form presentation and its
    expected diagram shape.  Raises MismatchReport when a structural
    check fails; diagram comparisons are reported as data.
    """
    if depth not in (0, 1, 2):
        raise InvalidParams("depth must be 0, 1 or 2")
    n = p.n
    diffs = []
    report = {"params": {"n": p.n, "k": p.k, "s": p.s}, "depth": depth,
              "stages": {}}

    pg, g = build_cubic_toroid(p, max_cosets=max_cosets)
    stage = {"order": pg.order(),
             "type_counts": list(g.type_counts()),
             "bipartite_predicted": predict_truncation_bipartite(p),
             "degenerate_predicted": predict_degenerate_leaf(p)}
    pres = cubic_toroid_presentation(p)
    stage["bipartite_relators"] = relator_parity_bipartite(pres, 0)
    adj, _ = cons.truncation_graph(g, (0, 1))
    stage["bipartite_truncation"] = cons.parity_classes(adj).bipartite
    for key in ("bipartite_relators", "bipartite_truncation"):
        if stage[key] != stage["bipartite_predicted"]:
            diffs.append(("toroid", key, stage["bipartite_predicted"],
                          stage[key]))
    stage["b1"] = cons.check_B1(g, (0, 1))
    if stage["b1"] != (not stage["degenerate_predicted"]):
        diffs.append(("toroid", "b1_vs_degeneracy",
                      not stage["degenerate_predicted"], stage["b1"]))
    shape = geometry_diagram_shape(g) if pg.degree <= FULL_CHECK_LIMIT \
        else None
    stage["diagram_shape"] = shape
    stage["diagram_expected"] = matrix_shape(linear_matrix(n))
    stage["diagram_matches"] = shape == stage["diagram_expected"] \
        if shape is not None else None
    # self-duality under reversing the generator order
    rev = [n - t for t in range(n + 1)]
    stage["self_dual"] = engine.induced_geometry_map(g, g, rev, rev) \
        is not None
    if not stage["self_dual"]:
        diffs.append(("toroid", "self_dual", True, False))
    report["stages"]["toroid"] = stage

    if depth >= 1 and not diffs:
        hg = engine.halving_group(pg, (0, 1))
        stage = {"order": hg.order()}
        expected = pg.order() // 2 if predict_truncation_bipartite(p) \
            else pg.order()
        if hg.order() != expected:
            diffs.append(("halved", "order", expected, hg.order()))
        try:
            hpres = halved_presentation(p)
            entry, gh = _agreement(hpres, hg, "halved", diffs,
                                   max_cosets=max_cosets)
            stage.update(entry)
        except UnsupportedCase as exc:
            stage["presentation"] = "unsupported: %s" % exc
            gh = engine.coset_geometry(hg)
        if gh is not None:
            _verify_hypertope(hg, gh, "halved %r" % (p,))
            stage["b1_next_leaf"] = cons.check_B1(gh, (n, n - 1))
            stage["b2_next_leaf"] = cons.check_B2(gh, (n, n - 1))
            if not (stage["b1_next_leaf"] and stage["b2_next_leaf"]):
                diffs.append(("halved", "next_leaf_nondegenerate", True,
                              (stage["b1_next_leaf"],
                               stage["b2_next_leaf"])))
            shape = geometry_diagram_shape(gh) \
                if hg.degree <= FULL_CHECK_LIMIT else None
            stage["diagram_shape"] = shape
            stage["diagram_expected"] = matrix_shape(halved_matrix(n))
            stage["diagram_matches"] = shape == stage["diagram_expected"] \
                if shape is not None else None
        report["stages"]["halved"] = stage

    if depth >= 2 and not diffs:
        adj2, _ = cons.truncation_graph(gh, (n, n - 1))
        bp_branch = cons.parity_classes(adj2).bipartite
        stage = {"bp_branch": bp_branch}
        if not bp_branch:
            diffs.append(("double_halved", "bp_branch", True, False))
        h2 = engine.halving_group(hg, (n, n - 1))
        stage["order"] = h2.order()
        if h2.order() != hg.order() // 2:
            diffs.append(("double_halved", "order", hg.order() // 2,
                          h2.order()))
        try:
            dpres = double_halved_presentation(p)
            entry, gh2 = _agreement(dpres, h2, "double_halved", diffs,
                                    max_cosets=max_cosets)
            stage.update(entry)
        except UnsupportedCase as exc:
            stage["presentation"] = "unsupported: %s" % exc
            gh2 = engine.coset_geometry(h2)
        if gh2 is not None:
            _verify_hypertope(h2, gh2, "double halved %r" % (p,))
            shape = geometry_diagram_shape(gh2) \
                if h2.degree <= FULL_CHECK_LIMIT else None
            stage["diagram_shape"] = shape
            stage["diagram_expected"] = matrix_shape(double_halved_matrix(n))
            stage["diagram_matches"] = shape == stage["diagram_expected"] \
                if shape is not None else None
        # halving at the other leaf gives the dual of halving at (0,1)
        kg = engine.halving_group(pg, (n, n - 1))
        gk = engine.coset_geometry(kg)
        ghh = engine.coset_geometry(hg)
        stage["dual_of_first_halving"] = engine.induced_geometry_map(
            ghh, gk, rev, rev) is not None
        if not stage["dual_of_first_halving"]:
            diffs.append(("double_halved", "dual_of_first_halving",
                          True, False))
        report["stages"]["double_halved"] = stage

    report["ok"] = not diffs
    if diffs:
        raise MismatchReport(diffs, report)
    return report
