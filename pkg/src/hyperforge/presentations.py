"""Group presentations over involutory generators.

Words are sequences of generator indices; no inverse symbols exist
since every generator squares to the identity.  The square relators
are implicit and never stored.
"""

import json

from .errors import InvalidParams


class GroupPresentation:

    def __init__(self, ngens, relators):
        self.ngens = ngens
        rels = []
        for w in relators:
            w = tuple(int(x) for x in w)
            if not w:
                raise InvalidParams("empty relator")
            if any(x < 0 or x >= ngens for x in w):
                raise InvalidParams("relator letter out of range: %r" % (w,))
            rels.append(w)
        self.relators = tuple(rels)

    def __eq__(self, other):
        if not isinstance(other, GroupPresentation):
            return NotImplemented
        return (self.ngens, self.relators) == (other.ngens, other.relators)

    def __repr__(self):
        return "GroupPresentation(ngens=%d, relators=%r)" % (
            self.ngens, self.relators)


def coxeter_relators(matrix):
    """Relators (rho_i rho_j)^{p_ij} from a symmetric Coxeter matrix."""
    n = len(matrix)
    rels = []
    for i in range(n):
        if matrix[i][i] != 1:
            raise InvalidParams("diagonal must be 1")
        for j in range(i + 1, n):
            p = matrix[i][j]
            if p != matrix[j][i] or p < 2:
                raise InvalidParams("bad entry p[%d][%d]=%r" % (i, j, p))
            rels.append((i, j) * p)
    return rels


def coxeter_presentation(matrix, extra=()):
    return GroupPresentation(len(matrix),
                             list(coxeter_relators(matrix)) + list(extra))


def relator_parity_bipartite(p, gen):
    """True when every relator uses the generator an even number of times."""
    return all(w.count(gen) % 2 == 0 for w in p.relators)


def to_json(p):
    data = {"ngens": p.ngens, "relators": [list(w) for w in p.relators]}
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def from_json(text):
    data = json.loads(text)
    return GroupPresentation(data["ngens"], data["relators"])
