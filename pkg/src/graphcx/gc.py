"""The non-hairy graph complexes: insertion product, bracket, differential.

All operations are multilinear over combinations and computed on atoms by
summing over reconnection maps.  The distinguished Maurer-Cartan element is
the single edge weighted by one over its automorphism count.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .graphs import Combination, Graph, GraphError

def alpha_atom(n):
    return Graph(n, None, 2, 0, ((0, 1),))


def alpha(n):
    """The edge Maurer-Cartan element, normalized by its symmetry order."""
    out = Combination(n, None)
    out.add_term(alpha_atom(n), Fraction(1, 2))
    return out


def insert_terms(host, guests, sites):
    """Yield (raw Graph, sign) over all reconnections of a multi-insertion.

    ``guests`` are GC atoms placed at pairwise distinct internal ``sites`` of
    ``host`` (argument order).  The composite vertex word is the host word
    with the sites struck out, followed by the guest words in argument
    order; the edge word is host edges then guest edges.  For odd n, site i
    contributes the sign of moving its (odd) vertex symbol to the end of
    the current word and striking it there: (-1) to the count of remaining
    host vertices after it plus the sizes of guest blocks already appended.
    This iterated contraction rule makes the insertion pre-Lie and the
    braces graded symmetric for the homological degrees.
    """
    nv = host.nv
    r = len(guests)
    assert len(set(sites)) == r
    sizes = [g.nv for g in guests]
    site_of = {p: i for i, p in enumerate(sites)}

    # vertex layout of the composite: host remnant in order, then guests
    vmap = [0] * nv
    off = 0
    for w in range(nv):
        if w not in site_of:
            vmap[w] = off
            off += 1
    base = [0] * r
    for i in range(r):
        base[i] = off
        off += sizes[i]
    new_nv = off
    assert new_nv == nv - r + sum(sizes)

    sign = 1
    if host.n % 2:
        for i, p in enumerate(sites):
            after = (nv - 1 - p) - sum(1 for j in range(i) if sites[j] > p)
            exp = after + sum(sizes[j] for j in range(i))
            if exp % 2:
                sign = -sign

    hair_shift = new_nv - nv
    fixed = []
    redirect = []  # (edge index, side, site index)
    for ei, (a, b) in enumerate(host.edges):
        ends = []
        for side, x in enumerate((a, b)):
            if x >= nv:
                ends.append(x + hair_shift)
            elif x in site_of:
                redirect.append((ei, side, site_of[x]))
                ends.append(None)
            else:
                ends.append(vmap[x])
        fixed.append(ends)

    guest_edges = []
    for i, g in enumerate(guests):
        for a, b in g.edges:
            guest_edges.append((base[i] + a, base[i] + b))

    choice_sets = [range(sizes[i]) for (_ei, _side, i) in redirect]
    for choice in itertools.product(*choice_sets):
        edges = [list(e) for e in fixed]
        for (ei, side, i), u in zip(redirect, choice):
            edges[ei][side] = base[i] + u
        all_edges = [tuple(e) for e in edges] + guest_edges
        yield Graph(host.n, host.m, new_nv, host.nh, all_edges), sign


def insert(host, guest, vertex):
    """Insertion of one GC atom at one vertex, canonicalized."""
    if not 0 <= vertex < host.nv:
        raise GraphError("vertex index %d out of range" % vertex)
    out = Combination(host.n, host.m)
    for g, s in insert_terms(host, [guest], [vertex]):
        out.add_term(g, s)
    return out


def _sites_iter(host, r):
    return itertools.permutations(range(host.nv), r)


def brace_atoms(host, guest_atoms, out):
    r = len(guest_atoms)
    for sites in _sites_iter(host, r):
        for g, s in insert_terms(host, guest_atoms, list(sites)):
            out.add_term(g, s)
    return out


def prelie(x, y):
    """x bullet y: sum over insertions of y-atoms into x-atoms."""
    out = _result_combo(x, y)
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            c = cx * cy
            for v in range(gx.nv):
                for g, s in insert_terms(gx, [gy], [v]):
                    out.add_term(g, c * s)
    return out


def brace(host, args):
    """Symmetric brace: insert the args at pairwise distinct vertices."""
    if not args:
        raise GraphError("brace needs at least one argument")
    out = _result_combo(host, *args)
    idx = [a.items() for a in args]
    for gh, ch in host.terms.items():
        for picks in itertools.product(*idx):
            c = ch
            for _g, cc in picks:
                c *= cc
            brace_atoms(gh, [g for g, _ in picks], _scaled_sink(out, c))
    return out


class _scaled_sink:
    """Adapter adding terms into a combination with a constant prefactor."""

    def __init__(self, target, factor):
        self.target = target
        self.factor = factor

    def add_term(self, g, c):
        self.target.add_term(g, c * self.factor)


def _result_combo(*combos):
    first = combos[0]
    mw = first.max_weight
    mh = first.max_hairs
    for c in combos[1:]:
        mw = Combination._merge_window(mw, c.max_weight)
        mh = Combination._merge_window(mh, c.max_hairs)
    return Combination(first.n, first.m, max_weight=mw, max_hairs=mh)


def bracket(x, y):
    """[x, y] = x.y - (-1)^{|x||y|} y.x, atom-wise Koszul signs."""
    out = _result_combo(x, y)
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            c = cx * cy
            for v in range(gx.nv):
                for g, s in insert_terms(gx, [gy], [v]):
                    out.add_term(g, c * s)
            sgn = -1 if (gx.degree() * gy.degree()) % 2 else 1
            for v in range(gy.nv):
                for g, s in insert_terms(gy, [gx], [v]):
                    out.add_term(g, -sgn * c * s)
    return out


def differential(x):
    """Twisted differential [alpha, x]; vertex splitting after cancellation."""
    return bracket(alpha(x.n), x)


def loop_derivation(x):
    """Scale every atom by its loop order."""
    out = x._like()
    for g, c in x.terms.items():
        w = g.weight()
        if w:
            out.terms[g] = c * w
    return out
