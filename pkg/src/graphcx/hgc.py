"""Hairy graph complexes: grafting bracket, GC action, twisted differentials.

Distinguished elements (each normalized by its automorphism count):

* ``m_element`` -- the one-vertex one-hair graph,
* ``line``      -- the vertexless edge, L/2, Maurer-Cartan for m = n,
* ``tripod_series`` -- sum of odd stars with coefficients lambda^k/(2k+1)!,
  Maurer-Cartan for m = n - 1 up to the hair window.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import gc
from .graphs import Combination, Graph, GraphError

# Sign conventions not fixed by the construction; pinned by the relation
# tests (d^2 = 0, Maurer-Cartan residuals, Jacobi) in tests/.
HAIR_RULE = "front"    # hair consumption side for odd m
GRAFT_VSIGN = True     # (-1)^{n Vx Vy} vertex block factor on grafts
GRAFT_HSIGN = False    # (-1)^{m (Hx-1) Hy} hair block factor on grafts
TWIST_ALPHA_SIGN = -1  # extra global sign on the (-1)^{|x|} x.alpha term
TWIST_SIGMA = False    # shift the twist exponent by the word parity n+m


def m_atom(m, n):
    return Graph(n, m, 1, 1, ((0, 1),))


def m_element(m, n):
    out = Combination(n, m)
    out.add_term(m_atom(m, n), 1)
    return out


def line_atom(m, n):
    return Graph(n, m, 0, 2, ((0, 1),))


def line(m, n):
    """The edge with two hairs, weighted by one over its symmetry order."""
    out = Combination(n, m)
    out.add_term(line_atom(m, n), Fraction(1, 2))
    return out


def star_atom(m, n, hairs):
    return Graph(n, m, 1, hairs, tuple((0, 1 + j) for j in range(hairs)))


def tripod_series(n, lam, max_hairs, m=None):
    """Odd-star series lambda^k/(2k+1)! . star_{2k+1}, hairs <= max_hairs."""
    if m is None:
        m = n - 1
    lam = Fraction(lam)
    out = Combination(n, m, max_hairs=max_hairs)
    fac = 1
    k = 1
    while 2 * k + 1 <= max_hairs:
        fac = 1
        for i in range(2, 2 * k + 2):
            fac *= i
        out.add_term(star_atom(m, n, 2 * k + 1), lam ** k / fac)
        k += 1
    return out


def graft_build(x, p, y, w):
    """Graft hair p of x onto internal vertex w of y; (raw Graph, sign)."""
    nvx, nvy = x.nv, y.nv
    new_nv = nvx + nvy
    new_nh = x.nh + y.nh - 1

    def xmap(e):
        if e < nvx:
            return e
        j = e - nvx
        if j == p:
            return None  # the consumed hair; endpoint moves to w
        return new_nv + (j if j < p else j - 1)

    edges = []
    for a, b in x.edges:
        na, nb = xmap(a), xmap(b)
        if na is None:
            na = nvx + w
        if nb is None:
            nb = nvx + w
        edges.append((na, nb))
    for a, b in y.edges:
        na = a + nvx if a < nvy else new_nv + (x.nh - 1) + (a - nvy)
        nb = b + nvx if b < nvy else new_nv + (x.nh - 1) + (b - nvy)
        edges.append((na, nb))

    sign = 1
    if x.m is not None and x.m % 2:
        before = p if HAIR_RULE == "front" else x.nh - 1 - p
        if before % 2:
            sign = -sign
        if GRAFT_HSIGN and ((x.nh - 1) * y.nh) % 2:
            sign = -sign
    if GRAFT_VSIGN and x.n % 2 and (nvx * nvy) % 2:
        sign = -sign
    return Graph(x.n, x.m, new_nv, new_nh, edges), sign


def graft_terms(gx, gy):
    for p in range(gx.nh):
        for w in range(gy.nv):
            yield graft_build(gx, p, gy, w)


def graft_bracket(x, y):
    """[x, y]: reattach a hair of one graph to a vertex of the other."""
    out = gc._result_combo(x, y)
    for gx, cx in x.terms.items():
        for gy, cy in y.terms.items():
            c = cx * cy
            for g, s in graft_terms(gx, gy):
                out.add_term(g, c * s)
            sgn = -1 if (gx.degree() * gy.degree()) % 2 else 1
            for g, s in graft_terms(gy, gx):
                out.add_term(g, -sgn * c * s)
    return out


def act(x, gamma):
    """Right pre-Lie action: insert GC elements into internal vertices."""
    if gamma.m is not None:
        raise GraphError("action expects a GC element on the right")
    out = gc._result_combo(x)
    for gx, cx in x.terms.items():
        for gg, cg in gamma.terms.items():
            c = cx * cg
            for v in range(gx.nv):
                for g, s in gc.insert_terms(gx, [gg], [v]):
                    out.add_term(g, c * s)
    return out


def brace(host, args):
    """Module brace: insert GC arguments at pairwise distinct vertices."""
    for a in args:
        if a.m is not None:
            raise GraphError("brace arguments must be GC elements")
    return gc.brace(host, args)


def twisted_differential(x, extra=None, with_m=True):
    """d(x) = [m + extra, x] + (-1)^{|x|} x . alpha, truncated to x's window.

    ``extra`` is an additional Maurer-Cartan element (line or tripod
    series); with_m=False drops the one-hair-vertex part (used in tests).
    """
    mel = Combination(x.n, x.m)
    if with_m:
        mel = mel + m_element(x.m, x.n)
    if extra is not None:
        mel = mel + extra
    out = gc._result_combo(x)
    if not x.terms:
        return out
    al = gc.alpha(x.n)
    signed = x._like()
    shift = (x.n + x.m) % 2 if TWIST_SIGMA else 0
    for g, c in x.terms.items():
        s = TWIST_ALPHA_SIGN * (-1 if (g.degree() + shift) % 2 else 1)
        signed.terms[g] = c * s
    for part in (graft_bracket(mel, x), act(signed, al)):
        for g, c in part.terms.items():
            out.add_canonical(g, c)
    return out


def hair_derivation(x):
    """Scale every atom by its weight (edges minus internal vertices)."""
    out = x._like()
    for g, c in x.terms.items():
        w = g.weight()
        if w:
            out.terms[g] = c * w
    return out


def mc_residual_dglie(x, m, n, extra=None, with_m=True):
    """Residual d(x) + [x, x]/2 of the twisted dg Lie structure."""
    res = twisted_differential(x, extra=extra, with_m=with_m)
    half = graft_bracket(x, x).scale(Fraction(1, 2))
    return res + half
