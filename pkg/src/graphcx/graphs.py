"""Oriented hairy multigraphs: canonical forms, orientation signs, bases.

A graph atom is stored with explicit orientation data:

* even n: the stored edge order is the orientation (edges anticommute),
* odd n:  the vertex index order is the orientation and every edge is a
  directed pair (reversing a direction flips the sign),
* odd m:  additionally the hair index order (hairs anticommute).

``canonicalize`` maps any presentation to a unique canonical representative
together with the relating sign, or to ``ZERO`` when some automorphism acts
by -1 on the orientation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

ZERO = None


class GraphError(ValueError):
    pass


class GraphSyntaxError(GraphError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %s, column %s: %s" % (line, column, message)
        super().__init__(message)


def perm_parity(perm):
    """Sign of a permutation given as a sequence with perm[i] = image of i."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def koszul_sign(parities, perm):
    """Koszul sign of reordering symbols with given parities by ``perm``.

    ``perm[i]`` is the source position placed at target slot i.  Only odd
    symbols (parity 1) contribute; the sign is the parity of the number of
    odd/odd inversions.
    """
    sign = 1
    k = len(perm)
    for i in range(k):
        pi = perm[i]
        if not parities[pi]:
            continue
        for j in range(i + 1, k):
            if perm[j] < pi and parities[perm[j]]:
                sign = -sign
    return sign


class Graph:
    """One oriented (hairy) multigraph.

    Endpoints 0..nv-1 are internal vertices, nv..nv+nh-1 are hairs.  ``m``
    is None for non-hairy (GC) atoms.
    """

    __slots__ = ("n", "m", "nv", "nh", "edges", "_hash")

    def __init__(self, n, m, nv, nh, edges):
        self.n = n
        self.m = m
        self.nv = nv
        self.nh = nh
        self.edges = tuple((int(a), int(b)) for a, b in edges)
        self._hash = hash((n, m, nv, nh, self.edges))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.m == other.m and self.nv == other.nv
                and self.nh == other.nh and self.edges == other.edges)

    def __repr__(self):
        return "Graph(n=%r, m=%r, nv=%r, nh=%r, edges=%r)" % (
            self.n, self.m, self.nv, self.nh, self.edges)

    def sort_key(self):
        return (self.nv, self.nh, len(self.edges), self.edges)

    @property
    def ne(self):
        return len(self.edges)

    def is_hairy(self):
        return self.m is not None

    def degree(self):
        """Homological degree; pinned by |alpha| = |L| = |tripod| = -1."""
        e, v, n = self.ne, self.nv, self.n
        if self.m is None:
            return e * (n - 1) - (v - 1) * n
        return e * (n - 1) - v * n + self.m * (1 - self.nh)

    def weight(self):
        """Filtration weight: loop order for GC atoms, edges - vertices else."""
        if self.m is None:
            return self.ne - self.nv + 1
        return self.ne - self.nv

    def valences(self):
        val = [0] * self.nv
        for a, b in self.edges:
            if a < self.nv:
                val[a] += 1
            if b < self.nv:
                val[b] += 1
        return val

    def min_valence(self):
        if self.nv == 0:
            return 3  # the line graph has no internal vertices to constrain
        return min(self.valences())

    def hair_attachments(self):
        """attachment endpoint of each hair (vertex index, or other hair)."""
        att = [None] * self.nh
        for a, b in self.edges:
            for x, y in ((a, b), (b, a)):
                if x >= self.nv:
                    att[x - self.nv] = y
        return att

    def validate(self, klass=1, connected=True):
        nv, nh = self.nv, self.nh
        if self.m is None and nh:
            raise GraphError("GC atom cannot carry hairs")
        seen_hair = [0] * nh
        for a, b in self.edges:
            if not (0 <= a < nv + nh and 0 <= b < nv + nh):
                raise GraphError("endpoint out of range: (%d, %d)" % (a, b))
            if a == b:
                raise GraphError("tadpole at %d" % a)
            for x in (a, b):
                if x >= nv:
                    seen_hair[x - nv] += 1
        for j, c in enumerate(seen_hair):
            if c != 1:
                raise GraphError("hair %d has valence %d, want exactly 1" % (j + 1, c))
        if klass > 1 and self.nv and self.min_valence() < klass:
            raise GraphError("internal vertex below valence class %d" % klass)
        if connected and not self.is_connected():
            raise GraphError("graph is not connected")
        if not self.edges and (nv + nh) > 1:
            raise GraphError("edgeless graph with several vertices")

    def is_connected(self):
        tot = self.nv + self.nh
        if tot <= 1:
            return True
        parent = list(range(tot))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        root = find(0)
        return all(find(x) == root for x in range(tot))


# ---------------------------------------------------------------------------
# canonical forms

_canon_cache = {}


def clear_cache():
    _canon_cache.clear()


def _refine(colors, nbrs):
    """Stable 1-WL refinement; color values are dense ints, iso-invariant."""
    nv = len(colors)
    while True:
        keys = []
        for v in range(nv):
            cnt = {}
            for w in nbrs[v]:
                c = colors[w]
                cnt[c] = cnt.get(c, 0) + 1
            keys.append((colors[v], tuple(sorted(cnt.items()))))
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _labelings(nv, colors, nbrs):
    """All vertex labelings compatible with iterated individualization."""
    out = []

    def rec(cols):
        cols = _refine(cols, nbrs)
        cells = {}
        for v, c in enumerate(cols):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            pi = [0] * nv
            for v, c in enumerate(cols):
                pi[v] = c
            out.append(pi)
            return
        mark = max(cols) + 1
        for v in target:
            nxt = list(cols)
            nxt[v] = mark
            rec(nxt)

    if nv == 0:
        return [[]]
    rec(colors)
    return out


def _encode(g, pi):
    """Encoding and orientation sign of g relabeled by pi (vertex map)."""
    nv, nh, n, m = g.nv, g.nh, g.n, g.m
    att = g.hair_attachments()
    if nv:
        ranked = sorted(range(nh), key=lambda j: (pi[att[j]], j))
    else:
        ranked = list(range(nh))
    hair_rank = [0] * nh
    for r, j in enumerate(ranked):
        hair_rank[j] = r

    def emap(x):
        return pi[x] if x < nv else nv + hair_rank[x - nv]

    sign = 1
    pairs = []
    if n % 2 == 0:
        for a, b in g.edges:
            a, b = emap(a), emap(b)
            pairs.append((a, b) if a < b else (b, a))
        # insertion-sort parity; equal pairs mean a parallel-edge kill
        for i in range(1, len(pairs)):
            j = i
            while j > 0 and pairs[j - 1] > pairs[j]:
                pairs[j - 1], pairs[j] = pairs[j], pairs[j - 1]
                sign = -sign
                j -= 1
            if j > 0 and pairs[j - 1] == pairs[j]:
                return None, 0
    else:
        flips = 0
        for a, b in g.edges:
            a, b = emap(a), emap(b)
            if a > b:
                a, b = b, a
                flips += 1
            pairs.append((a, b))
        pairs.sort()
        for i in range(1, len(pairs)):
            if pairs[i - 1] == pairs[i]:
                # parallel directed edges, same normal form: matching free
                pass
        sign = perm_parity(pi) if nv else 1
        if flips % 2:
            sign = -sign
    if m is not None and m % 2:
        inv = [0] * nh
        for r, j in enumerate(ranked):
            inv[r] = j
        sign *= perm_parity(inv)
    return tuple(pairs), sign


def canonical_form(g):
    """(canonical Graph, sign, aut_order, reversing) with sign 0 when killed."""
    key = (g.n, g.m, g.nv, g.nh, g.edges)
    hit = _canon_cache.get(key)
    if hit is not None:
        return hit
    res = _canonical_form_uncached(g)
    _canon_cache[key] = res
    canon = res[0]
    if canon is not None:
        ck = (canon.n, canon.m, canon.nv, canon.nh, canon.edges)
        if ck not in _canon_cache:
            _canon_cache[ck] = (canon, 1 if res[1] else 0, res[2], res[3])
    return res


def _hair_multiplicity_factor(g):
    att = g.hair_attachments()
    cnt = {}
    for a in att:
        if a is not None and a < g.nv:
            cnt[a] = cnt.get(a, 0) + 1
    fac = 1
    killed = False
    for c in cnt.values():
        if c > 1:
            if g.m is not None and (g.m - g.n) % 2 == 0:
                killed = True
            for i in range(2, c + 1):
                fac *= i
    return fac, killed


def _canonical_form_uncached(g):
    g.validate(klass=1, connected=True)
    n, m, nv, nh = g.n, g.m, g.nv, g.nh

    if nv == 0:
        # connected with no internal vertices: the line graph L
        sign_swap = (-1 if n % 2 else 1) * (-1 if (m or 0) % 2 else 1)
        a, b = g.edges[0]
        base = 1
        if n % 2 and a > b:
            base = -base
        edges = ((nv + 0, nv + 1),)
        canon = Graph(n, m, 0, 2, edges)
        if sign_swap < 0:
            return (None, 0, 2, True)
        return (canon, base, 2, False)

    hair_fac, hair_killed = _hair_multiplicity_factor(g)
    if hair_killed:
        return (None, 0, 0, True)

    # parallel internal edges: orientation-free matchings for odd n, kill for even
    mult = {}
    for a, b in g.edges:
        if a < nv and b < nv:
            k = (a, b) if a < b else (b, a)
            mult[k] = mult.get(k, 0) + 1
    par_fac = 1
    for c in mult.values():
        for i in range(2, c + 1):
            par_fac *= i
    if n % 2 == 0 and any(c > 1 for c in mult.values()):
        return (None, 0, 0, True)

    att = g.hair_attachments()
    hair_cnt = [0] * nv
    for a in att:
        hair_cnt[a] += 1
    nbrs = [[] for _ in range(nv)]
    for a, b in g.edges:
        if a < nv and b < nv:
            nbrs[a].append(b)
            nbrs[b].append(a)
    deg = [len(x) for x in nbrs]
    init = [(deg[v], hair_cnt[v]) for v in range(nv)]
    order = {k: i for i, k in enumerate(sorted(set(init)))}
    colors = [order[k] for k in init]

    best = None
    best_sign = 0
    best_count = 0
    reversing = False
    for pi in _labelings(nv, colors, nbrs):
        enc, sign = _encode(g, pi)
        if sign == 0:
            return (None, 0, 0, True)
        if best is None or enc < best:
            best = enc
            best_sign = sign
            best_count = 1
        elif enc == best:
            best_count += 1
            if sign != best_sign:
                reversing = True
    aut = best_count * par_fac * hair_fac
    if reversing:
        return (None, 0, aut, True)
    canon = Graph(n, m, nv, nh, best)
    return (canon, best_sign, aut, False)


def canonicalize(g):
    """Canonical representative and sign, or ZERO for symmetry-killed atoms."""
    canon, sign, _aut, _rev = canonical_form(g)
    if canon is None:
        return ZERO
    return canon, sign


def automorphism_report(g):
    """(automorphism group order, has an orientation-reversing automorphism)."""
    _canon, _sign, aut, rev = canonical_form(g)
    return aut, rev


# ---------------------------------------------------------------------------
# combinations

class Combination:
    """Formal sum of canonical atoms with exact rational coefficients."""

    __slots__ = ("n", "m", "terms", "max_weight", "max_hairs")

    def __init__(self, n, m, terms=None, max_weight=None, max_hairs=None):
        self.n = n
        self.m = m
        self.max_weight = max_weight
        self.max_hairs = max_hairs
        self.terms = {}
        if terms:
            for g, c in terms.items() if isinstance(terms, dict) else terms:
                self.add_term(g, c)

    def copy(self):
        out = Combination(self.n, self.m, max_weight=self.max_weight,
                          max_hairs=self.max_hairs)
        out.terms = dict(self.terms)
        return out

    def _window_ok(self, g):
        if self.max_weight is not None and g.weight() > self.max_weight:
            return False
        if self.max_hairs is not None and g.nh > self.max_hairs:
            return False
        return True

    def add_term(self, g, coeff):
        """Canonicalize g and accumulate coeff on its class."""
        if not coeff:
            return self
        if g.n != self.n or g.m != self.m:
            raise GraphError("parity mismatch: (m=%r, n=%r) vs (m=%r, n=%r)"
                             % (g.m, g.n, self.m, self.n))
        res = canonicalize(g)
        if res is ZERO:
            return self
        canon, sign = res
        if not self._window_ok(canon):
            return self
        c = self.terms.get(canon, 0) + Fraction(coeff) * sign
        if c:
            self.terms[canon] = c
        else:
            self.terms.pop(canon, None)
        return self

    def add_canonical(self, g, coeff):
        if not coeff or not self._window_ok(g):
            return self
        c = self.terms.get(g, 0) + coeff
        if c:
            self.terms[g] = c
        else:
            self.terms.pop(g, None)
        return self

    @staticmethod
    def _merge_window(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def _like(self, other=None):
        if other is None:
            return Combination(self.n, self.m, max_weight=self.max_weight,
                               max_hairs=self.max_hairs)
        if other.n != self.n or other.m != self.m:
            raise GraphError("parity mismatch in combination arithmetic")
        return Combination(
            self.n, self.m,
            max_weight=self._merge_window(self.max_weight, other.max_weight),
            max_hairs=self._merge_window(self.max_hairs, other.max_hairs))

    def __add__(self, other):
        out = self._like(other)
        for g, c in self.terms.items():
            out.add_canonical(g, c)
        for g, c in other.terms.items():
            out.add_canonical(g, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        out = self._like()
        c = Fraction(c)
        if c:
            for g, co in self.terms.items():
                out.terms[g] = co * c
        return out

    def __eq__(self, other):
        return (isinstance(other, Combination) and self.n == other.n
                and self.m == other.m and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("combinations are not hashable")

    def is_zero(self):
        return not self.terms

    def atoms(self):
        return sorted(self.terms, key=Graph.sort_key)

    def items(self):
        return [(g, self.terms[g]) for g in self.atoms()]

    def coeff(self, g):
        res = canonicalize(g)
        if res is ZERO:
            return Fraction(0)
        canon, sign = res
        return self.terms.get(canon, Fraction(0)) * sign

    def degrees(self):
        return sorted({g.degree() for g in self.terms})

    def degree(self):
        degs = self.degrees()
        if len(degs) > 1:
            raise GraphError("combination is not homogeneous: degrees %r" % degs)
        return degs[0] if degs else None

    def min_valence(self):
        return min((g.min_valence() for g in self.terms), default=3)

    def restrict_class(self, klass):
        out = self._like()
        for g, c in self.terms.items():
            if g.min_valence() >= klass:
                out.terms[g] = c
        return out

    def truncate(self, max_weight=None, max_hairs=None):
        out = self.copy()
        out.max_weight = self._merge_window(out.max_weight, max_weight)
        out.max_hairs = self._merge_window(out.max_hairs, max_hairs)
        out.terms = {g: c for g, c in out.terms.items() if out._window_ok(g)}
        return out

    def __repr__(self):
        if not self.terms:
            return "<0>"
        bits = []
        for g, c in self.items():
            bits.append("%s * %s" % (c, serialize(g, inline=True)))
        return " + ".join(bits)


def combo(n, m, *pairs, **kw):
    out = Combination(n, m, **kw)
    for g, c in pairs:
        out.add_term(g, c)
    return out


# ---------------------------------------------------------------------------
# text and JSON formats

def serialize(g, inline=False):
    """Spec record: header plus `E a b` items, 1-based v/h labels."""
    head = "hgraph m=%s n=%d v=%d h=%d" % (
        "-" if g.m is None else g.m, g.n, g.nv, g.nh)
    items = []
    for a, b in g.edges:
        items.append("E %s %s" % (_ep_name(g, a), _ep_name(g, b)))
    sep = " / " if inline else "\n"
    return sep.join([head] + items)


def _ep_name(g, x):
    if x < g.nv:
        return "v%d" % (x + 1)
    return "h%d" % (x - g.nv + 1)


def parse(text):
    """Parse one graph record; raises GraphSyntaxError with position."""
    pieces = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for chunk in raw.split(" / "):
            if chunk.strip():
                pieces.append((lineno, raw.index(chunk.strip()) + 1, chunk.strip()))
    if not pieces:
        raise GraphSyntaxError("empty graph record")
    lineno, col, head = pieces[0]
    fields = head.split()
    if fields[0] != "hgraph" or len(fields) != 5:
        raise GraphSyntaxError("expected `hgraph m=.. n=.. v=.. h=..`", lineno, col)
    vals = {}
    for f in fields[1:]:
        if "=" not in f:
            raise GraphSyntaxError("malformed field %r" % f, lineno, col)
        k, v = f.split("=", 1)
        vals[k] = v
    try:
        m = None if vals["m"] == "-" else int(vals["m"])
        n = int(vals["n"])
        nv = int(vals["v"])
        nh = int(vals["h"])
    except (KeyError, ValueError) as exc:
        raise GraphSyntaxError("bad header field: %s" % exc, lineno, col)
    edges = []
    for lineno, col, item in pieces[1:]:
        toks = item.split()
        if len(toks) != 3 or toks[0] != "E":
            raise GraphSyntaxError("expected `E <a> <b>`, got %r" % item, lineno, col)
        edges.append((_ep_parse(toks[1], nv, nh, lineno, col),
                      _ep_parse(toks[2], nv, nh, lineno, col)))
    g = Graph(n, m, nv, nh, edges)
    try:
        g.validate(klass=1, connected=True)
    except GraphError as exc:
        raise GraphSyntaxError(str(exc), lineno, col)
    return g


def _ep_parse(tok, nv, nh, lineno, col):
    if tok[:1] == "v":
        idx = int(tok[1:]) - 1
        if not 0 <= idx < nv:
            raise GraphSyntaxError("vertex %s out of range" % tok, lineno, col)
        return idx
    if tok[:1] == "h":
        idx = int(tok[1:]) - 1
        if not 0 <= idx < nh:
            raise GraphSyntaxError("hair %s out of range" % tok, lineno, col)
        return nv + idx
    raise GraphSyntaxError("bad endpoint %r" % tok, lineno, col)


def serialize_combination(c):
    blocks = []
    for g, coeff in c.items():
        blocks.append("coef %s\n%s" % (Fraction(coeff), serialize(g)))
    return "\n".join(blocks) + ("\n" if blocks else "")


def parse_combination(text, n=None, m=None):
    blocks = []
    cur = []
    for line in text.splitlines():
        if line.startswith("coef "):
            if cur:
                blocks.append(cur)
            cur = [line]
        elif line.strip():
            cur.append(line)
    if cur:
        blocks.append(cur)
    if not blocks:
        if n is None:
            raise GraphSyntaxError("empty combination and no (m, n) context")
        return Combination(n, m)
    out = None
    for block in blocks:
        coeff = Fraction(block[0][len("coef "):].strip())
        g = parse("\n".join(block[1:]))
        if out is None:
            out = Combination(g.n, g.m)
        out.add_term(g, coeff)
    return out


def graph_to_json(g):
    return {"m": g.m, "n": g.n, "v": g.nv, "h": g.nh,
            "edges": [[_ep_name(g, a), _ep_name(g, b)] for a, b in g.edges]}


def graph_from_json(obj):
    nv, nh = obj["v"], obj["h"]
    edges = [(_ep_parse(a, nv, nh, None, None), _ep_parse(b, nv, nh, None, None))
             for a, b in obj["edges"]]
    return Graph(obj["n"], obj["m"], nv, nh, edges)


def combination_to_json(c):
    return {"m": c.m, "n": c.n,
            "terms": [{"coef": str(coeff), "graph": graph_to_json(g)}
                      for g, coeff in c.items()]}


# ---------------------------------------------------------------------------
# basis enumeration

def _internal_shapes(n, max_internal_edges, max_vertices, allow_multi):
    """Connected internal skeletons up to iso, by internal edge count.

    Level 0 holds the single vertex; shapes are canonical Graphs with m=None
    pretending n parity only for canonical bookkeeping (orientation-zero
    shapes are kept: they matter as extension substrates and for hairy use).
    """
    levels = [set(), ] * 0
    k1 = Graph(n, None, 1, 0, ())
    levels = [{k1}]
    for e in range(1, max_internal_edges + 1):
        cur = set()
        prev = levels[e - 1]
        for g in prev:
            nv = g.nv
            # attach a new vertex
            if nv + 1 <= max_vertices:
                for v in range(nv):
                    h = Graph(n, None, nv + 1, 0, g.edges + ((v, nv),))
                    cur.add(_shape_key(h))
            # add an edge between existing vertices
            for a in range(nv):
                for b in range(a + 1, nv):
                    if not allow_multi and ((a, b) in g.edges or (b, a) in g.edges):
                        continue
                    h = Graph(n, None, nv, 0, g.edges + ((a, b),))
                    cur.add(_shape_key(h))
        levels.append(cur)
    return levels


def _shape_key(g):
    canon, _sign, _aut, _rev = canonical_form(g)
    if canon is not None:
        return canon
    # orientation-killed shape: fall back to a sign-free canonical labeling
    return _shapeonly_canonical(g)


_shape_cache = {}


def _shapeonly_canonical(g):
    key = (g.n, g.m, g.nv, g.nh, g.edges)
    hit = _shape_cache.get(key)
    if hit is not None:
        return hit
    att = g.hair_attachments()
    hair_cnt = [0] * g.nv
    for a in att:
        if a is not None and a < g.nv:
            hair_cnt[a] += 1
    nbrs = [[] for _ in range(g.nv)]
    for a, b in g.edges:
        if a < g.nv and b < g.nv:
            nbrs[a].append(b)
            nbrs[b].append(a)
    deg = [len(x) for x in nbrs]
    init = [(deg[v], hair_cnt[v]) for v in range(g.nv)]
    order = {k: i for i, k in enumerate(sorted(set(init)))}
    colors = [order[k] for k in init]
    best = None
    for pi in _labelings(g.nv, colors, nbrs):
        ranked = sorted(range(g.nh), key=lambda j: (pi[att[j]], j))
        rank = [0] * g.nh
        for r, j in enumerate(ranked):
            rank[j] = r
        pairs = []
        for a, b in g.edges:
            a = pi[a] if a < g.nv else g.nv + rank[a - g.nv]
            b = pi[b] if b < g.nv else g.nv + rank[b - g.nv]
            pairs.append((a, b) if a < b else (b, a))
        pairs.sort()
        enc = tuple(pairs)
        if best is None or enc < best:
            best = enc
    out = Graph(g.n, g.m, g.nv, g.nh, best)
    _shape_cache[key] = out
    return out


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_basis(n, m=None, klass=1, vertices=None, hairs=None, edges=None,
                    degree=None, weight=None, loops=None,
                    max_vertices=None, max_edges=None):
    """All nonzero canonical atoms meeting the constraints, canonical order.

    The constraint set must bound vertices and edges; otherwise a GraphError
    flags the request as unbounded.
    """
    hairy = m is not None
    v_cap, e_cap = _resolve_bounds(n, m, vertices, hairs, edges, degree,
                                   weight, loops, max_vertices, max_edges)

    def keep(g):
        if vertices is not None and g.nv != vertices:
            return False
        if hairs is not None and g.nh != hairs:
            return False
        if edges is not None and g.ne != edges:
            return False
        if degree is not None and g.degree() != degree:
            return False
        if weight is not None and g.weight() != weight:
            return False
        if loops is not None and g.weight() != loops:
            return False
        if g.nv and g.min_valence() < klass:
            return False
        return True

    allow_multi = (n % 2 == 1)
    out = []
    if not hairy:
        levels = _internal_shapes(n, e_cap, v_cap, allow_multi)
        seen = set()
        for e in range(1, e_cap + 1):
            for shape in levels[e]:
                res = canonicalize(shape)
                if res is ZERO:
                    continue
                canon, _sign = res
                if canon in seen or not keep(canon):
                    continue
                seen.add(canon)
                out.append(canon)
    else:
        h_cap = e_cap  # each hair is an edge
        if hairs is not None:
            h_cap = min(h_cap, hairs)
        if m is not None and degree is None and weight is None and \
                hairs is None and edges is None and max_edges is None:
            raise GraphError("unbounded hairy enumeration: bound hairs or edges")
        int_cap = e_cap
        levels = _internal_shapes(n, int_cap, v_cap, allow_multi)
        same_parity = (m - n) % 2 == 0
        seen = set()
        # the line graph: no internal vertices
        lg = Graph(n, m, 0, 2, ((0, 1),))
        res = canonicalize(lg)
        if res is not ZERO and keep(res[0]) and res[0] not in seen:
            seen.add(res[0])
            out.append(res[0])
        for e_int in range(0, int_cap + 1):
            for shape in levels[e_int]:
                nv = shape.nv
                if nv == 0:
                    continue
                for h in range(1, h_cap - e_int + 1):
                    if e_int + h > e_cap:
                        continue
                    for comp in _compositions(h, nv):
                        if same_parity and any(c > 1 for c in comp):
                            continue
                        edges2 = list(shape.edges)
                        hi = 0
                        for v in range(nv):
                            for _ in range(comp[v]):
                                edges2.append((v, nv + hi))
                                hi += 1
                        g = Graph(n, m, nv, h, edges2)
                        if g.nv > 1 and 0 in g.valences():
                            continue
                        res = canonicalize(g)
                        if res is ZERO:
                            continue
                        canon, _sign = res
                        if canon in seen or not keep(canon):
                            continue
                        seen.add(canon)
                        out.append(canon)
    out.sort(key=Graph.sort_key)
    return out


def _resolve_bounds(n, m, vertices, hairs, edges, degree, weight, loops,
                    max_vertices, max_edges):
    hairy = m is not None
    v_cap = vertices if vertices is not None else max_vertices
    e_cap = edges if edges is not None else max_edges
    if e_cap is None and not hairy:
        if loops is not None and v_cap is not None:
            e_cap = v_cap + loops - 1
        elif degree is not None and loops is not None:
            # degree = e(n-1) - (v-1)n with e = v + loops - 1
            if n - 1 - 1 != 0 or True:
                # solve v from the two linear relations
                # deg = (v + loops - 1)(n-1) - (v-1)n = v(n-1-n) + ...
                v = (loops - 1) * (n - 1) + n - degree
                if v < 1:
                    return 1, 1
                v_cap = v if v_cap is None else min(v_cap, v)
                e_cap = v + loops - 1
    if hairy and e_cap is None:
        if weight is not None and v_cap is not None:
            e_cap = weight + v_cap
        elif degree is not None and weight is not None:
            # degree = e(n-1) - vn + m(1-h), e = w + v  =>  v, h bounded
            # nh >= 1 so v <= w(n-1) + m - degree ... resolve loosely
            bound = abs(degree) + abs(weight) * n + abs(m) + 4
            v_cap = bound if v_cap is None else v_cap
            e_cap = weight + v_cap
    if v_cap is None and e_cap is not None:
        v_cap = e_cap + 1
    if v_cap is None or e_cap is None:
        raise GraphError("enumeration constraints do not bound the search")
    return v_cap, e_cap
