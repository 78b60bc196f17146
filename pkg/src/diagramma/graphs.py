"""Finite simple graphs, subset families, and disjointness graphs.

A family of distinct nonempty subsets of ``{1..n}`` induces a graph whose
vertices are the subsets, with an edge exactly when two subsets are
disjoint. Every finite simple graph arises this way; ``realize_as_disjointness``
produces a witness family. The module also provides the crossing graph of
2-element subsets used for virtual twin words, an induced odd cycle search,
and a small isomorphism backtracker for checks in tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadArity,
    DuplicateSubset,
    EmptySubset,
    OutOfRange,
    ParseError,
    RealizationCheckFailed,
)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset  # of (u, v) pairs with u < v
    tags: tuple = None
    _adj: tuple = field(init=False, compare=False, repr=False, default=None)

    def __post_init__(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    def adjacent(self, u, v):
        return v in self._adj[u]

    def neighbors(self, u):
        return self._adj[u]

    def degree(self, u):
        return len(self._adj[u])

    @property
    def edge_count(self):
        return len(self.edges)


def make_graph(n, edges, tags=None):
    if n < 0:
        raise BadArity("vertex count must be nonnegative, got %d" % n)
    cleaned = set()
    for u, v in edges:
        if not (isinstance(u, int) and isinstance(v, int)
                and 0 <= u < n and 0 <= v < n):
            raise OutOfRange("edge (%r, %r) not over vertices 0..%d" % (u, v, n - 1))
        if u == v:
            raise OutOfRange("self-loop at vertex %d" % u)
        cleaned.add((min(u, v), max(u, v)))
    if tags is not None:
        tags = tuple(tags)
        if len(tags) != n:
            raise BadArity("expected %d tags, got %d" % (n, len(tags)))
    return SimpleGraph(n, frozenset(cleaned), tags)


def opposite_graph(G):
    """Complement: same vertices, edges where G has none."""
    edges = [(u, v) for u in range(G.n) for v in range(u + 1, G.n)
             if not G.adjacent(u, v)]
    return make_graph(G.n, edges, G.tags)


@dataclass(frozen=True)
class SubsetFamily:
    n: int
    sets: tuple  # of frozensets of ints in 1..n


def make_subset_family(n, sets):
    if n < 1:
        raise BadArity("ground set must be nonempty, got n=%d" % n)
    cleaned = []
    seen = set()
    for S in sets:
        S = frozenset(S)
        if not S:
            raise EmptySubset("subsets must be nonempty")
        for e in S:
            if not isinstance(e, int) or not 1 <= e <= n:
                raise OutOfRange("element %r not in 1..%d" % (e, n))
        if S in seen:
            raise DuplicateSubset("duplicate subset %s" % (sorted(S),))
        seen.add(S)
        cleaned.append(S)
    return SubsetFamily(n, tuple(cleaned))


def subset_tag(S):
    return ",".join(str(e) for e in sorted(S))


def disjointness_graph(C):
    """Graph on the family's subsets with edges between disjoint ones."""
    sets = C.sets
    edges = [(i, j) for i in range(len(sets)) for j in range(i + 1, len(sets))
             if not (sets[i] & sets[j])]
    return make_graph(len(sets), edges, [subset_tag(S) for S in sets])


def realize_as_disjointness(G):
    """Find a subset family whose disjointness graph is exactly G.

    Number the edges of the complement of G, let S(u) collect the complement
    edges at u, and give every vertex one fresh private element so the sets
    are distinct and nonempty. Two sets then meet exactly when their vertices
    are adjacent in the complement. Returns ``(family, vertex_map)`` with
    ``vertex_map[u]`` the index of u's subset; the construction is checked
    edge by edge and cannot fail on valid input.
    """
    if G.n == 2 and not G.edges:
        fam = make_subset_family(2, [{1}, {1, 2}])
        return _checked(G, fam, [0, 1])
    opp = opposite_graph(G)
    opp_edges = sorted(opp.edges)
    m = len(opp_edges)
    edge_id = {e: k + 1 for k, e in enumerate(opp_edges)}
    sets = []
    for u in range(G.n):
        S = {edge_id[e] for e in opp_edges if u in e}
        S.add(m + 1 + u)
        sets.append(S)
    fam = make_subset_family(max(m + G.n, 1), sets)
    return _checked(G, fam, list(range(G.n)))


def _checked(G, fam, vertex_map):
    D = disjointness_graph(fam)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if G.adjacent(u, v) != D.adjacent(vertex_map[u], vertex_map[v]):
                raise RealizationCheckFailed(
                    "disjointness graph disagrees at vertices %d, %d" % (u, v))
    return fam, vertex_map


def pvt_graph(n):
    """Commutation graph of the lambda generators: 2-subsets of {1..n}
    in lexicographic order, joined when disjoint."""
    if n < 2:
        raise BadArity("need n >= 2, got %d" % n)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    fam = make_subset_family(n, [set(p) for p in pairs])
    return disjointness_graph(fam)


def pair_index(n, i, j):
    """Vertex id of the 2-subset {i, j} (i < j) in pvt_graph(n)."""
    if not 1 <= i < j <= n:
        raise OutOfRange("need 1 <= i < j <= n, got (%d, %d)" % (i, j))
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


# -- induced odd cycles ---------------------------------------------------------

def verify_induced_cycle(G, cycle):
    """True when the vertex list is a chordless cycle of G."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = (b - a == 1) or (a == 0 and b == k - 1)
            if G.adjacent(cycle[a], cycle[b]) != consecutive:
                return False
    return True


def find_induced_odd_cycle_ge5(G, max_len=11):
    """Search for an induced cycle of odd length between 5 and max_len.

    Depth-first over induced paths anchored at their least vertex. A path
    may only grow with vertices above the anchor that see exactly the path's
    last vertex; a candidate seeing the anchor as well closes a chordless
    cycle. Returns the cycle as a vertex list, or None.
    """
    for s in range(G.n):
        out = _grow(G, s, [s], {s}, max_len)
        if out is not None:
            assert verify_induced_cycle(G, out) and len(out) % 2 == 1
            return out
    return None


def _grow(G, s, path, members, max_len):
    last = path[-1]
    for v in sorted(G.neighbors(last)):
        if v <= s or v in members:
            continue
        if any(G.adjacent(v, p) for p in path[1:-1]):
            continue
        if G.adjacent(v, s) and len(path) > 1:
            if len(path) >= 4 and (len(path) + 1) % 2 == 1:
                return path + [v]
            continue
        if len(path) + 1 <= max_len - 1:
            out = _grow(G, s, path + [v], members | {v}, max_len)
            if out is not None:
                return out
    return None


# -- isomorphism ------------------------------------------------------------------

def find_isomorphism(G, H):
    """Backtracking isomorphism search; returns a vertex map or None.

    Vertices are assigned in decreasing degree order and candidates are
    pruned by degree, which is enough at the few dozen vertices used here.
    """
    if G.n != H.n or len(G.edges) != len(H.edges):
        return None
    if sorted(G.degree(u) for u in range(G.n)) != sorted(H.degree(u) for u in range(H.n)):
        return None
    order = sorted(range(G.n), key=lambda u: -G.degree(u))
    mapping = {}
    used = set()

    def assign(k):
        if k == len(order):
            return True
        u = order[k]
        for w in range(H.n):
            if w in used or H.degree(w) != G.degree(u):
                continue
            ok = all(G.adjacent(u, u2) == H.adjacent(w, w2)
                     for u2, w2 in mapping.items())
            if not ok:
                continue
            mapping[u] = w
            used.add(w)
            if assign(k + 1):
                return True
            del mapping[u]
            used.remove(w)
        return False

    if assign(0):
        return dict(mapping)
    return None


def are_isomorphic(G, H):
    return find_isomorphism(G, H) is not None


# -- text format -------------------------------------------------------------------
#
#   n 6
#   e 0 1
#
# Vertices are 0-based; blank lines are ignored.

def graph_to_text(G):
    lines = ["n %d" % G.n]
    for u, v in sorted(G.edges):
        lines.append("e %d %d" % (u, v))
    return "\n".join(lines) + "\n"


def parse_graph(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            if n is not None:
                raise ParseError("repeated vertex-count line", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError("bad vertex count %r" % parts[1], lineno) from None
        elif parts[0] == "e" and len(parts) == 3:
            if n is None:
                raise ParseError("edge before vertex-count line", lineno)
            try:
                edges.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise ParseError("bad edge %r" % line, lineno) from None
        else:
            raise ParseError("unrecognized line %r" % line, lineno)
    if n is None:
        raise ParseError("missing vertex-count line")
    try:
        return make_graph(n, edges)
    except (OutOfRange, BadArity) as e:
        raise ParseError(str(e)) from e


def save_graph(G, path):
    with open(path, "w") as fh:
        fh.write(graph_to_text(G))


def load_graph(path):
    with open(path) as fh:
        return parse_graph(fh.read())
