"""Pure virtual twin words as diagrams over the fully commuting presentation.

A virtual twin word on n strands is a sequence of twin generators s_i and
virtual crossings r_i (1 <= i <= n-1), each swapping the strands at
positions i, i+1. Pure words are those inducing the identity permutation.
Sweeping a pure word top to bottom over ``x_1 ... x_n`` with one commuting
transistor per s_i (virtual crossings just re-route wires) gives a
(w, w)-diagram, and the word is trivial in the pure virtual twin group
exactly when that diagram reduces to the identity.

The pure subgroup is generated by the elements lambda_{i,j} (i < j), which
braid strand j over to strand i, cross, and come back. Mapping
lambda_{i,j} to the vertex {i,j} of the graph on 2-element subsets of
{1..n} with edges between disjoint pairs identifies the group with that
graph's right-angled Artin group; ``lambda_is_trivial`` runs the diagram
route and this normal-form route side by side and insists they agree.
"""
from __future__ import annotations

import re

from .errors import InterfaceMismatch, IndexOrder, NotPure, OracleMismatch, OutOfRange, ParseError
from . import diagrams as dg
from . import graph_products as gp
from .diagrams import DiagramBuilder
from .graphs import pair_index, pvt_graph
from .presentations import commuting_presentation

_VT_TOKEN = re.compile(r"^([sr])([0-9]+)$")
_LAMBDA_TOKEN = re.compile(r"^L([0-9]+),([0-9]+)(\^-1)?$")


def parse_vt_word(text, n=None):
    """Parse ``"s1 r2 s1"`` into (kind, index) pairs."""
    word = []
    for tok in text.split():
        m = _VT_TOKEN.match(tok)
        if not m:
            raise ParseError("bad twin token %r" % tok)
        i = int(m.group(2))
        if i < 1 or (n is not None and i > n - 1):
            raise OutOfRange("token %s out of range for %s strands" % (tok, n))
        word.append((m.group(1), i))
    return word


def vt_word_str(word):
    return " ".join("%s%d" % (kind, i) for kind, i in word)


def word_permutation(n, word):
    """Where each strand ends up: perm[p] = strand finishing at position p."""
    pos = list(range(n))
    for kind, i in word:
        if not 1 <= i <= n - 1:
            raise OutOfRange("generator index %d needs 1..%d" % (i, n - 1))
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    return tuple(pos)


def is_pure(n, word):
    return word_permutation(n, word) == tuple(range(n))


def vt_to_diagram(n, word):
    """The (x_1..x_n, x_1..x_n)-diagram of a pure virtual twin word."""
    if n < 2:
        raise OutOfRange("need at least 2 strands")
    if not is_pure(n, word):
        raise NotPure("word induces permutation %s" %
                      (word_permutation(n, word),))
    P = commuting_presentation(n)
    b = DiagramBuilder(P, tuple(range(n)))
    pos = list(range(n))   # strand at each physical position
    dang = list(range(n))  # dangling index at each physical position
    for kind, i in word:
        p = i - 1
        if kind == "r":
            pos[p], pos[p + 1] = pos[p + 1], pos[p]
            dang[p], dang[p + 1] = dang[p + 1], dang[p]
            continue
        a, b_ = pos[p], pos[p + 1]
        rel = pair_index(n, min(a, b_) + 1, max(a, b_) + 1)
        lo, hi = sorted((dang[p], dang[p + 1]))
        new = b.apply([dang[p], dang[p + 1]], rel, forward=a < b_)
        for q in range(n):
            if q in (p, p + 1):
                continue
            t = dang[q]
            dang[q] = t + 1 if lo < t < hi else t
        dang[p], dang[p + 1] = new
        pos[p], pos[p + 1] = b_, a
    sigma = [0] * n
    for p in range(n):
        sigma[dang[p]] = p
    return b.finish(sigma)


def vt_is_trivial(n, word):
    return dg.is_trivial(vt_to_diagram(n, word))


def vt_equivalent(n, w1, w2):
    D = dg.concatenate(vt_to_diagram(n, w1), dg.inverse(vt_to_diagram(n, w2)))
    return dg.is_trivial(D)


# -- the generators of the pure subgroup ------------------------------------------

def lambda_word(n, i, j):
    """lambda_{i,j} as a virtual twin word: walk strand j next to strand i,
    twin-cross, walk back."""
    if not 1 <= i < j <= n:
        raise IndexOrder("need 1 <= i < j <= %d, got (%d, %d)" % (n, i, j))
    walk = [("r", k) for k in range(j - 1, i, -1)]
    return walk + [("s", i), ("r", i)] + [("r", k) for k in range(i + 1, j)]


def parse_lambda_word(text, n=None):
    """Parse ``"L1,3 L2,4^-1"`` into (i, j, exponent) triples."""
    out = []
    for tok in text.split():
        m = _LAMBDA_TOKEN.match(tok)
        if not m:
            raise ParseError("bad lambda token %r" % tok)
        i, j = int(m.group(1)), int(m.group(2))
        if not i < j:
            raise IndexOrder("lambda indices must satisfy i < j, got %r" % tok)
        if n is not None and j > n:
            raise OutOfRange("token %s out of range for %d strands" % (tok, n))
        out.append((i, j, -1 if m.group(3) else 1))
    return out


def lambda_word_str(lword):
    return " ".join("L%d,%d%s" % (i, j, "" if e == 1 else "^-1")
                    for i, j, e in lword)


def lambda_to_vt(n, lword):
    """Expand a lambda word into twin generators; every generator is an
    involution, so an inverse is the reversed expansion."""
    word = []
    for i, j, e in lword:
        w = lambda_word(n, i, j)
        word.extend(w if e == 1 else w[::-1])
    return word


def lambda_to_diagram(n, lword):
    return vt_to_diagram(n, lambda_to_vt(n, lword))


def lambda_syllables(n, lword):
    """The same word over the right-angled Artin group of the disjointness
    graph on 2-subsets."""
    ctx = gp.gp_context(pvt_graph(n))
    return gp.make_gp_word(ctx, [(pair_index(n, i, j), e)
                                 for i, j, e in lword])


def lambda_is_trivial(n, lword):
    """Decide triviality by diagram reduction, cross-checked against the
    Artin-group normal form."""
    by_diagram = vt_is_trivial(n, lambda_to_vt(n, lword))
    by_nf = gp.gp_is_trivial(lambda_syllables(n, lword))
    if by_diagram != by_nf:
        raise OracleMismatch(
            "diagram says %s, normal form says %s on %s" %
            (by_diagram, by_nf, lambda_word_str(lword)))
    return by_diagram


def lambda_equivalent(n, l1, l2):
    by_diagram = vt_equivalent(n, lambda_to_vt(n, l1), lambda_to_vt(n, l2))
    by_nf = gp.gp_equal(lambda_syllables(n, l1), lambda_syllables(n, l2))
    if by_diagram != by_nf:
        raise OracleMismatch(
            "diagram says %s, normal form says %s on %s vs %s" %
            (by_diagram, by_nf, lambda_word_str(l1), lambda_word_str(l2)))
    return by_diagram


# -- defining relations ------------------------------------------------------------

def _relator_instances(n):
    out = []
    for i in range(1, n):
        out.append(("s%d s%d" % (i, i), [("s", i)] * 2))
        out.append(("r%d r%d" % (i, i), [("r", i)] * 2))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(("(s%d s%d)^2" % (i, j), [("s", i), ("s", j)] * 2))
            out.append(("(r%d r%d)^2" % (i, j), [("r", i), ("r", j)] * 2))
            out.append(("(r%d s%d)^2" % (i, j), [("r", i), ("s", j)] * 2))
            out.append(("(r%d s%d)^2" % (j, i), [("r", j), ("s", i)] * 2))
    for i in range(1, n - 1):
        out.append(("(r%d r%d)^3" % (i, i + 1), [("r", i), ("r", i + 1)] * 3))
        out.append(("r%d r%d s%d r%d r%d s%d" % (i, i + 1, i, i + 1, i, i + 1),
                    [("r", i), ("r", i + 1), ("s", i),
                     ("r", i + 1), ("r", i), ("s", i + 1)]))
    return out


def vt_relator_check(n):
    """Check every defining relator of the virtual twin group on n strands
    maps to the trivial diagram. Returns (name, ok) pairs."""
    if n < 2:
        raise OutOfRange("need at least 2 strands")
    return [(name, vt_is_trivial(n, w)) for name, w in _relator_instances(n)]
