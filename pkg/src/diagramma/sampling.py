"""Random instances for property suites and tests.

Everything takes an explicit ``random.Random`` so runs are reproducible
from a seed. Diagram generation works through the builder: each step scans
the dangling word for contiguous occurrences of a relation side and applies
one at random, so every sample is a valid derivation by construction.
"""
from __future__ import annotations

import random
import string

from .errors import DiagrammaError
from . import diagrams as dg
from . import diagram_products as dp
from . import graph_products as gp
from .diagrams import DiagramBuilder
from .diagram_products import CyclicGroup, IntGroup, LabeledDiagram
from .graphs import make_graph
from .presentations import commuting_presentation, make_presentation


def random_presentation(rng, max_letters=4, max_relations=3, max_side=3):
    """A small valid semigroup presentation."""
    while True:
        n = rng.randint(2, max_letters)
        names = list(string.ascii_lowercase[:n])
        rels = []
        for _ in range(rng.randint(1, max_relations)):
            lhs = " ".join(rng.choice(names)
                           for _ in range(rng.randint(1, max_side)))
            rhs = " ".join(rng.choice(names)
                           for _ in range(rng.randint(1, max_side)))
            rels.append((lhs, rhs))
        try:
            return make_presentation(names, rels)
        except DiagrammaError:
            continue


def random_word(rng, P, lo=1, hi=6):
    """A word biased to contain a relation side, so diagrams can grow."""
    side = list(rng.choice(rng.choice(P.relations)))
    extra = [rng.randrange(P.letter_count) for _ in range(rng.randint(lo, hi))]
    w = side + extra if rng.random() < 0.8 else extra
    cut = rng.randint(lo, max(lo, min(hi, len(w))))
    return tuple(w[:cut]) if w[:cut] else (rng.randrange(P.letter_count),)


def _contiguous_moves(P, dangle):
    moves = []
    for rid, rel in enumerate(P.relations):
        for fwd, top in ((True, rel.lhs), (False, rel.rhs)):
            k = len(top)
            for i in range(len(dangle) - k + 1):
                if dangle[i:i + k] == top:
                    moves.append((rid, fwd, i, k))
    return moves


def random_diagram(rng, P, w=None, steps=6):
    """Grow a diagram from w by random relation applications."""
    w = random_word(rng, P) if w is None else tuple(w)
    b = DiagramBuilder(P, w)
    for _ in range(steps):
        moves = _contiguous_moves(P, b.dangling)
        if not moves:
            break
        rid, fwd, i, k = rng.choice(moves)
        b.apply(list(range(i, i + k)), rid, fwd)
    return b.finish()


def letter_preserving_permutation(rng, P, w):
    """A permutation diagram that shuffles positions within letter classes,
    so top and bottom words coincide."""
    w = tuple(w)
    by_letter = {}
    for i, x in enumerate(w):
        by_letter.setdefault(x, []).append(i)
    sigma = [0] * len(w)
    for spots in by_letter.values():
        tgt = spots[:]
        rng.shuffle(tgt)
        for i, j in zip(spots, tgt):
            sigma[i] = j
    return dg.permutation_diagram(P, w, sigma)


def random_ww_diagram(rng, P, w, terms=2, steps=4):
    """A (w, w)-diagram: a product of conjugated shuffles A∘B∘A⁻¹ and plain
    letter-preserving shuffles of w."""
    w = tuple(w)
    D = dg.identity_diagram(P, w)
    for _ in range(terms):
        if rng.random() < 0.3:
            D = dg.concatenate(D, letter_preserving_permutation(rng, P, w))
            continue
        A = random_diagram(rng, P, w, steps=rng.randint(0, steps))
        B = letter_preserving_permutation(rng, P, A.bot)
        D = dg.concatenate(D, dg.concatenate(A, dg.concatenate(B, dg.inverse(A))))
    return D


def random_groups(rng, P):
    """Per-letter groups, a mix of the integers and small cyclic groups."""
    return tuple(IntGroup() if rng.random() < 0.6 else CyclicGroup(rng.randint(2, 6))
                 for _ in range(P.letter_count))


def random_labels(rng, D, groups, span=3):
    return {u: rng.randint(-span, span)
            if isinstance(groups[D.letter_at_upper(u)], IntGroup)
            else rng.randrange(groups[D.letter_at_upper(u)].order)
            for u in D.wires}


def random_labeled_diagram(rng, P, groups=None, w=None, steps=5):
    D = random_diagram(rng, P, w=w, steps=steps)
    groups = (IntGroup(),) * P.letter_count if groups is None else groups
    return LabeledDiagram(D, groups, random_labels(rng, D, groups))


def random_graph(rng, n, p=0.5):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return make_graph(n, edges)


def random_gp_word(rng, ctx, max_syllables=8, span=3):
    sylls = []
    for _ in range(rng.randint(0, max_syllables)):
        v = rng.randrange(ctx.graph.n)
        g = ctx.groups[v]
        e = rng.randint(-span, span) if isinstance(g, IntGroup) \
            else rng.randrange(getattr(g, "order", 2))
        sylls.append((v, e))
    return gp.make_gp_word(ctx, [(v, e) for v, e in sylls
                                 if not ctx.groups[v].is_identity(e)])


def _random_element(rng, grp):
    if isinstance(grp, IntGroup):
        return rng.randint(-3, 3)
    if isinstance(grp, CyclicGroup):
        return rng.randrange(grp.order)
    return grp.identity()


def shuffle_gp_word(rng, w, ops=6):
    """Rewrite a word into a different one representing the same element:
    swap adjacent commuting syllables, split or merge syllables, insert
    cancelling pairs."""
    ctx = w.context
    s = list(w.syllables)
    for _ in range(ops):
        kind = rng.randrange(4)
        if kind == 0 and len(s) >= 2:
            i = rng.randrange(len(s) - 1)
            if s[i][0] != s[i + 1][0] and ctx.graph.adjacent(s[i][0], s[i + 1][0]):
                s[i], s[i + 1] = s[i + 1], s[i]
        elif kind == 1 and s:
            i = rng.randrange(len(s))
            v, e = s[i]
            grp = ctx.groups[v]
            a = _random_element(rng, grp)
            parts = [(v, a), (v, grp.multiply(grp.invert(a), e))]
            s[i:i + 1] = [p for p in parts if not grp.is_identity(p[1])]
        elif kind == 2:
            v = rng.randrange(ctx.graph.n)
            grp = ctx.groups[v]
            a = _random_element(rng, grp)
            if not grp.is_identity(a):
                i = rng.randrange(len(s) + 1)
                s[i:i] = [(v, a), (v, grp.invert(a))]
        elif kind == 3 and len(s) >= 2:
            i = rng.randrange(len(s) - 1)
            if s[i][0] == s[i + 1][0]:
                v = s[i][0]
                grp = ctx.groups[v]
                e = grp.multiply(s[i][1], s[i + 1][1])
                s[i:i + 2] = [] if grp.is_identity(e) else [(v, e)]
    return gp.make_gp_word(ctx, s)


def random_lambda_word(rng, n, max_len=10):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return [(i, j, rng.choice((1, -1)))
            for i, j in (rng.choice(pairs)
                         for _ in range(rng.randint(0, max_len)))]
