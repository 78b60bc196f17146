"""Graph products of groups and their labeled-diagram model.

A graph product assigns a group to each vertex of a finite simple graph;
elements of adjacent vertex groups commute and nothing else is imposed.
Words are sequences of syllables (vertex, element). Three moves preserve
the element: dropping an identity syllable, merging two syllables at the
same vertex when every syllable between them sits at an adjacent vertex,
and swapping neighbouring syllables at adjacent vertices. Words admitting
no drop or merge are graphically reduced and unique up to swaps, so the
chosen normal form is the swap-class linearization that greedily emits the
smallest available vertex first.

The embedding theta sends the graph product over the disjointness graph of
a subset family C to labeled diagrams over the presentation
``<x1..xn, a_I | x_i1 .. x_ik = a_I>``: a syllable (I, g) becomes the
two-transistor gadget that gathers the wires of I into one a_I wire
carrying g and immediately spreads them back. Images of reduced m-syllable
words reduce to diagrams with exactly 2m transistors, and peeling gadgets
off the top inverts the embedding.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    IdentityElement,
    InterfaceMismatch,
    NoThetaContext,
    NotInImage,
    OutOfRange,
    ParseError,
)
from . import diagrams as dg
from . import diagram_products as dp
from .diagram_products import IntGroup, LabeledDiagram, TrivialGroup
from .graphs import SimpleGraph, SubsetFamily, disjointness_graph
from .presentations import graph_product_presentation


@dataclass(frozen=True)
class GPContext:
    graph: SimpleGraph
    groups: tuple  # one GroupHandle per vertex
    family: SubsetFamily = None
    presentation: object = None
    hgroups: tuple = None  # per letter of the presentation

    @property
    def base_word(self):
        return tuple(range(self.family.n))


def gp_context(graph, groups=None):
    if groups is None:
        groups = (IntGroup(),) * graph.n
    groups = tuple(groups)
    if len(groups) != graph.n:
        raise OutOfRange("need one group per vertex")
    return GPContext(graph, groups)


def theta_context(family, groups=None):
    """Context over the disjointness graph of a subset family, carrying the
    presentation and letter groups needed by theta: trivial groups on the
    strand letters x_i, the vertex group on each a_I."""
    graph = disjointness_graph(family)
    if groups is None:
        groups = (IntGroup(),) * graph.n
    groups = tuple(groups)
    if len(groups) != graph.n:
        raise OutOfRange("need one group per vertex")
    P = graph_product_presentation(family.n, family.sets)
    hgroups = (TrivialGroup(),) * family.n + groups
    return GPContext(graph, groups, family, P, hgroups)


@dataclass(frozen=True)
class GPWord:
    context: GPContext
    syllables: tuple  # of (vertex id, element)


def make_gp_word(ctx, syllables):
    syl = []
    for v, g in syllables:
        if not 0 <= v < ctx.graph.n:
            raise OutOfRange("vertex %r out of range" % (v,))
        if not ctx.groups[v].contains(g):
            raise OutOfRange("element %r not in the group of vertex %d" % (g, v))
        syl.append((v, g))
    return GPWord(ctx, tuple(syl))


def gp_word_str(w):
    parts = []
    for v, g in w.syllables:
        s = w.context.groups[v].to_str(g)
        parts.append("v%d" % v if s == "1" else "v%d^%s" % (v, s))
    return " ".join(parts)


def parse_gp_word(ctx, text):
    """Tokens ``v<id>^<exp>`` separated by spaces; a bare ``v<id>`` means
    exponent 1. The empty string is the empty word."""
    syl = []
    for tok in text.split():
        if not tok.startswith("v"):
            raise ParseError("bad syllable %r" % tok)
        body, _, exp = tok.partition("^")
        if not exp:
            exp = "1"
        try:
            v = int(body[1:])
        except ValueError:
            raise ParseError("bad syllable %r" % tok) from None
        if not 0 <= v < ctx.graph.n:
            raise ParseError("vertex %d out of range in %r" % (v, tok))
        syl.append((v, ctx.groups[v].from_str(exp)))
    return make_gp_word(ctx, syl)


# -- normal form --------------------------------------------------------------------

def _merge_pass(ctx, syl):
    """Apply one drop or merge if any applies; True when something changed."""
    adj = ctx.graph.adjacent
    for i, (v, g) in enumerate(syl):
        if ctx.groups[v].is_identity(g):
            del syl[i]
            return True
        for k in range(i + 1, len(syl)):
            u = syl[k][0]
            if u == v:
                merged = ctx.groups[v].multiply(g, syl[k][1])
                del syl[k]
                if ctx.groups[v].is_identity(merged):
                    del syl[i]
                else:
                    syl[i] = (v, merged)
                return True
            if not adj(u, v):
                break
    return False


def _linearize(ctx, syl):
    """Greedy smallest-vertex-first linearization of a reduced word's swap
    class; ties keep original position, though reduced words never tie."""
    adj = ctx.graph.adjacent
    rest = list(syl)
    out = []
    while rest:
        best = None
        for i, (v, _) in enumerate(rest):
            if all(adj(u, v) for u, _ in rest[:i]):
                if best is None or v < rest[best][0]:
                    best = i
        out.append(rest.pop(best))
    return out


def gp_normal_form(w):
    syl = list(w.syllables)
    while _merge_pass(w.context, syl):
        pass
    return GPWord(w.context, tuple(_linearize(w.context, syl)))


def _check_same_context(w1, w2):
    c1, c2 = w1.context, w2.context
    if c1.graph != c2.graph or c1.groups != c2.groups:
        raise InterfaceMismatch("words live over different graph products")


def gp_concat(w1, w2):
    _check_same_context(w1, w2)
    return GPWord(w1.context, w1.syllables + w2.syllables)


def gp_inverse(w):
    ctx = w.context
    syl = tuple((v, ctx.groups[v].invert(g)) for v, g in reversed(w.syllables))
    return GPWord(ctx, syl)


def gp_equal(w1, w2):
    _check_same_context(w1, w2)
    n1 = gp_normal_form(w1).syllables
    n2 = gp_normal_form(w2).syllables
    if len(n1) != len(n2):
        return False
    groups = w1.context.groups
    return all(v1 == v2 and groups[v1].equals(g1, g2)
               for (v1, g1), (v2, g2) in zip(n1, n2))


def gp_is_trivial(w):
    return not gp_normal_form(w).syllables


# -- the embedding -------------------------------------------------------------------

def theta_vertex(ctx, v, g):
    """Gadget for one syllable: gather the strands of the vertex's subset
    into a single a_I wire labeled g, then spread them back in place."""
    if ctx.family is None:
        raise NoThetaContext("context was not built from a subset family")
    if not 0 <= v < ctx.graph.n:
        raise OutOfRange("vertex %r out of range" % (v,))
    if not ctx.groups[v].contains(g):
        raise OutOfRange("element %r not in the group of vertex %d" % (g, v))
    if ctx.groups[v].is_identity(g):
        raise IdentityElement("gadgets require a nontrivial element")
    members = sorted(ctx.family.sets[v])
    positions = [i - 1 for i in members]
    n = ctx.family.n
    b = dg.DiagramBuilder(ctx.presentation, ctx.base_word)
    targets = list(range(n))
    m = min(positions)
    consumed = set(positions)
    mid = b.apply(positions, v, True)
    targets = targets[:m] + [None] + [t for i, t in enumerate(targets)
                                      if i > m and i not in consumed]
    b.apply([mid[0]], v, False)
    targets = targets[:m] + positions + targets[m + 1:]
    D = b.finish(targets)
    labels = {u: ctx.hgroups[D.letter_at_upper(u)].identity() for u in D.wires}
    labels[("TB", 0, 0)] = g
    return LabeledDiagram(D, ctx.hgroups, labels)


def theta(ctx, w):
    """Image of a word: concatenation of its syllable gadgets, identity
    syllables contributing nothing."""
    if isinstance(w, GPWord):
        w = w.syllables
    if ctx.family is None:
        raise NoThetaContext("context was not built from a subset family")
    out = dp.labeled_identity(ctx.presentation, ctx.hgroups, ctx.base_word)
    for v, g in w:
        if ctx.groups[v].is_identity(g):
            continue
        out = dp.concatenate_labeled(out, theta_vertex(ctx, v, g))
    return out


def _peelable(ctx, L):
    """A forward gadget transistor all of whose top wires hang from the
    frame top, or None."""
    D = L.diagram
    for t, tr in enumerate(D.transistors):
        if not tr.forward:
            continue
        arity = len(D.trans_top_word(t))
        if all(D.upper_of(("TT", t, i))[0] == "FT" for i in range(arity)):
            return t
    return None


def theta_inverse(ctx, L):
    """Recover the word from a labeled (w, w)-diagram in the image of theta.

    Reduce, then repeatedly strip the top gadget: a forward transistor fed
    straight from the frame top must pass its a_I wire, carrying some g, to
    the matching backward transistor; prepending (I, g) and cancelling its
    gadget peels two transistors. Anything that blocks this pattern is not
    in the image.
    """
    if ctx.family is None:
        raise NoThetaContext("context was not built from a subset family")
    D = L.diagram
    if D.presentation != ctx.presentation or L.groups != ctx.hgroups:
        raise NotInImage("diagram does not live over the theta presentation")
    if D.top != ctx.base_word or D.bot != ctx.base_word:
        raise NotInImage("frame words must both equal x1 .. xn")
    L = dp.reduce_labeled(L)
    syllables = []
    while True:
        D = L.diagram
        if not D.transistors:
            ident = dp.labeled_identity(ctx.presentation, ctx.hgroups, ctx.base_word)
            if dp.canonical_form_labeled(L) != dp.canonical_form_labeled(ident):
                raise NotInImage("transistor-free remainder is not the identity")
            return GPWord(ctx, tuple(syllables))
        t = _peelable(ctx, L)
        if t is None:
            raise NotInImage("no gadget hangs from the frame top")
        v = D.transistors[t].rel
        g = L.labels[("TB", t, 0)]
        if ctx.groups[v].is_identity(g):
            raise NotInImage("gadget wire carries the identity in a reduced diagram")
        syllables.append((v, g))
        before = len(D.transistors)
        gadget = theta_vertex(ctx, v, g)
        L = dp.reduce_labeled(dp.concatenate_labeled(dp.inverse_labeled(gadget), L))
        if len(L.diagram.transistors) >= before:
            raise NotInImage("peeling failed to shrink the diagram")
