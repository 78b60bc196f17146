"""Trading wire labels for transistors.

Integer-labeled diagrams over a presentation P embed into plain diagrams
over the extension Q, which adds letters ``a_s, b_s, c_s`` and relations
``s=a_s, a_s=b_s, b_s=c_s, c_s=s`` for every letter s. A wire carrying k on
letter s becomes the chain M_s(k): k downward loops through
``s -> a_s -> b_s -> c_s -> s`` when k > 0, the mirrored upward loops when
k < 0, and the bare wire when k = 0, so M_s(k) has 4|k| transistors. The
new letters appear nowhere else, so chains neither cancel internally nor
against the original structure: expanding a reduced diagram yields a
reduced diagram. Conversely the non-original transistors of any reduced
diagram over Q with base-letter frames split into maximal single-wire
chains that wind monotonically, and collapsing each chain back to a labeled
wire inverts the expansion. Composing with the gadget embedding of a graph
product realizes any finitely generated right-angled Artin group inside the
diagram group of Q over the strand word.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import InterfaceMismatch, MalformedGadget, OutOfRange
from . import diagrams as dg
from . import diagram_products as dp
from . import graph_products as gp
from .diagrams import Diagram, DiagramBuilder, Transistor
from .diagram_products import IntGroup, LabeledDiagram
from .graphs import realize_as_disjointness
from .presentations import combination_presentation


class QContext(NamedTuple):
    base: object  # SemigroupPresentation
    q: object

    def a_id(self, s):
        return self.base.letter_count + 3 * s

    def b_id(self, s):
        return self.base.letter_count + 3 * s + 1

    def c_id(self, s):
        return self.base.letter_count + 3 * s + 2

    def loop_rels(self, s):
        """Relation ids (s=a_s, a_s=b_s, b_s=c_s, c_s=s)."""
        r0 = len(self.base.relations) + 4 * s
        return (r0, r0 + 1, r0 + 2, r0 + 3)

    def rel_info(self, rid):
        """None for an original relation, else (letter, step in the loop)."""
        n = len(self.base.relations)
        if rid < n:
            return None
        s, j = divmod(rid - n, 4)
        return (s, j)


def q_context(P):
    return QContext(P, combination_presentation(P))


def m_gadget(qctx, s, k):
    """The (s, s)-diagram M_s(k) over Q: 4|k| chained transistors."""
    Q = qctx.q
    if not 0 <= s < qctx.base.letter_count:
        raise OutOfRange("letter id %r out of range" % (s,))
    if k == 0:
        return dg.identity_diagram(Q, (s,))
    r_sa, r_ab, r_bc, r_cs = qctx.loop_rels(s)
    b = DiagramBuilder(Q, (s,))
    for _ in range(abs(k)):
        if k > 0:
            for r in (r_sa, r_ab, r_bc, r_cs):
                b.apply([0], r, True)
        else:
            for r in (r_cs, r_bc, r_ab, r_sa):
                b.apply([0], r, False)
    return b.finish()


def expand(qctx, L):
    """Replace every wire of an integer-labeled diagram over the base
    presentation by its chain over Q. Transistor ids of the original are
    preserved; chains are appended in upper-port order."""
    D = L.diagram
    if D.presentation != qctx.base:
        raise InterfaceMismatch("labeled diagram does not live over the base presentation")
    transistors = list(D.transistors)
    wires = {}
    for u in sorted(D.wires, key=dg._wire_sort_key):
        l = D.wires[u]
        k = L.labels[u]
        if not isinstance(k, int) or isinstance(k, bool):
            raise InterfaceMismatch("expansion needs integer wire labels, got %r" % (k,))
        if k == 0:
            wires[u] = l
            continue
        s = D.letter_at_upper(u)
        r_sa, r_ab, r_bc, r_cs = qctx.loop_rels(s)
        if k > 0:
            steps = [(r_sa, True), (r_ab, True), (r_bc, True), (r_cs, True)] * k
        else:
            steps = [(r_cs, False), (r_bc, False), (r_ab, False), (r_sa, False)] * (-k)
        prev = u
        for rel, fwd in steps:
            t = len(transistors)
            transistors.append(Transistor(rel, fwd))
            wires[prev] = ("TT", t, 0)
            prev = ("TB", t, 0)
        wires[prev] = l
    return Diagram(qctx.q, D.top, D.bot, transistors, wires)


def collapse(qctx, D):
    """Invert ``expand`` on a reduced diagram over Q.

    Non-original transistors are all arity one on both sides; following
    their single wires downward groups them into maximal chains. In a
    reduced diagram a chain winds monotonically through one letter's loop,
    forward or backward, so its length is 4|k|; the chain becomes a wire
    labeled k. Anything off this pattern raises MalformedGadget.
    """
    if D.presentation != qctx.q:
        raise InterfaceMismatch("diagram does not live over the extension presentation")
    nLet = qctx.base.letter_count
    nRel = len(qctx.base.relations)
    for x in D.top + D.bot:
        if x >= nLet:
            raise MalformedGadget("frame words must use base letters only")
    if dg.find_dipoles(D):
        raise MalformedGadget("collapse requires a reduced diagram")
    gadget = {t for t in range(len(D.transistors)) if D.transistors[t].rel >= nRel}
    orig = [t for t in range(len(D.transistors)) if t not in gadget]
    id_map = {t: i for i, t in enumerate(orig)}

    def remap(p):
        return p if len(p) == 2 else (p[0], id_map[p[1]], p[2])

    heads = []
    nxt = {}
    for t in gadget:
        low = D.wires[("TB", t, 0)]
        nxt[t] = low[1] if low[0] == "TT" and low[1] in gadget else None
        up = D.upper_of(("TT", t, 0))
        if not (up[0] == "TB" and up[1] in gadget):
            heads.append(t)
    wires = {}
    labels = {}
    for u, l in D.wires.items():
        if u[0] == "TB" and u[1] in gadget:
            continue
        if l[0] == "TT" and l[1] in gadget:
            continue
        wires[remap(u)] = remap(l)
        labels[remap(u)] = 0
    seen = 0
    for h in sorted(heads):
        seq = [h]
        while nxt[seq[-1]] is not None:
            seq.append(nxt[seq[-1]])
        seen += len(seq)
        infos = [qctx.rel_info(D.transistors[t].rel) for t in seq]
        dirs = {D.transistors[t].forward for t in seq}
        letters = {s for s, _ in infos}
        if len(seq) % 4 or len(dirs) != 1 or len(letters) != 1:
            raise MalformedGadget("chain at transistor %d is not a loop power" % h)
        forward = dirs.pop()
        want = (lambda i: i % 4) if forward else (lambda i: 3 - i % 4)
        if any(j != want(i) for i, (_, j) in enumerate(infos)):
            raise MalformedGadget("chain at transistor %d winds inconsistently" % h)
        k = len(seq) // 4
        entry_u = D.upper_of(("TT", h, 0))
        exit_l = D.wires[("TB", seq[-1], 0)]
        wires[remap(entry_u)] = remap(exit_l)
        labels[remap(entry_u)] = k if forward else -k
    if seen != len(gadget):
        raise MalformedGadget("some loop transistors lie outside every chain")
    trans = tuple(D.transistors[t] for t in orig)
    out = Diagram(qctx.base, D.top, D.bot, trans, wires)
    return LabeledDiagram(out, (IntGroup(),) * nLet, labels)


# -- right-angled Artin groups ----------------------------------------------------

class RaagEmbedding(NamedTuple):
    gp_ctx: object
    q_ctx: object
    vertex_map: list


def raag_embedding(G):
    """Everything needed to map words over G's right-angled Artin group to
    diagrams: realize G as a disjointness graph, take the gadget context
    over the subset presentation, and extend that presentation for the
    final unlabeled image."""
    fam, vmap = realize_as_disjointness(G)
    ctx = gp.theta_context(fam)
    return RaagEmbedding(ctx, q_context(ctx.presentation), vmap)


def raag_to_diagram_group(G, syllables, embedding=None):
    """Image of a word (list of (vertex, exponent) pairs) as a plain diagram
    over the extension of the realization's presentation."""
    emb = embedding if embedding is not None else raag_embedding(G)
    w = gp.make_gp_word(emb.gp_ctx,
                        [(emb.vertex_map[v], e) for v, e in syllables])
    return expand(emb.q_ctx, gp.theta(emb.gp_ctx, w))
