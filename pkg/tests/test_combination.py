import random

import pytest

from diagramma.errors import InterfaceMismatch, MalformedGadget
from diagramma import combination as cb
from diagramma import diagrams as dg
from diagramma import diagram_products as dp
from diagramma import graph_products as gp
from diagramma import sampling as sm
from diagramma.diagram_products import (
    IntGroup, LabeledDiagram, canonical_form_labeled, concatenate_labeled,
    reduce_labeled,
)
from diagramma.graphs import make_graph
from diagramma.presentations import commuting_presentation, make_presentation

P2 = commuting_presentation(2)
QC = cb.q_context(P2)


def test_q_context_layout():
    assert QC.a_id(0) == 2 and QC.c_id(1) == 7
    assert QC.loop_rels(0) == (1, 2, 3, 4)
    assert QC.loop_rels(1) == (5, 6, 7, 8)
    assert QC.rel_info(0) is None
    assert QC.rel_info(3) == (0, 2)
    assert QC.rel_info(8) == (1, 3)
    Q = QC.q
    assert Q.relation_str(1) == "x1 = a_x1"
    assert Q.relation_str(4) == "c_x1 = x1"


def test_m_gadget_sizes_and_laws():
    for k in (0, 1, 2, -1, -3):
        M = cb.m_gadget(QC, 1, k)
        assert len(M.transistors) == 4 * abs(k)
        assert M.top == M.bot == (1,)
        assert not dg.find_dipoles(M)
    for k in (1, 2):
        assert dg.canonical_form(cb.m_gadget(QC, 0, -k)) == \
            dg.canonical_form(dg.inverse(cb.m_gadget(QC, 0, k)))
    for k, l in ((1, 1), (2, -1), (-1, -2), (2, -2)):
        prod = dg.reduce(dg.concatenate(cb.m_gadget(QC, 0, k),
                                        cb.m_gadget(QC, 0, l)))
        assert dg.canonical_form(prod) == \
            dg.canonical_form(cb.m_gadget(QC, 0, k + l))


def rand_labeled(rnd, steps=5):
    groups = (IntGroup(),) * 2
    D = sm.random_diagram(rnd, P2, steps=rnd.randint(0, steps))
    return LabeledDiagram(D, groups, {u: rnd.randint(-3, 3) for u in D.wires})


def test_expand_collapse_round_trip():
    rnd = random.Random(20)
    for _ in range(80):
        L = reduce_labeled(rand_labeled(rnd))
        E = cb.expand(QC, L)
        assert not dg.find_dipoles(E)
        back = cb.collapse(QC, E)
        assert back.diagram == L.diagram
        assert canonical_form_labeled(back) == canonical_form_labeled(L)


def test_expand_is_homomorphism():
    rnd = random.Random(21)
    for _ in range(40):
        L1 = rand_labeled(rnd)
        D2 = sm.random_diagram(rnd, P2, w=L1.diagram.bot,
                               steps=rnd.randint(0, 4))
        L2 = LabeledDiagram(D2, L1.groups,
                            {u: rnd.randint(-3, 3) for u in D2.wires})
        lhs = dg.reduce(cb.expand(QC, reduce_labeled(concatenate_labeled(L1, L2))))
        rhs = dg.reduce(dg.concatenate(cb.expand(QC, L1), cb.expand(QC, L2)))
        assert dg.canonical_form(lhs) == dg.canonical_form(rhs)


def test_expand_injective_on_canonical_forms():
    rnd = random.Random(22)
    seen = {}
    for _ in range(120):
        L = reduce_labeled(rand_labeled(rnd))
        key = canonical_form_labeled(L)
        code = dg.canonical_form(cb.expand(QC, L))
        if key in seen:
            assert seen[key] == code
        else:
            assert code not in seen.values()
            seen[key] = code


def test_collapse_rejections():
    has_dipole = dg.concatenate(cb.m_gadget(QC, 0, 1), cb.m_gadget(QC, 0, -1))
    with pytest.raises(MalformedGadget):
        cb.collapse(QC, has_dipole)
    bad_frame = dg.identity_diagram(QC.q, (QC.a_id(0),))
    with pytest.raises(MalformedGadget):
        cb.collapse(QC, bad_frame)
    with pytest.raises(InterfaceMismatch):
        cb.collapse(QC, dg.identity_diagram(P2, (0,)))
    with pytest.raises(InterfaceMismatch):
        cb.expand(QC, LabeledDiagram(dg.identity_diagram(QC.q, (0,)),
                                     (IntGroup(),) * QC.q.letter_count, None))


def test_raag_image_sizes():
    # one edge: the image of a single generator needs 2 + 4 transistors
    G = make_graph(2, [(0, 1)])
    emb = cb.raag_embedding(G)
    D = cb.raag_to_diagram_group(G, [(0, 1)], emb)
    assert len(D.transistors) == 6
    assert len(dg.reduce(D).transistors) == 6
    assert not dg.is_trivial(D)


def test_raag_pipeline_matches_normal_form():
    rnd = random.Random(23)
    for _ in range(60):
        G = sm.random_graph(rnd, rnd.randint(1, 5))
        ctx = gp.gp_context(G)
        w = sm.random_gp_word(rnd, ctx, max_syllables=6)
        emb = cb.raag_embedding(G)
        D = cb.raag_to_diagram_group(G, list(w.syllables), emb)
        assert dg.is_trivial(D) == gp.gp_is_trivial(w)


def test_raag_commutation_matches_edges():
    G = make_graph(3, [(0, 1)])
    emb = cb.raag_embedding(G)
    def img(s):
        return cb.raag_to_diagram_group(G, s, emb)
    assert dg.equivalent_mod_dipoles(img([(0, 1), (1, 1)]), img([(1, 1), (0, 1)]))
    assert not dg.equivalent_mod_dipoles(img([(0, 1), (2, 1)]), img([(2, 1), (0, 1)]))
    assert dg.is_trivial(img([(0, 1), (2, 2), (2, -2), (0, -1)]))
