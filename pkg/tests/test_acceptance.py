"""End-to-end acceptance checks.

Each test exercises one headline guarantee at full scale, prints a single
PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s`` to see
them), and enforces a wall-clock budget.
"""
import itertools
import random
import time

from diagramma import combination as cb
from diagramma import diagrams as dg
from diagramma import graph_products as gp
from diagramma import pvt
from diagramma import sampling as sm
from diagramma import suites
from diagramma.diagram_products import (
    IntGroup, LabeledDiagram, canonical_form_labeled, concatenate_labeled,
    reduce_labeled,
)
from diagramma.graphs import (
    find_induced_odd_cycle_ge5, make_graph, opposite_graph, pair_index,
    pvt_graph, realize_as_disjointness, verify_induced_cycle,
)
from diagramma.presentations import make_presentation


def criterion(name, budget, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    in_budget = dt <= budget
    print("%s %s (%.2fs, budget %gs)" %
          ("PASS" if ok and in_budget else "FAIL", name, dt, budget))
    assert ok, "%s: %s" % (name, detail)
    assert in_budget, "%s took %.2fs, budget %gs" % (name, dt, budget)


def suite_criterion(name, budget, fn, count):
    def body():
        res = fn(seed=7, count=count)
        return res.ok, res["failures"]
    criterion(name, budget, body)


def test_confluence_500():
    suite_criterion("confluence, 500 random reductions", 10,
                    suites.suite_confluence, 500)


def test_group_axioms_200():
    suite_criterion("group axioms modulo dipoles, 200 triples", 10,
                    suites.suite_group_laws, 200)


def test_torsion_element():
    def body():
        P = make_presentation("x", [("x", "xx")])
        b = dg.DiagramBuilder(P, (0,))
        s = b.apply([0], 0, True)
        b.apply([s[1], s[0]], 0, False)
        sigma = b.finish([0])
        if dg.is_trivial(sigma):
            return False, "the crossed split-merge diagram collapsed"
        sq = dg.concatenate(sigma, sigma)
        if not dg.is_trivial(sq):
            return False, "its square is not trivial"
        return True, None
    criterion("order-2 element in the one-relation tree group", 1, body)


def test_theta_roundtrip_300():
    suite_criterion("gadget embedding round trip, 300 samples", 30,
                    suites.suite_theta_roundtrip, 300)


def test_combination_round_trip_300():
    def body():
        rnd = random.Random(7)
        failures = []
        for i in range(300):
            P = sm.random_presentation(rnd)
            qctx = cb.q_context(P)
            groups = (IntGroup(),) * P.letter_count
            def draw(w=None):
                D = sm.random_diagram(rnd, P, w=w, steps=rnd.randint(0, 6))
                return LabeledDiagram(D, groups,
                                      {u: rnd.randint(-3, 3) for u in D.wires})
            L1 = draw()
            R1 = reduce_labeled(L1)
            E1 = cb.expand(qctx, R1)
            back = cb.collapse(qctx, E1)
            if canonical_form_labeled(back) != canonical_form_labeled(R1):
                failures.append((i, "round trip changed the diagram"))
                continue
            L2 = draw(w=L1.diagram.bot)
            lhs = cb.expand(qctx, reduce_labeled(concatenate_labeled(L1, L2)))
            rhs = dg.concatenate(cb.expand(qctx, L1), cb.expand(qctx, L2))
            if not dg.equivalent_mod_dipoles(lhs, rhs):
                failures.append((i, "expand is not a homomorphism"))
        return not failures, failures[:5]
    criterion("labeled diagrams round-trip the extended presentation, "
              "300 samples", 30, body)


def test_disjointness_realization_200():
    def body():
        rnd = random.Random(7)
        fam, vmap = realize_as_disjointness(make_graph(2, []))
        if [sorted(s) for s in fam.sets] != [[1], [1, 2]]:
            return False, "two isolated vertices should realize as {1},{1,2}"
        for i in range(200):
            G = sm.random_graph(rnd, rnd.randint(1, 8))
            fam, vmap = realize_as_disjointness(G)
            for u in range(G.n):
                for v in range(u + 1, G.n):
                    disjoint = not (set(fam.sets[vmap[u]])
                                    & set(fam.sets[vmap[v]]))
                    if disjoint != G.adjacent(u, v):
                        return False, "sample %d: edge (%d,%d) mismatched" % (i, u, v)
        return True, None
    criterion("disjointness realization, 200 graphs <= 8 vertices", 10, body)


def test_pvt_relators_n_3_4_5():
    def body():
        for n in (3, 4, 5):
            bad = [name for name, ok in pvt.vt_relator_check(n) if not ok]
            if bad:
                return False, "n=%d: %s" % (n, bad)
        return True, None
    criterion("twin relators map to trivial diagrams, n in {3,4,5}", 5, body)


def test_pvt_oracle_500():
    def body():
        res = suites.suite_pvt_oracle(seed=7, count=500)
        if not res.ok:
            return False, res["failures"]
        for k in range(-5, 6):
            lword = [(1, 2, 1 if k >= 0 else -1)] * abs(k)
            if pvt.lambda_is_trivial(2, lword) != (k == 0):
                return False, "lambda_{1,2}^%d triviality is wrong" % k
        n = 4
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        for (a, b), (c, d) in itertools.combinations(pairs, 2):
            comm = [(a, b, 1), (c, d, 1), (a, b, -1), (c, d, -1)]
            if pvt.lambda_is_trivial(n, comm) != (not ({a, b} & {c, d})):
                return False, "commutator (%s,%s) wrong" % ((a, b), (c, d))
        return True, None
    criterion("twin words agree with the normal-form oracle, 500 samples", 60,
              body)


def test_planarity_obstruction():
    def body():
        for n in range(2, 8):
            cyc = find_induced_odd_cycle_ge5(pvt_graph(n))
            if (cyc is not None) != (n >= 5):
                return False, "n=%d: unexpected witness %r" % (n, cyc)
            if cyc is not None and not verify_induced_cycle(pvt_graph(n), cyc):
                return False, "n=%d: returned cycle is not induced" % n
        listed = [pair_index(5, i, j)
                  for i, j in ((1, 2), (2, 3), (3, 5), (4, 5), (1, 4))]
        if not verify_induced_cycle(opposite_graph(pvt_graph(5)), listed):
            return False, "explicit 5-cycle fails in the crossing graph"
        if not verify_induced_cycle(pvt_graph(5), [0, 8, 2, 4, 9]):
            return False, "explicit 5-cycle fails in the disjointness graph"
        return True, None
    criterion("induced odd cycle >= 5 in pvt_graph(n) iff n >= 5", 5, body)
