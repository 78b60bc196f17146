"""Named property suites behind ``diagramma suite`` and the acceptance tests.

Each suite draws its instances from a seeded generator, checks one batch of
properties per sample, and reports pass/fail counts with a note on the
first few failures. Samples are generated and checked in index order, so a
(seed, count) pair always reproduces the same run.
"""
from __future__ import annotations

import random
import time

from . import diagrams as dg
from . import diagram_products as dp
from . import graph_products as gp
from . import pvt
from . import sampling as sm
from .errors import OracleMismatch
from .graphs import realize_as_disjointness


class SuiteResult(dict):
    @property
    def ok(self):
        return self["fail"] == 0

    def lines(self):
        out = ["suite: %s" % self["suite"],
               "seed: %d" % self["seed"],
               "%d/%d pass" % (self["pass"], self["count"]),
               "seconds: %.2f" % self["seconds"]]
        out.extend("fail[%d]: %s" % (i, msg) for i, msg in self["failures"])
        return out


def _run(name, seed, count, sample_check):
    rng = random.Random(seed)
    failures = []
    t0 = time.time()
    for i in range(count):
        try:
            msg = sample_check(rng)
        except OracleMismatch as e:
            msg = str(e)
        if msg is not None and len(failures) < 10:
            failures.append((i, msg))
        elif msg is not None:
            failures.append((i, "..."))
            break
    dt = time.time() - t0
    nfail = len(failures)
    return SuiteResult(suite=name, seed=seed, count=count,
                       **{"pass": count - nfail},
                       fail=nfail, seconds=dt, failures=failures)


def suite_confluence(seed=7, count=500):
    """Random diagrams, two independently seeded reduction orders, equal
    canonical codes and no leftover dipoles."""
    master = random.Random(seed)
    presentations = [sm.random_presentation(master) for _ in range(5)]
    idx = [0]

    def check(rng):
        P = presentations[idx[0] % len(presentations)]
        idx[0] += 1
        D = sm.random_diagram(rng, P, steps=rng.randint(0, 8))
        r = rng.random()
        if r < 0.35:
            D = dg.concatenate(D, dg.inverse(D))
        elif r < 0.6:
            D = dg.concatenate(D, sm.random_diagram(rng, P, D.bot,
                                                    steps=rng.randint(0, 6)))
        r1 = dg.reduce(D, rng=random.Random(rng.randrange(2 ** 30)))
        r2 = dg.reduce(D, rng=random.Random(rng.randrange(2 ** 30)))
        if dg.find_dipoles(r1) or dg.find_dipoles(r2):
            return "reduction left dipoles behind"
        if dg.canonical_form(r1) != dg.canonical_form(r2):
            return "two reduction orders disagree"
        return None

    return _run("confluence", seed, count, check)


def suite_group_laws(seed=7, count=200):
    """Associativity, identity, inverses, and the anti-homomorphism law for
    inversion, modulo dipoles, on random (w, w)-diagrams."""
    def check(rng):
        P = sm.random_presentation(rng)
        w = sm.random_word(rng, P, 1, 4)
        A = sm.random_ww_diagram(rng, P, w)
        B = sm.random_ww_diagram(rng, P, w)
        C = sm.random_ww_diagram(rng, P, w)
        E = dg.identity_diagram(P, w)
        cat = dg.concatenate
        if dg.canonical_form(dg.reduce(cat(cat(A, B), C))) != \
           dg.canonical_form(dg.reduce(cat(A, cat(B, C)))):
            return "associativity failed"
        if not dg.is_trivial(cat(A, dg.inverse(A))):
            return "right inverse failed"
        if not dg.is_trivial(cat(dg.inverse(A), A)):
            return "left inverse failed"
        if not dg.equivalent_mod_dipoles(cat(E, A), A) or \
           not dg.equivalent_mod_dipoles(cat(A, E), A):
            return "identity law failed"
        if dg.canonical_form(dg.reduce(dg.inverse(cat(A, B)))) != \
           dg.canonical_form(dg.reduce(cat(dg.inverse(B), dg.inverse(A)))):
            return "inversion anti-homomorphism failed"
        return None

    return _run("group-laws", seed, count, check)


def suite_theta_roundtrip(seed=7, count=300):
    """Gadget embedding: equality of words matches equivalence of images,
    the reduced image has two transistors per reduced syllable, and peeling
    recovers the word."""
    def check(rng):
        G = sm.random_graph(rng, rng.randint(1, 6))
        fam, _ = realize_as_disjointness(G)
        ctx = gp.theta_context(fam)
        w1 = sm.random_gp_word(rng, ctx, max_syllables=8)
        L1 = gp.theta(ctx, w1)
        nf = gp.gp_normal_form(w1)
        R1 = dp.reduce_labeled(L1)
        if len(R1.diagram.transistors) != 2 * len(nf.syllables):
            return "reduced image size is not twice the syllable count"
        back = gp.theta_inverse(ctx, R1)
        if not gp.gp_equal(w1, back):
            return "peeling returned a different element"
        w2 = sm.shuffle_gp_word(rng, w1) if rng.random() < 0.5 \
            else sm.random_gp_word(rng, ctx, max_syllables=8)
        same_words = gp.gp_equal(w1, w2)
        same_diagrams = dp.equivalent_mod_dipoles_labeled(L1, gp.theta(ctx, w2))
        if same_words != same_diagrams:
            return "word equality and diagram equivalence disagree"
        return None

    return _run("theta-roundtrip", seed, count, check)


def suite_pvt_oracle(seed=7, count=500):
    """Random lambda words: triviality via diagram reduction must agree
    with the normal form over the disjointness graph (checked inside
    lambda_is_trivial, which raises on mismatch)."""
    def check(rng):
        n = rng.randint(2, 5)
        L = sm.random_lambda_word(rng, n, max_len=10)
        pvt.lambda_is_trivial(n, L)
        if rng.random() < 0.3:
            L2 = sm.random_lambda_word(rng, n, max_len=6)
            pvt.lambda_equivalent(n, L, L2)
        return None

    return _run("pvt-oracle", seed, count, check)


SUITES = {
    "confluence": suite_confluence,
    "group-laws": suite_group_laws,
    "theta-roundtrip": suite_theta_roundtrip,
    "pvt-oracle": suite_pvt_oracle,
}
