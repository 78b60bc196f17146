import itertools
import random

import pytest
from hypothesis import given, strategies as st

from diagramma.errors import IndexOrder, NotPure, OutOfRange, ParseError
from diagramma import diagrams as dg
from diagramma import pvt
from diagramma import sampling as sm


def test_parse_and_format_round_trip():
    w = pvt.parse_vt_word("s1 r2 s1 r3")
    assert w == [("s", 1), ("r", 2), ("s", 1), ("r", 3)]
    assert pvt.vt_word_str(w) == "s1 r2 s1 r3"
    lw = pvt.parse_lambda_word("L1,3 L2,4^-1 L1,3")
    assert lw == [(1, 3, 1), (2, 4, -1), (1, 3, 1)]
    assert pvt.lambda_word_str(lw) == "L1,3 L2,4^-1 L1,3"
    assert pvt.parse_vt_word("") == []


def test_parse_errors():
    with pytest.raises(ParseError):
        pvt.parse_vt_word("t1")
    with pytest.raises(ParseError):
        pvt.parse_vt_word("s")
    with pytest.raises(OutOfRange):
        pvt.parse_vt_word("s3", n=3)
    with pytest.raises(OutOfRange):
        pvt.parse_vt_word("r0")
    with pytest.raises(ParseError):
        pvt.parse_lambda_word("L1;3")
    with pytest.raises(IndexOrder):
        pvt.parse_lambda_word("L3,1")
    with pytest.raises(OutOfRange):
        pvt.parse_lambda_word("L1,5", n=4)
    with pytest.raises(IndexOrder):
        pvt.lambda_word(4, 3, 3)
    with pytest.raises(NotPure):
        pvt.vt_to_diagram(3, [("s", 1)])
    with pytest.raises(OutOfRange):
        pvt.vt_to_diagram(1, [])


def test_word_permutation():
    assert pvt.word_permutation(3, []) == (0, 1, 2)
    assert pvt.word_permutation(3, [("s", 1)]) == (1, 0, 2)
    assert pvt.word_permutation(3, [("r", 1), ("s", 2)]) == (1, 2, 0)
    assert pvt.is_pure(3, [("s", 1), ("r", 2)]) is False
    assert pvt.is_pure(3, [("s", 1), ("r", 1)]) is True


def test_lambda_word_expansions():
    assert pvt.lambda_word(4, 1, 2) == [("s", 1), ("r", 1)]
    assert pvt.lambda_word(3, 1, 3) == [("r", 2), ("s", 1), ("r", 1), ("r", 2)]
    assert pvt.lambda_word(4, 2, 4) == [("r", 3), ("s", 2), ("r", 2), ("r", 3)]
    for n, i, j in ((3, 1, 3), (4, 2, 4), (5, 1, 5)):
        assert pvt.is_pure(n, pvt.lambda_word(n, i, j))
    # involution: the expansion followed by its reverse is trivial
    assert pvt.vt_is_trivial(4, pvt.lambda_to_vt(4, [(2, 4, 1), (2, 4, -1)]))


def test_transistor_count_is_twin_crossings():
    rnd = random.Random(31)
    for _ in range(25):
        n = rnd.randint(2, 5)
        lword = sm.random_lambda_word(rnd, n, max_len=6)
        word = pvt.lambda_to_vt(n, lword)
        D = pvt.vt_to_diagram(n, word)
        assert len(D.transistors) == sum(1 for kind, _ in word if kind == "s")
        assert D.top == D.bot == tuple(range(n))


def test_relators_hold():
    for n in (2, 3, 4):
        results = pvt.vt_relator_check(n)
        assert results and all(ok for _, ok in results)
    names = [name for name, _ in pvt.vt_relator_check(4)]
    assert "s1 s1" in names
    assert "(r1 r2)^3" in names
    assert "r1 r2 s1 r2 r1 s2" in names


def test_two_strand_group_is_infinite_cyclic():
    for k in range(-5, 6):
        lword = [(1, 2, 1 if k > 0 else -1)] * abs(k)
        assert pvt.lambda_is_trivial(2, lword) == (k == 0)
    assert pvt.lambda_equivalent(2, [(1, 2, 1)] * 3,
                                 [(1, 2, 1)] * 5 + [(1, 2, -1)] * 2)
    assert not pvt.lambda_equivalent(2, [(1, 2, 1)] * 2, [(1, 2, 1)] * 3)


def test_commutation_matches_disjointness():
    n = 4
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        disjoint = not ({a, b} & {c, d})
        comm = [(a, b, 1), (c, d, 1), (a, b, -1), (c, d, -1)]
        assert pvt.lambda_is_trivial(n, comm) == disjoint, ((a, b), (c, d))


def test_vt_map_is_homomorphism():
    rnd = random.Random(32)
    done = 0
    while done < 30:
        n = rnd.randint(2, 5)
        w1 = [(rnd.choice("sr"), rnd.randint(1, n - 1))
              for _ in range(rnd.randint(0, 8))]
        w2 = [(rnd.choice("sr"), rnd.randint(1, n - 1))
              for _ in range(rnd.randint(0, 8))]
        if not (pvt.is_pure(n, w1) and pvt.is_pure(n, w2)):
            continue
        D12 = pvt.vt_to_diagram(n, w1 + w2)
        D1D2 = dg.concatenate(pvt.vt_to_diagram(n, w1), pvt.vt_to_diagram(n, w2))
        assert dg.equivalent_mod_dipoles(D12, D1D2)
        done += 1


def test_diagram_and_normal_form_agree():
    rnd = random.Random(33)
    for _ in range(150):
        n = rnd.randint(2, 5)
        lword = sm.random_lambda_word(rnd, n, max_len=8)
        pvt.lambda_is_trivial(n, lword)  # raises OracleMismatch on disagreement
        if rnd.random() < 0.3:
            other = sm.random_lambda_word(rnd, n, max_len=8)
            pvt.lambda_equivalent(n, lword, other)


@given(st.lists(st.tuples(st.sampled_from("sr"), st.integers(1, 4)),
                max_size=12))
def test_vt_word_round_trip_and_involution(word):
    assert pvt.parse_vt_word(pvt.vt_word_str(word)) == list(word)
    assert pvt.is_pure(5, list(word) + list(word)[::-1])


def test_vt_equivalence():
    assert pvt.vt_equivalent(3, [("r", 1), ("r", 1)], [])
    assert pvt.vt_equivalent(3, [("s", 1), ("s", 1)], [])
    assert pvt.vt_equivalent(3, [("s", 1), ("r", 1)], [("s", 1), ("r", 1)])
    assert not pvt.vt_equivalent(3, [("s", 1), ("r", 1)], [])
    w = pvt.lambda_word(3, 1, 3)
    assert not pvt.vt_is_trivial(3, w)
    assert pvt.vt_is_trivial(3, w + w[::-1])
