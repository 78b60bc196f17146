"""Semigroup presentations with interned letters.

A presentation ``P = <Sigma | R>`` consists of a finite alphabet and a finite
list of relations ``u = v`` between nonempty words over the alphabet.
Letters are interned to dense integer ids ``0..len-1`` in declaration order,
words are tuples of letter ids, and relation ids are list positions.
Presentations are immutable once constructed.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BadArity,
    DuplicateLetter,
    DuplicateSubset,
    EmptySubset,
    EmptyWord,
    OutOfRange,
    ParseError,
    ReversedDuplicateRelation,
    TrivialRelation,
    UnknownLetter,
)

Word = tuple  # tuple of letter ids

_FORBIDDEN_NAMES = {"=", "|"}


class Relation(NamedTuple):
    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class SemigroupPresentation:
    names: tuple
    relations: tuple
    _ids: dict = field(init=False, compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_ids", {n: i for i, n in enumerate(self.names)})

    @property
    def letter_count(self):
        return len(self.names)

    def letter_id(self, name):
        try:
            return self._ids[name]
        except KeyError:
            raise UnknownLetter("unknown letter %r" % (name,)) from None

    def name(self, letter):
        return self.names[letter]

    def word_str(self, word):
        return " ".join(self.names[x] for x in word)

    def parse_word(self, text):
        """Parse a word given as space-separated letter names.

        A single unbroken token that is not itself a letter name is split
        character by character, so presentations with one-character alphabets
        accept compact words like ``"xx"``.
        """
        if not isinstance(text, str):
            return self.check_word(text)
        tokens = text.split()
        if len(tokens) == 1 and tokens[0] not in self._ids:
            tokens = list(tokens[0])
        if not tokens:
            raise EmptyWord("words must be nonempty")
        return tuple(self.letter_id(t) for t in tokens)

    def check_word(self, word):
        """Validate a sequence of letter ids or names, returning a Word."""
        out = []
        for x in word:
            if isinstance(x, str):
                out.append(self.letter_id(x))
            elif isinstance(x, int) and 0 <= x < len(self.names):
                out.append(x)
            else:
                raise UnknownLetter("letter id %r out of range" % (x,))
        if not out:
            raise EmptyWord("words must be nonempty")
        return tuple(out)

    def relation_str(self, rid):
        rel = self.relations[rid]
        return "%s = %s" % (self.word_str(rel.lhs), self.word_str(rel.rhs))


def make_presentation(names, relations):
    """Build and validate a presentation.

    ``names`` is a sequence of distinct letter names; ``relations`` a sequence
    of pairs of words, each given as a string (see ``parse_word``) or a
    sequence of names/ids. Rejects duplicate letters, empty words, unknown
    letters, trivial relations ``u = u``, and relations that repeat an
    earlier one in either orientation.
    """
    names = tuple(names)
    seen = set()
    for n in names:
        if not isinstance(n, str) or not n or n != "".join(n.split()):
            raise DuplicateLetter("letter names must be nonempty and contain no whitespace: %r" % (n,))
        if n in _FORBIDDEN_NAMES or any(c in n for c in ":=|"):
            raise DuplicateLetter("letter name %r uses reserved characters" % (n,))
        if n in seen:
            raise DuplicateLetter("duplicate letter %r" % (n,))
        seen.add(n)
    pres = SemigroupPresentation(names, ())
    rels = []
    known = set()
    for lhs, rhs in relations:
        u = pres.parse_word(lhs)
        v = pres.parse_word(rhs)
        if u == v:
            raise TrivialRelation("relation %s = %s is trivial" % (u, v))
        if (u, v) in known or (v, u) in known:
            raise ReversedDuplicateRelation(
                "relation %s = %s repeats an earlier relation" % (u, v))
        known.add((u, v))
        rels.append(Relation(u, v))
    return SemigroupPresentation(names, tuple(rels))


def commuting_presentation(n):
    """``P_n = <x1..xn | xi xj = xj xi for i < j>``, one relation per pair."""
    if n < 1:
        raise BadArity("need at least one letter, got n=%d" % n)
    names = ["x%d" % (i + 1) for i in range(n)]
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            rels.append(((names[i], names[j]), (names[j], names[i])))
    return make_presentation(names, rels)


def subset_letter_name(subset):
    return "a_" + ",".join(str(e) for e in sorted(subset))


def graph_product_presentation(n, subsets):
    """``<x1..xn, a_I | x_i1 .. x_ik = a_I for each subset I>``.

    ``subsets`` is an ordered collection of nonempty subsets of ``1..n``;
    relation ids follow the given order, with each left side listing the
    subset's letters in ascending index order.
    """
    if n < 1:
        raise BadArity("need at least one base letter, got n=%d" % n)
    cleaned = []
    seen = set()
    for I in subsets:
        I = frozenset(I)
        if not I:
            raise EmptySubset("subsets must be nonempty")
        for e in I:
            if not isinstance(e, int) or not 1 <= e <= n:
                raise OutOfRange("subset element %r not in 1..%d" % (e, n))
        if I in seen:
            raise DuplicateSubset("duplicate subset %s" % (sorted(I),))
        seen.add(I)
        cleaned.append(I)
    names = ["x%d" % (i + 1) for i in range(n)]
    names += [subset_letter_name(I) for I in cleaned]
    rels = []
    for I in cleaned:
        lhs = tuple("x%d" % i for i in sorted(I))
        rels.append((lhs, (subset_letter_name(I),)))
    return make_presentation(names, rels)


def combination_presentation(P):
    """Extend ``P`` with a three-letter loop ``s = a_s = b_s = c_s = s`` per letter.

    The alphabet gains ``a_s, b_s, c_s`` for every letter ``s`` and the
    relation list gains ``s=a_s, a_s=b_s, b_s=c_s, c_s=s``, after all original
    relations. Original letter and relation ids are preserved.
    """
    names = list(P.names)
    for s in P.names:
        names += ["a_" + s, "b_" + s, "c_" + s]
    rels = [([P.names[x] for x in r.lhs], [P.names[x] for x in r.rhs])
            for r in P.relations]
    for s in P.names:
        a, b, c = "a_" + s, "b_" + s, "c_" + s
        rels += [((s,), (a,)), ((a,), (b,)), ((b,), (c,)), ((c,), (s,))]
    return make_presentation(names, rels)


# -- text format ---------------------------------------------------------------
#
#   letters: x1 x2 x3
#   rel: x1 x2 = x2 x1
#
# Blank lines are ignored. Relation ids follow file order.

def presentation_to_text(P):
    lines = ["letters: " + " ".join(P.names)]
    for rel in P.relations:
        lines.append("rel: %s = %s" % (P.word_str(rel.lhs), P.word_str(rel.rhs)))
    return "\n".join(lines) + "\n"


def parse_presentation(text):
    names = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("letters:"):
            if names is not None:
                raise ParseError("repeated letters line", lineno)
            names = line[len("letters:"):].split()
        elif line.startswith("rel:"):
            if names is None:
                raise ParseError("rel before letters line", lineno)
            tokens = line[len("rel:"):].split()
            if tokens.count("=") != 1:
                raise ParseError("expected exactly one '=' in relation", lineno)
            k = tokens.index("=")
            rels.append((tokens[:k], tokens[k + 1:]))
        else:
            raise ParseError("unrecognized line %r" % line, lineno)
    if names is None:
        raise ParseError("missing letters line")
    try:
        return make_presentation(names, rels)
    except (DuplicateLetter, EmptyWord, UnknownLetter, TrivialRelation,
            ReversedDuplicateRelation) as e:
        raise ParseError(str(e)) from e


def save_presentation(P, path):
    with open(path, "w") as fh:
        fh.write(presentation_to_text(P))


def load_presentation(path):
    with open(path) as fh:
        return parse_presentation(fh.read())
