"""Symmetric semigroup diagrams and their dipole calculus.

A diagram over a presentation holds a frame (top word, bottom word), a list
of transistors, and wires. A transistor is one oriented use of a relation:
forward means its top side reads the relation's left word and its bottom
side the right word, backward the opposite. A wire joins an upper port (a
frame-top position or a position on some transistor's bottom side) to a
lower port (a frame-bottom position or a position on some transistor's top
side); every port carries exactly one wire and the two endpoints of a wire
must carry the same letter. Wires are pure connections: no crossing data is
recorded, which is what makes the diagrams symmetric rather than planar.

The partial order generated by "there is a wire from the bottom of T2 into
the top of T1" must be acyclic. A dipole is a pair T1, T2 where the wires
into the top of T1 are exactly the wires out of the bottom of T2 in the
same left-to-right order, and the top word of T2 equals the bottom word of
T1; cancelling the pair and fusing the outer wires preserves the element.
Reduction is confluent, so reduced forms are unique and two diagrams are
equivalent exactly when their reduced canonical codes agree.
"""
from __future__ import annotations

import os
from typing import NamedTuple

from .errors import (
    BadPermutation,
    BadPosition,
    DiagrammaError,
    InterfaceMismatch,
    LabelMismatch,
    ParseError,
    UnknownLetter,
)
from .presentations import SemigroupPresentation, load_presentation


class Transistor(NamedTuple):
    rel: int
    forward: bool


class Diagram:
    """Immutable by convention; operations return new diagrams.

    ``wires`` maps each upper port to its lower port. Ports are tuples:
    ``("FT", i)`` and ``("FB", i)`` on the frame, ``("TB", t, i)`` on the
    bottom side of transistor t, ``("TT", t, i)`` on its top side.
    Structural equality (``==``) compares representations including
    transistor numbering; use ``equivalent_mod_dipoles`` for equality in
    the diagram groupoid.
    """

    __slots__ = ("presentation", "top", "bot", "transistors", "wires", "_by_lower")

    def __init__(self, presentation, top, bot, transistors, wires):
        self.presentation = presentation
        self.top = tuple(top)
        self.bot = tuple(bot)
        self.transistors = tuple(transistors)
        self.wires = dict(wires)
        self._by_lower = {l: u for u, l in self.wires.items()}
        _validate(self)

    @property
    def transistor_count(self):
        return len(self.transistors)

    def trans_top_word(self, t):
        rel = self.presentation.relations[self.transistors[t].rel]
        return rel.lhs if self.transistors[t].forward else rel.rhs

    def trans_bot_word(self, t):
        rel = self.presentation.relations[self.transistors[t].rel]
        return rel.rhs if self.transistors[t].forward else rel.lhs

    def letter_at_upper(self, port):
        if port[0] == "FT":
            return self.top[port[1]]
        return self.trans_bot_word(port[1])[port[2]]

    def letter_at_lower(self, port):
        if port[0] == "FB":
            return self.bot[port[1]]
        return self.trans_top_word(port[1])[port[2]]

    def upper_of(self, lower_port):
        return self._by_lower[lower_port]

    def __eq__(self, other):
        return (isinstance(other, Diagram)
                and self.presentation == other.presentation
                and self.top == other.top and self.bot == other.bot
                and self.transistors == other.transistors
                and self.wires == other.wires)

    __hash__ = None

    def __repr__(self):
        return "<Diagram (%s -> %s), %d transistors, %d wires>" % (
            self.presentation.word_str(self.top),
            self.presentation.word_str(self.bot),
            len(self.transistors), len(self.wires))


def _validate(D):
    P = D.presentation
    for w, side in ((D.top, "top"), (D.bot, "bottom")):
        if not w:
            raise DiagrammaError("%s word must be nonempty" % side)
        for x in w:
            if not 0 <= x < P.letter_count:
                raise DiagrammaError("letter id %r out of range" % (x,))
    for t, tr in enumerate(D.transistors):
        if not 0 <= tr.rel < len(P.relations):
            raise DiagrammaError("transistor %d uses unknown relation %d" % (t, tr.rel))
    uppers = {("FT", i) for i in range(len(D.top))}
    lowers = {("FB", i) for i in range(len(D.bot))}
    for t in range(len(D.transistors)):
        uppers |= {("TB", t, i) for i in range(len(D.trans_bot_word(t)))}
        lowers |= {("TT", t, i) for i in range(len(D.trans_top_word(t)))}
    if set(D.wires) != uppers:
        raise DiagrammaError("wires must cover every upper port exactly once")
    vals = list(D.wires.values())
    if len(set(vals)) != len(vals) or set(vals) != lowers:
        raise DiagrammaError("wires must cover every lower port exactly once")
    for u, l in D.wires.items():
        if D.letter_at_upper(u) != D.letter_at_lower(l):
            raise DiagrammaError("wire %s -> %s joins different letters" % (u, l))
    _check_acyclic(D)


def _check_acyclic(D):
    # edge t2 -> t1 when a wire descends from the bottom of t2 into the top of t1
    n = len(D.transistors)
    succ = [set() for _ in range(n)]
    indeg = [0] * n
    for u, l in D.wires.items():
        if u[0] == "TB" and l[0] == "TT":
            if l[1] not in succ[u[1]]:
                succ[u[1]].add(l[1])
                indeg[l[1]] += 1
    ready = [t for t in range(n) if indeg[t] == 0]
    seen = 0
    while ready:
        t = ready.pop()
        seen += 1
        for s in succ[t]:
            indeg[s] -= 1
            if indeg[s] == 0:
                ready.append(s)
    if seen != n:
        raise DiagrammaError("wires order the transistors cyclically")


# -- constructors -----------------------------------------------------------------

def identity_diagram(P, w):
    w = P.parse_word(w)
    wires = {("FT", i): ("FB", i) for i in range(len(w))}
    return Diagram(P, w, w, (), wires)


def permutation_diagram(P, w, sigma):
    """Transistor-free diagram sending top position i to bottom position sigma[i]."""
    w = P.parse_word(w)
    sigma = _check_permutation(sigma, len(w))
    bot = [None] * len(w)
    for i, x in enumerate(w):
        bot[sigma[i]] = x
    wires = {("FT", i): ("FB", sigma[i]) for i in range(len(w))}
    return Diagram(P, w, tuple(bot), (), wires)


def _check_permutation(sigma, k):
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(k)):
        raise BadPermutation("expected a permutation of 0..%d, got %r" % (k - 1, sigma))
    return sigma


class DiagramBuilder:
    """Grow a diagram downward from a top word.

    The builder keeps an ordered list of dangling wires, initially one per
    top letter. ``apply`` attaches a transistor whose top ports consume the
    dangling wires at the given positions, in the given order; the fresh
    dangling wires for its bottom word re-enter the list where the leftmost
    consumed position was, and the new positions are returned. ``finish``
    routes the remaining dangling wires to the frame bottom, position i
    going to sigma[i].
    """

    def __init__(self, P, w):
        self.presentation = P
        self.top = P.parse_word(w)
        self._stubs = [(("FT", i), x) for i, x in enumerate(self.top)]
        self._transistors = []
        self._wires = {}
        self._done = False

    @property
    def dangling(self):
        """Letters of the current dangling wires, in order."""
        return tuple(x for _, x in self._stubs)

    def apply(self, positions, rel_id, forward=True):
        if self._done:
            raise DiagrammaError("builder already finished")
        P = self.presentation
        if not 0 <= rel_id < len(P.relations):
            raise BadPosition("unknown relation id %d" % rel_id)
        positions = list(positions)
        if len(set(positions)) != len(positions):
            raise BadPosition("positions must be distinct: %r" % (positions,))
        for p in positions:
            if not (isinstance(p, int) and 0 <= p < len(self._stubs)):
                raise BadPosition("no dangling wire at position %r" % (p,))
        rel = P.relations[rel_id]
        top_word = rel.lhs if forward else rel.rhs
        if len(positions) != len(top_word):
            raise LabelMismatch("relation side has %d letters, got %d positions"
                                % (len(top_word), len(positions)))
        for k, p in enumerate(positions):
            if self._stubs[p][1] != top_word[k]:
                raise LabelMismatch(
                    "dangling wire %d carries %s, needs %s" % (
                        p, P.name(self._stubs[p][1]), P.name(top_word[k])))
        t = len(self._transistors)
        self._transistors.append(Transistor(rel_id, forward))
        for k, p in enumerate(positions):
            self._wires[self._stubs[p][0]] = ("TT", t, k)
        bot_word = rel.rhs if forward else rel.lhs
        fresh = [(("TB", t, j), x) for j, x in enumerate(bot_word)]
        m = min(positions)
        consumed = set(positions)
        self._stubs = (self._stubs[:m] + fresh
                       + [s for i, s in enumerate(self._stubs)
                          if i > m and i not in consumed])
        return list(range(m, m + len(fresh)))

    def finish(self, sigma=None):
        if self._done:
            raise DiagrammaError("builder already finished")
        k = len(self._stubs)
        sigma = tuple(range(k)) if sigma is None else _check_permutation(sigma, k)
        bot = [None] * k
        wires = dict(self._wires)
        for i, (port, x) in enumerate(self._stubs):
            bot[sigma[i]] = x
            wires[port] = ("FB", sigma[i])
        self._done = True
        return Diagram(self.presentation, self.top, tuple(bot),
                       tuple(self._transistors), wires)


# -- group operations --------------------------------------------------------------

def concatenate(D1, D2):
    """Glue D2 below D1, fusing the interface wires. No reduction happens."""
    if D1.presentation != D2.presentation:
        raise InterfaceMismatch("diagrams live over different presentations")
    if D1.bot != D2.top:
        raise InterfaceMismatch("bottom %r does not match top %r" % (
            D1.presentation.word_str(D1.bot), D2.presentation.word_str(D2.top)))
    off = len(D1.transistors)
    wires = {}
    for u, l in D1.wires.items():
        if l[0] != "FB":
            wires[u] = l
    for i in range(len(D1.bot)):
        u1 = D1.upper_of(("FB", i))
        wires[u1] = _shift_lower(D2.wires[("FT", i)], off)
    for u, l in D2.wires.items():
        if u[0] != "FT":
            wires[_shift_upper(u, off)] = _shift_lower(l, off)
    return Diagram(D1.presentation, D1.top, D2.bot,
                   D1.transistors + D2.transistors, wires)


def _shift_upper(p, off):
    return p if p[0] == "FT" else ("TB", p[1] + off, p[2])


def _shift_lower(p, off):
    return p if p[0] == "FB" else ("TT", p[1] + off, p[2])


def inverse(D):
    """Vertical mirror: frames swap and every transistor flips orientation."""
    trans = tuple(Transistor(t.rel, not t.forward) for t in D.transistors)
    wires = {_mirror(l): _mirror(u) for u, l in D.wires.items()}
    return Diagram(D.presentation, D.bot, D.top, trans, wires)


def _mirror(p):
    kind = {"FT": "FB", "FB": "FT", "TT": "TB", "TB": "TT"}[p[0]]
    return (kind,) + p[1:]


# -- dipoles ------------------------------------------------------------------------

def find_dipoles(D):
    """All pairs (t1, t2), t2 directly above t1, that cancel.

    The wires into the top of t1 must be exactly the wires out of the bottom
    of t2, position i to position i, and the top word of t2 must equal the
    bottom word of t1.
    """
    out = []
    for t1 in range(len(D.transistors)):
        up0 = D.upper_of(("TT", t1, 0))
        if up0[0] != "TB" or up0[2] != 0:
            continue
        t2 = up0[1]
        if t2 == t1:
            continue
        n1 = len(D.trans_top_word(t1))
        if len(D.trans_bot_word(t2)) != n1:
            continue
        if any(D.upper_of(("TT", t1, i)) != ("TB", t2, i) for i in range(1, n1)):
            continue
        if D.trans_top_word(t2) != D.trans_bot_word(t1):
            continue
        out.append((t1, t2))
    return sorted(out)


def _remove_dipole(D, t1, t2):
    """Cancel a dipole. Returns (diagram, upper-port map, fused pairs).

    The map sends every surviving wire's old upper port to its new one; the
    fused pairs list the old upper ports (a_i into the top of t2, b_i out of
    the bottom of t1) whose wires merged, keyed for label composition.
    """
    m = len(D.trans_top_word(t2))
    n1 = len(D.trans_top_word(t1))
    fused = [(D.upper_of(("TT", t2, i)), ("TB", t1, i)) for i in range(m)]
    dead_upper = {("TB", t2, i) for i in range(n1)} | {("TB", t1, i) for i in range(m)}
    replace_lower = {("TT", t2, i): D.wires[("TB", t1, i)] for i in range(m)}
    id_map = {}
    for t in range(len(D.transistors)):
        if t not in (t1, t2):
            id_map[t] = len(id_map)

    def remap(p):
        return p if len(p) == 2 else (p[0], id_map[p[1]], p[2])

    wires = {}
    port_map = {}
    for u, l in D.wires.items():
        if u in dead_upper:
            continue
        nl = replace_lower.get(l, l)
        wires[remap(u)] = remap(nl)
        port_map[u] = remap(u)
    trans = tuple(tr for t, tr in enumerate(D.transistors) if t not in (t1, t2))
    newD = Diagram(D.presentation, D.top, D.bot, trans, wires)
    return newD, port_map, fused


def reduce(D, rng=None):
    return reduce_with_steps(D, rng)[0]


def reduce_with_steps(D, rng=None):
    """Cancel dipoles until none remain; confluence makes the result unique.

    By default the dipole least in the canonical numbering goes first, so
    the intermediate states are independent of transistor numbering; pass a
    random generator to reduce in random order instead.
    """
    steps = 0
    while True:
        dipoles = find_dipoles(D)
        if not dipoles:
            return D, steps
        if rng is not None:
            t1, t2 = dipoles[rng.randrange(len(dipoles))]
        else:
            num = {t: k for k, t in enumerate(_canonical_numbering(D)[1])}
            t1, t2 = min(dipoles, key=lambda p: (num[p[0]], num[p[1]]))
        D, _, _ = _remove_dipole(D, t1, t2)
        steps += 1


# -- canonical form -----------------------------------------------------------------

def _canonical_numbering(D):
    """First-visit orders of wires and transistors under the anchored walk.

    Depth first from frame-top positions 0, 1, 2, ...; entering an unseen
    transistor numbers it and descends through its bottom ports left to
    right. Every wire and transistor is reachable this way, so the orders
    depend only on the abstract diagram, not on stored numbering.
    """
    wire_order = []
    trans_order = []
    tnum = {}
    seen = set()
    for i in range(len(D.top)):
        stack = [("FT", i)]
        while stack:
            up = stack.pop()
            if up in seen:
                continue
            seen.add(up)
            wire_order.append(up)
            low = D.wires[up]
            if low[0] == "TT" and low[1] not in tnum:
                t = low[1]
                tnum[t] = len(trans_order)
                trans_order.append(t)
                for j in range(len(D.trans_bot_word(t)) - 1, -1, -1):
                    stack.append(("TB", t, j))
    assert len(wire_order) == len(D.wires), "diagram not reachable from frame top"
    assert len(trans_order) == len(D.transistors)
    return wire_order, trans_order


def canonical_form(D):
    """Byte string equal for two diagrams exactly when they are the same
    diagram up to renumbering."""
    wire_order, trans_order = _canonical_numbering(D)
    tnum = {t: k for k, t in enumerate(trans_order)}

    def up_s(p):
        return "f%d" % p[1] if p[0] == "FT" else "%db%d" % (tnum[p[1]], p[2])

    def low_s(p):
        return "g%d" % p[1] if p[0] == "FB" else "%dt%d" % (tnum[p[1]], p[2])

    trans_s = ",".join("%d%s" % (D.transistors[t].rel,
                                 "F" if D.transistors[t].forward else "B")
                       for t in trans_order)
    wire_s = ",".join("%s>%s" % (up_s(u), low_s(D.wires[u])) for u in wire_order)
    text = "top=%s;bot=%s;tr=%s;w=%s" % (
        ",".join(map(str, D.top)), ",".join(map(str, D.bot)), trans_s, wire_s)
    return text.encode("ascii")


def equivalent_mod_dipoles(D1, D2):
    if D1.presentation != D2.presentation:
        raise InterfaceMismatch("diagrams live over different presentations")
    return canonical_form(reduce(D1)) == canonical_form(reduce(D2))


def is_trivial(D):
    """True when D reduces to the crossing-free identity diagram.

    A transistor-free diagram whose wire matching is a nontrivial
    permutation is a nontrivial element.
    """
    R = reduce(D)
    if R.top != R.bot:
        return False
    return canonical_form(R) == canonical_form(identity_diagram(R.presentation, R.top))


# -- text format ---------------------------------------------------------------------
#
#   over <presentation-file>
#   top x1 x2
#   bot x2 x1
#   t <id> <rel-id> <F|B>
#   w FT:0 T0:top:0 x1
#
# Ports: FT:<i>, FB:<i>, T<id>:top:<i>, T<id>:bot:<i>. Wire lines carry the
# letter for readability and are checked against the endpoints on load.
# Emission orders transistors by id and wires by upper port, so writing,
# parsing, and writing again is byte identical.

def _upper_port_str(p):
    return "FT:%d" % p[1] if p[0] == "FT" else "T%d:bot:%d" % (p[1], p[2])


def _lower_port_str(p):
    return "FB:%d" % p[1] if p[0] == "FB" else "T%d:top:%d" % (p[1], p[2])


def _parse_port(tok, upper, lineno):
    parts = tok.split(":")
    try:
        if parts[0] == ("FT" if upper else "FB") and len(parts) == 2:
            return (parts[0], int(parts[1]))
        if (len(parts) == 3 and parts[0][0] == "T"
                and parts[1] == ("bot" if upper else "top")):
            return ("TB" if upper else "TT", int(parts[0][1:]), int(parts[2]))
    except ValueError:
        pass
    raise ParseError("bad %s port %r" % ("upper" if upper else "lower", tok), lineno)


def _letters(P, tokens, lineno):
    try:
        return tuple(P.letter_id(x) for x in tokens)
    except UnknownLetter as e:
        raise ParseError(str(e), lineno) from None


def _wire_sort_key(p):
    return (0, p[1], 0) if p[0] == "FT" else (1, p[1], p[2])


def diagram_to_text(D, over, header_lines=(), wire_suffix=None):
    P = D.presentation
    lines = ["over %s" % over,
             "top %s" % P.word_str(D.top),
             "bot %s" % P.word_str(D.bot)]
    lines.extend(header_lines)
    for t, tr in enumerate(D.transistors):
        lines.append("t %d %d %s" % (t, tr.rel, "F" if tr.forward else "B"))
    for u in sorted(D.wires, key=_wire_sort_key):
        line = "w %s %s %s" % (_upper_port_str(u),
                               _lower_port_str(D.wires[u]),
                               P.name(D.letter_at_upper(u)))
        if wire_suffix is not None:
            line += " | " + wire_suffix(u)
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_diagram(text, P, extras=None):
    """Parse the body of a diagram file against a known presentation.

    Any ``over`` line is ignored here; ``load_diagram`` uses it to locate
    the presentation file. When ``extras`` is a dict, labeled syntax is
    accepted: a ``groups:`` header line lands under ``"groups"`` and wire
    label fields under ``"labels"`` as raw strings keyed by upper port.
    """
    top = bot = None
    transistors = []
    wires = {}
    wire_letters = []
    if extras is not None:
        extras.setdefault("labels", {})
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "over":
            continue
        if kind == "groups:":
            if extras is None:
                raise ParseError("groups line in an unlabeled diagram file", lineno)
            extras["groups"] = parts[1:]
            continue
        if kind in ("top", "bot"):
            if len(parts) < 2:
                raise ParseError("empty %s word" % kind, lineno)
            word = _letters(P, parts[1:], lineno)
            if kind == "top":
                top = word
            else:
                bot = word
        elif kind == "t":
            if len(parts) != 4 or parts[3] not in ("F", "B"):
                raise ParseError("bad transistor line %r" % line, lineno)
            try:
                tid, rel = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("bad transistor line %r" % line, lineno) from None
            if tid != len(transistors):
                raise ParseError("transistor ids must be consecutive from 0", lineno)
            transistors.append(Transistor(rel, parts[3] == "F"))
        elif kind == "w":
            if len(parts) >= 6 and parts[4] == "|":
                if extras is None:
                    raise ParseError("labeled wire in an unlabeled diagram file", lineno)
                label = " ".join(parts[5:])
                parts = parts[:4]
            elif len(parts) == 4:
                label = None
            else:
                raise ParseError("bad wire line %r" % line, lineno)
            u = _parse_port(parts[1], True, lineno)
            l = _parse_port(parts[2], False, lineno)
            if u in wires:
                raise ParseError("duplicate wire at upper port %s" % parts[1], lineno)
            wires[u] = l
            if label is not None:
                extras["labels"][u] = label
            wire_letters.append((u, _letters(P, parts[3:4], lineno)[0], lineno))
        else:
            raise ParseError("unrecognized line %r" % line, lineno)
    if top is None or bot is None:
        raise ParseError("missing top or bot line")
    D = Diagram(P, top, bot, transistors, wires)
    for u, x, lineno in wire_letters:
        if D.letter_at_upper(u) != x:
            raise ParseError("wire letter %s disagrees with its ports"
                             % P.name(x), lineno)
    return D


def _over_path(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "over" and len(parts) == 2:
            return parts[1]
        raise ParseError("first line must be 'over <presentation-file>'", lineno)
    raise ParseError("empty diagram file")


def save_diagram(D, path, pres_path=None):
    """Write a diagram file; the presentation goes to ``pres_path``
    (default: path + ".pres") and is referenced relative to the diagram."""
    if pres_path is None:
        pres_path = path + ".pres"
    from .presentations import save_presentation
    save_presentation(D.presentation, pres_path)
    over = os.path.relpath(pres_path, os.path.dirname(os.path.abspath(path)))
    with open(path, "w") as fh:
        fh.write(diagram_to_text(D, over))


def load_diagram(path):
    with open(path) as fh:
        text = fh.read()
    over = _over_path(text)
    P = load_presentation(os.path.join(os.path.dirname(os.path.abspath(path)), over))
    return parse_diagram(text, P)
