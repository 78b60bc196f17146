"""Diagrams whose wires carry group elements.

Fix a group for every letter of the presentation. A labeled diagram is an
ordinary diagram together with one element of the letter's group on each
wire. Concatenation fuses interface wires and multiplies their elements,
upper factor first; a dipole must have identity elements on its connecting
wires, and cancelling it multiplies the outer labels the same way, so
reduction stays confluent and compatible with concatenation. With the
one-relation presentation on a single letter and base word of length n this
recovers wreath-like products; the package ships the integers, finite
cyclic groups, and the trivial group, all with integer elements.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadArity, DiagrammaError, InterfaceMismatch, LabelMismatch, ParseError
from . import diagrams as dg
from .diagrams import Diagram


class GroupHandle:
    """Interface for the group attached to a letter.

    Elements are opaque values; handles provide identity, multiplication,
    inversion, equality, membership, and a string form for files. Handles
    compare structurally so two labeled diagrams can check that they use
    the same group assignment.
    """

    def identity(self):
        raise NotImplementedError

    def multiply(self, g, h):
        raise NotImplementedError

    def invert(self, g):
        raise NotImplementedError

    def equals(self, g, h):
        return g == h

    def is_identity(self, g):
        return self.equals(g, self.identity())

    def contains(self, g):
        raise NotImplementedError

    def to_str(self, g):
        return str(g)

    def from_str(self, s):
        raise NotImplementedError


@dataclass(frozen=True)
class IntGroup(GroupHandle):
    """The integers under addition; elements are Python ints."""

    def identity(self):
        return 0

    def multiply(self, g, h):
        return g + h

    def invert(self, g):
        return -g

    def contains(self, g):
        return isinstance(g, int) and not isinstance(g, bool)

    def from_str(self, s):
        try:
            return int(s)
        except ValueError:
            raise ParseError("bad integer label %r" % s) from None

    @property
    def label(self):
        return "Z"


@dataclass(frozen=True)
class CyclicGroup(GroupHandle):
    """Integers mod ``order`` under addition."""

    order: int

    def __post_init__(self):
        if not (isinstance(self.order, int) and self.order >= 1):
            raise BadArity("cyclic group order must be a positive integer")

    def identity(self):
        return 0

    def multiply(self, g, h):
        return (g + h) % self.order

    def invert(self, g):
        return (-g) % self.order

    def contains(self, g):
        return isinstance(g, int) and not isinstance(g, bool) and 0 <= g < self.order

    def from_str(self, s):
        try:
            return int(s) % self.order
        except ValueError:
            raise ParseError("bad integer label %r" % s) from None

    @property
    def label(self):
        return "Z/%d" % self.order


@dataclass(frozen=True)
class TrivialGroup(GroupHandle):
    """One element, the int 0."""

    def identity(self):
        return 0

    def multiply(self, g, h):
        return 0

    def invert(self, g):
        return 0

    def contains(self, g):
        return g == 0

    def from_str(self, s):
        if s.strip() != "0":
            raise ParseError("the trivial group has only the label 0")
        return 0

    @property
    def label(self):
        return "1"


def group_from_label(s):
    if s == "Z":
        return IntGroup()
    if s == "1":
        return TrivialGroup()
    if s.startswith("Z/"):
        try:
            return CyclicGroup(int(s[2:]))
        except ValueError:
            pass
    raise ParseError("unknown group label %r" % s)


def constant_groups(P, handle):
    """The same group on every letter."""
    return (handle,) * P.letter_count


class LabeledDiagram:
    """A diagram plus one group element per wire, keyed by upper port."""

    __slots__ = ("diagram", "groups", "labels")

    def __init__(self, diagram, groups, labels=None):
        groups = tuple(groups)
        if len(groups) != diagram.presentation.letter_count:
            raise LabelMismatch("need one group per letter")
        if labels is None:
            labels = {u: groups[diagram.letter_at_upper(u)].identity()
                      for u in diagram.wires}
        labels = dict(labels)
        if set(labels) != set(diagram.wires):
            raise LabelMismatch("labels must cover every wire exactly once")
        for u, g in labels.items():
            if not groups[diagram.letter_at_upper(u)].contains(g):
                raise LabelMismatch("label %r not in the group of letter %s"
                                    % (g, diagram.presentation.name(
                                        diagram.letter_at_upper(u))))
        self.diagram = diagram
        self.groups = groups
        self.labels = labels

    def group_at(self, upper_port):
        return self.groups[self.diagram.letter_at_upper(upper_port)]

    def __eq__(self, other):
        return (isinstance(other, LabeledDiagram)
                and self.diagram == other.diagram
                and self.groups == other.groups
                and self.labels == other.labels)

    __hash__ = None

    def __repr__(self):
        return "<Labeled%r>" % (self.diagram,)


def forget_labels(L):
    return L.diagram


def labeled_identity(P, groups, w):
    return LabeledDiagram(dg.identity_diagram(P, w), groups)


def _check_same_groups(L1, L2):
    if L1.groups != L2.groups:
        raise InterfaceMismatch("labeled diagrams use different group assignments")


def concatenate_labeled(L1, L2):
    """Glue L2 below L1; each fused wire multiplies L1's element by L2's."""
    _check_same_groups(L1, L2)
    D1, D2 = L1.diagram, L2.diagram
    D = dg.concatenate(D1, D2)
    off = len(D1.transistors)
    labels = {}
    for u, l in D1.wires.items():
        if l[0] != "FB":
            labels[u] = L1.labels[u]
    for i in range(len(D1.bot)):
        u1 = D1.upper_of(("FB", i))
        grp = L1.group_at(u1)
        labels[u1] = grp.multiply(L1.labels[u1], L2.labels[("FT", i)])
    for u in D2.wires:
        if u[0] != "FT":
            labels[dg._shift_upper(u, off)] = L2.labels[u]
    return LabeledDiagram(D, L1.groups, labels)


def inverse_labeled(L):
    """Vertical mirror with every wire element inverted."""
    D = L.diagram
    labels = {}
    for u, l in D.wires.items():
        labels[dg._mirror(l)] = L.group_at(u).invert(L.labels[u])
    return LabeledDiagram(dg.inverse(D), L.groups, labels)


def find_dipoles_labeled(L):
    """Dipoles of the underlying diagram whose connecting wires all carry
    the identity."""
    D = L.diagram
    out = []
    for t1, t2 in dg.find_dipoles(D):
        n1 = len(D.trans_top_word(t1))
        if all(L.group_at(("TB", t2, i)).is_identity(L.labels[("TB", t2, i)])
               for i in range(n1)):
            out.append((t1, t2))
    return out


def _remove_dipole_labeled(L, t1, t2):
    D, port_map, fused = dg._remove_dipole(L.diagram, t1, t2)
    labels = {}
    for old, new in port_map.items():
        labels[new] = L.labels[old]
    for a_up, b_up in fused:
        grp = L.group_at(a_up)
        labels[port_map[a_up]] = grp.multiply(L.labels[a_up], L.labels[b_up])
    return LabeledDiagram(D, L.groups, labels)


def reduce_labeled(L, rng=None):
    while True:
        dipoles = find_dipoles_labeled(L)
        if not dipoles:
            return L
        if rng is not None:
            t1, t2 = dipoles[rng.randrange(len(dipoles))]
        else:
            num = {t: k for k, t in enumerate(dg._canonical_numbering(L.diagram)[1])}
            t1, t2 = min(dipoles, key=lambda p: (num[p[0]], num[p[1]]))
        L = _remove_dipole_labeled(L, t1, t2)


_LABEL_SEP = b"\n@labels "


def canonical_form_labeled(L):
    """Unlabeled canonical code plus the wire elements in canonical wire
    order; stripping at the separator recovers the unlabeled code."""
    wire_order, _ = dg._canonical_numbering(L.diagram)
    tail = ",".join(L.group_at(u).to_str(L.labels[u]) for u in wire_order)
    return dg.canonical_form(L.diagram) + _LABEL_SEP + tail.encode("ascii")


def strip_labels_code(code):
    return code.split(_LABEL_SEP, 1)[0]


def equivalent_mod_dipoles_labeled(L1, L2):
    _check_same_groups(L1, L2)
    if L1.diagram.presentation != L2.diagram.presentation:
        raise InterfaceMismatch("labeled diagrams live over different presentations")
    return canonical_form_labeled(reduce_labeled(L1)) == \
        canonical_form_labeled(reduce_labeled(L2))


def is_trivial_labeled(L):
    R = reduce_labeled(L)
    if R.diagram.top != R.diagram.bot:
        return False
    ident = labeled_identity(R.diagram.presentation, R.groups, R.diagram.top)
    return canonical_form_labeled(R) == canonical_form_labeled(ident)


# -- text format ---------------------------------------------------------------------
#
# Same as the unlabeled format plus a header line
#   groups: x1:1 a_1:Z
# and a trailing element on each wire line:
#   w FT:0 T0:top:0 x1 | 3

def labeled_diagram_to_text(L, over):
    P = L.diagram.presentation
    groups_line = "groups: " + " ".join(
        "%s:%s" % (P.names[i], L.groups[i].label) for i in range(P.letter_count))
    return dg.diagram_to_text(
        L.diagram, over, header_lines=[groups_line],
        wire_suffix=lambda u: L.group_at(u).to_str(L.labels[u]))


def parse_labeled_diagram(text, P, groups=None):
    extras = {}
    D = dg.parse_diagram(text, P, extras)
    if groups is None:
        if "groups" in extras:
            by_name = {}
            for tok in extras["groups"]:
                name, _, label = tok.rpartition(":")
                if not name:
                    raise ParseError("bad groups entry %r" % tok)
                by_name[name] = group_from_label(label)
            try:
                groups = tuple(by_name[n] for n in P.names)
            except KeyError as e:
                raise ParseError("groups line misses letter %s" % e) from None
        else:
            groups = constant_groups(P, IntGroup())
    labels = {}
    for u in D.wires:
        raw = extras["labels"].get(u)
        grp = groups[D.letter_at_upper(u)]
        labels[u] = grp.identity() if raw is None else grp.from_str(raw)
    return LabeledDiagram(D, groups, labels)


def save_labeled_diagram(L, path, pres_path=None):
    import os
    from .presentations import save_presentation
    if pres_path is None:
        pres_path = path + ".pres"
    save_presentation(L.diagram.presentation, pres_path)
    over = os.path.relpath(pres_path, os.path.dirname(os.path.abspath(path)))
    with open(path, "w") as fh:
        fh.write(labeled_diagram_to_text(L, over))


def load_labeled_diagram(path):
    import os
    from .presentations import load_presentation
    with open(path) as fh:
        text = fh.read()
    over = dg._over_path(text)
    P = load_presentation(os.path.join(os.path.dirname(os.path.abspath(path)), over))
    return parse_labeled_diagram(text, P)
