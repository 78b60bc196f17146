"""Semigroup diagrams with symmetric wiring: groups of reduced diagrams,
group-labeled wires, gadget embeddings of graph products, and pure virtual
twin words.

The main objects are semigroup presentations, (w1, w2)-diagrams over them
(wires may cross), and their groups under stacking modulo dipole
cancellation. On top of that: diagrams whose wires carry group elements,
the loop-gadget trade of labels for transistors, embeddings of graph
products and right-angled Artin groups, and the translation of pure
virtual twin words into diagrams over the fully commuting presentation.
"""

from .errors import (
    BadArity,
    BadPermutation,
    BadPosition,
    DiagrammaError,
    DuplicateLetter,
    DuplicateSubset,
    EmptySubset,
    EmptyWord,
    IdentityElement,
    IndexOrder,
    InterfaceMismatch,
    LabelMismatch,
    MalformedGadget,
    NoThetaContext,
    NotInImage,
    NotPure,
    OracleMismatch,
    OutOfRange,
    ParseError,
    RealizationCheckFailed,
    ReversedDuplicateRelation,
    TrivialRelation,
    UnknownLetter,
)
from .presentations import (
    Relation,
    SemigroupPresentation,
    combination_presentation,
    commuting_presentation,
    graph_product_presentation,
    load_presentation,
    make_presentation,
    parse_presentation,
    presentation_to_text,
    save_presentation,
    subset_letter_name,
)
from .graphs import (
    SimpleGraph,
    SubsetFamily,
    are_isomorphic,
    disjointness_graph,
    find_induced_odd_cycle_ge5,
    find_isomorphism,
    load_graph,
    make_graph,
    make_subset_family,
    opposite_graph,
    pair_index,
    pvt_graph,
    realize_as_disjointness,
    save_graph,
    subset_tag,
    verify_induced_cycle,
)
from .diagrams import (
    Diagram,
    DiagramBuilder,
    Transistor,
    canonical_form,
    concatenate,
    diagram_to_text,
    equivalent_mod_dipoles,
    find_dipoles,
    identity_diagram,
    inverse,
    is_trivial,
    load_diagram,
    parse_diagram,
    permutation_diagram,
    reduce,
    reduce_with_steps,
    save_diagram,
)
from .diagram_products import (
    CyclicGroup,
    GroupHandle,
    IntGroup,
    LabeledDiagram,
    TrivialGroup,
    canonical_form_labeled,
    concatenate_labeled,
    constant_groups,
    equivalent_mod_dipoles_labeled,
    find_dipoles_labeled,
    forget_labels,
    group_from_label,
    inverse_labeled,
    is_trivial_labeled,
    labeled_diagram_to_text,
    labeled_identity,
    load_labeled_diagram,
    parse_labeled_diagram,
    reduce_labeled,
    save_labeled_diagram,
    strip_labels_code,
)
from .graph_products import (
    GPContext,
    GPWord,
    gp_concat,
    gp_context,
    gp_equal,
    gp_inverse,
    gp_is_trivial,
    gp_normal_form,
    gp_word_str,
    make_gp_word,
    parse_gp_word,
    theta,
    theta_context,
    theta_inverse,
    theta_vertex,
)
from .combination import (
    QContext,
    RaagEmbedding,
    collapse,
    expand,
    m_gadget,
    q_context,
    raag_embedding,
    raag_to_diagram_group,
)
from .pvt import (
    is_pure,
    lambda_equivalent,
    lambda_is_trivial,
    lambda_syllables,
    lambda_to_diagram,
    lambda_to_vt,
    lambda_word,
    lambda_word_str,
    parse_lambda_word,
    parse_vt_word,
    vt_equivalent,
    vt_is_trivial,
    vt_relator_check,
    vt_to_diagram,
    vt_word_str,
    word_permutation,
)

__version__ = "0.1.0"
