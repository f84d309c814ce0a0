"""polyuni: unigraphic degree sequences over 3-connected planar graphs."""

from .canon import CanonicalCode, canonical_form, canonical_labeling, is_isomorphic, isomorphism
from .graphcore import (
    DegreeSequence,
    FeasibilityReport,
    Graph,
    MalformedGraph6,
    NotGraphical,
    SequenceParseError,
    degree_sequence,
    graph6_decode,
    graph6_encode,
    havel_hakimi_realize,
    is_graphical,
    polyhedral_feasible,
)
from .enumeration import (
    ApexDecomposition,
    ApexPreconditionViolated,
    UnigraphicReport,
    decompose_apex,
    enumerate_apex,
    enumerate_auto,
    enumerate_generic,
    unigraphic_check,
)
from .planarity import (
    CutWitness,
    Embedding,
    KuratowskiWitness,
    connectivity_at_least,
    is_planar,
    is_polyhedral,
    planarity_check,
    verify_cut_witness,
    verify_embedding,
    verify_kuratowski,
)

__version__ = "0.1.0"
