"""iccdec: ICC verdicts for 3-manifold groups and structured groups.

A group is ICC when it is infinite and every conjugacy class other than {1}
is infinite; by the Murray-von Neumann characterization this says exactly
that its group von Neumann algebra is a factor of type II1.  This package
decides the property for groups described by construction and for compact
3-manifolds described at the level the classification theorems consume, and
cross-checks verdicts at desk scale with a brute-force conjugacy oracle and
explicit strong-ICC witness sequences.
"""

from .citations import CITATIONS
from .verdict import Citation, Status, Verdict, Witness
from .rules import (
    MonodromyClass,
    classify_monodromy,
    decide_structured_group,
    icc_amalgam,
    icc_finite_index_descend,
    icc_free_product,
    icc_hnn,
    icc_index_two_lift,
    icc_surface,
    icc_torus_bundle,
)
from .manifolds import (
    HomotopySpherePiece,
    HyperbolicKnot,
    HyperbolicPiece,
    LinkDescriptor,
    ManifoldDescriptor,
    OtherIrreduciblePiece,
    OtherKnot,
    SeifertInvariants,
    SeifertPiece,
    SphereBundlePiece,
    TorusBundlePiece,
    TorusKnot,
    decide_icc_knot,
    decide_icc_link,
    decide_icc_nonorientable,
    decide_icc_orientable,
    manifold_group,
    poincare_variety,
    seifert_group,
    torus_knot_group,
)
from .oracle import (
    ClassBallReport,
    WitnessSequence,
    conjugacy_class_ball,
    fc_center_candidates,
    strong_icc_witness,
)
from .eisenstein import EisensteinInt, Mat2E, MatrixGroupSL2Eisenstein, figure8_group
from . import groups

__version__ = "0.1.0"
