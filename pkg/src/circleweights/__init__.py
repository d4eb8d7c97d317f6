"""Exact fixed-point data of circle actions on oriented manifolds.

The package works with the combinatorial shadow of an S^1-action with
isolated fixed points: for each fixed point a sign and a list of positive
integer weights.  It evaluates the Atiyah-Singer signature expression
exactly, checks the weight-pairing consequences, builds pairings, and
enumerates consistent datasets for small parameters.
"""

from circleweights.errors import (
    CircleWeightsError,
    DomainError,
    EmptyDatasetError,
    IncompletePartitionError,
    InconsistentDataError,
    InfeasiblePairingError,
    InvalidDatasetError,
    InvalidWeightError,
    NonEffectiveWarning,
    ParityError,
    PartitionError,
    SearchLimitExceeded,
    TruncationMismatchError,
)
from circleweights.series import (
    ExactPolynomial,
    TruncatedSeries,
    geometric_factor,
    poly_mul,
    series_mul,
)
from circleweights.model import (
    ComponentEntry,
    ComponentPartition,
    Dataset,
    FixedPoint,
    ValidationReport,
    effectiveness_gcd,
    multiplicity,
    normalize_by_gcd,
    validate,
)
from circleweights.index import (
    ConstancyVerdict,
    closed_form_coefficient,
    contribution_series,
    exact_constancy,
    signature,
    signature_series,
)
from circleweights.theorems import (
    BalanceReport,
    Occurrence,
    Pairing,
    build_pairing,
    check_component_balance,
    check_min_weight_balance,
    check_parity,
    check_point_bound,
    pairing_violations,
)
from circleweights.generators import (
    complex_projective,
    product,
    reverse_orientation,
    sphere,
)
from circleweights.enumeration import (
    SearchSpace,
    enumerate_consistent,
    question_scan,
)

__version__ = "0.1.0"
