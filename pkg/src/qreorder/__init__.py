"""Matrix reorderings, Schmidt decompositions and Kraus forms of quantum channels."""

from .channels import (
    ChannelRep,
    DynamicalMatrix,
    KrausSet,
    Side,
    Subsystem,
    Superoperator,
    apply_channel,
    apply_kraus,
    canonical_kraus,
    compose_channels,
    depolarizing_channel,
    dynamical_from_superop,
    extend_channel,
    generalized_pauli_channel,
    identity_channel,
    is_completely_positive,
    is_ppt,
    is_trace_preserving,
    is_unital,
    jamiolkowski_state,
    kraus_from_dynamical,
    partial_trace,
    partial_transpose,
    random_unitary_channel,
    superop_from_dynamical,
    superop_from_function,
    superop_from_kraus,
    to_dynamical,
    to_kraus,
    to_superoperator,
    transpose_channel,
)
from .errors import (
    ContractViolation,
    NotCompletelyPositive,
    NotTracePreserving,
    NumericalFailure,
    QReorderError,
)
from .linalg import EigResult, SvdResult, dagger, eig_hermitian, kron, matmul, svd
from .reorderings import (
    DimPair,
    res,
    reshuffle,
    reshuffle_alt,
    reshuffle_permutation,
    swap_matrix,
    transpose_permutation,
    unres,
    unvec,
    vec,
)
from .schmidt import (
    SchmidtKind,
    SchmidtResult,
    is_separable_pure,
    schmidt_number,
    schmidt_operator,
    schmidt_vector,
)

__version__ = "0.1.0"
