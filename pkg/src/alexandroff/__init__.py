"""Exact toolkit for finite Alexandroff spaces, their hyperspaces, and flows on them."""
from .enumeration import enumerate_topologies
from .errors import (
    BudgetExceeded,
    CarrierMismatch,
    ConsistencyError,
    DuplicateLabel,
    InvalidCandidate,
    MalformedInput,
    MissingEmptyOrFull,
    NotAPreorder,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotDiscrete,
    NotT0,
    TopologyError,
)
from .flows import (
    UNBOUNDED,
    Axiom,
    AxiomResult,
    FlowCandidate,
    FlowVerdict,
    StepSchedule,
    check_continuity,
    check_group_law,
    check_identity_at_zero,
    evaluate,
    is_flow,
    is_trivial,
    local_stability_radius,
    normalize,
    search_flows,
    swap_candidate,
    trivial_candidate,
)
from .hyperspace import (
    Comparison,
    Hyperspace,
    Variant,
    build_hyperspace,
    compare_topologies,
    discrete_space,
    embed_into_upper,
    hyper_order,
    intersection_of_all_opens,
    minimal_hyper_neighborhood,
    subbasic_L,
)
from .space import (
    FiniteSpace,
    PointMap,
    Preorder,
    enumerate_homeomorphisms,
    is_continuous,
    is_discrete,
    is_embedding,
    is_homeomorphism,
    is_order_preserving,
    is_T0,
    is_T1,
    minimal_open_neighborhood,
    specialization_preorder,
    topology_from_preorder,
    validate_space,
)
from .timeset import Interval, TimeSet

__version__ = "0.1.0"
