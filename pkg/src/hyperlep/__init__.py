"""Finite hyperoperations derived from conservation laws, with axiom checks and subgroup censuses."""

from .axioms import (
    HV_GROUP,
    HYPERGROUP,
    HYPERGROUPOID,
    SEMIHYPERGROUP,
    AxiomReport,
    TripleViolation,
    ViolationLists,
    associativity_violations,
    check_reproduction,
    check_weak_associativity,
    classify,
    is_commutative,
    is_strongly_associative,
)
from .conservation import (
    ParseError,
    Particle,
    ParticleSet,
    QuantumNumbers,
    derive_nary,
    derive_table,
    leptons,
    load_particles,
    parse_particles,
)
from .hypercore import (
    Carrier,
    CarrierMismatchError,
    EmptyOperandError,
    HyperError,
    HyperTable,
    NAryHyperOp,
    SubsetMask,
    conjugation_map,
    lift_to_powerset,
    nary_subset_extension,
    restrict_to_singletons,
    subset_product,
)
from .substructures import (
    InclusionLattice,
    SubgroupCensus,
    closure_of,
    enumerate_subgroups,
    inclusion_lattice,
    is_closed,
    verify_reproduction_within,
)

__version__ = "0.1.0"
