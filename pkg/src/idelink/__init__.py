"""idelink: exact integer-lattice calculus for braid-closure link universes.

The package builds link universes from braid words, lifts them through
cyclic covers branched over the braid axis, and decides norm-principle
style identities between principal, pushforward, and meridian lattices
as exact integer computations.  See the CLI (``idelink --help``) for the
scenario-file front end.
"""

__version__ = "0.1.0"

from .kernel import BACKEND as KERNEL_BACKEND
from .links import (
    BraidWord,
    LinkUniverse,
    braid_components,
    braid_linking_matrix,
    braid_permutation,
    braid_power,
    relabeled_universe,
    universe_from_braid,
)
from .zlattice import (
    AbelianInvariants,
    IntMatrix,
    SubLattice,
    hnf,
    kernel_lattice,
    lattice_equal,
    lattice_intersect,
    lattice_member,
    lattice_sum,
    preimage_lattice,
    quotient_invariants,
    relative_quotient_invariants,
    snf,
)
from .ideles import (
    IdeleVector,
    MeridianSubgroup,
    SurfaceClass,
    boundary_punctured_surface,
    class_quotient,
    diagonal_map,
    include_class,
    meridian_subgroup,
    principal_lattice,
    project_idele,
)
from .covers import (
    ComponentSplitting,
    CoverData,
    CoverSpec,
    SplitRecord,
    branched_cover_order,
    component_splitting,
    deck_action,
    deck_matrix,
    lift_braid,
    lift_universe,
    principal_pushforward,
    pushforward_idele,
    pushforward_image,
    pushforward_matrix,
    pushforward_surface,
    relabeled_cover,
)
from .hasse import (
    CHECKS,
    CheckRecord,
    SuiteResult,
    VerificationReport,
    run_scenario,
    run_suite,
)

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # zlattice
    "AbelianInvariants",
    "IntMatrix",
    "SubLattice",
    "hnf",
    "snf",
    "kernel_lattice",
    "lattice_equal",
    "lattice_intersect",
    "lattice_member",
    "lattice_sum",
    "preimage_lattice",
    "quotient_invariants",
    "relative_quotient_invariants",
    # links
    "BraidWord",
    "LinkUniverse",
    "braid_components",
    "braid_linking_matrix",
    "braid_permutation",
    "braid_power",
    "relabeled_universe",
    "universe_from_braid",
    # ideles
    "IdeleVector",
    "MeridianSubgroup",
    "SurfaceClass",
    "boundary_punctured_surface",
    "class_quotient",
    "diagonal_map",
    "include_class",
    "meridian_subgroup",
    "principal_lattice",
    "project_idele",
    # covers
    "ComponentSplitting",
    "CoverData",
    "CoverSpec",
    "SplitRecord",
    "branched_cover_order",
    "component_splitting",
    "deck_action",
    "deck_matrix",
    "lift_braid",
    "lift_universe",
    "principal_pushforward",
    "pushforward_idele",
    "pushforward_image",
    "pushforward_matrix",
    "pushforward_surface",
    "relabeled_cover",
    # hasse
    "CHECKS",
    "CheckRecord",
    "SuiteResult",
    "VerificationReport",
    "run_scenario",
    "run_suite",
]
