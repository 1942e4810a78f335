"""GIT-fans for quiver representations, with exact cones and finite-field oracles."""

from .cones import (
    Cone,
    chambers,
    cone_from_hrep,
    cone_from_rays,
    contains,
    equal,
    face_of,
    faces,
    intersect,
    relint_contains,
    relint_point,
    zero_cone,
)
from .fan import (
    DecompositionMismatch,
    Fan,
    GitConeRecord,
    Mode,
    WallSystem,
    check_decomposition,
    clear_caches,
    d_sigma,
    git_cone,
    git_equivalent,
    git_fan,
    integral_witness,
    oracle,
    sampled,
    verify_fan,
    wall_system,
)
from .genrep import (
    effective_cone,
    embeds,
    generic_ext,
    is_effective,
    is_stable_dimvector,
    stable_decomposition,
)
from .quiver import Quiver, euler_form, subdim_vectors, validate_quiver, weight_of
from .reps import (
    Rep,
    associated_graded,
    direct_sum,
    hom_dim,
    is_polystable,
    is_semistable,
    is_stable,
    isomorphic,
    jh_filtration,
    make_rep,
    orbit_cone,
    polystable_reduction,
    random_rep,
    subrep_dimvectors,
)

__version__ = "0.1.0"
