"""Exact invariants of matroids, linear codes, and symbolic powers of their
circuit ideals: generalized Hamming weights, initial degrees, Waldschmidt
constants, subadditivity classification, Rees algebra generators, and
resurgence bounds for specialized configurations.
"""

from .algebra import FieldSpec, Mat, make_field, nullspace_basis, rank_of_columns
from .codes import (
    LinearCode,
    dual_code,
    ghw_matroid_sequence,
    ghw_via_matroid,
    ghw_wei,
    ghw_wei_sequence,
    min_distance,
    weight,
)
from .configurations import (
    BoundsReport,
    SpecializedInvariants,
    resurgence_bounds,
    resurgence_sandwich,
    specialized_invariants,
)
from .families import (
    SteinerSystem,
    all_ones_code,
    complete_intersection_code,
    constant_weight_example_code,
    constant_weight_ghw,
    dual_hamming_code,
    fano_steiner,
    reed_muller_code,
    steiner_matroid,
    uniform,
    vamos,
)
from .matroid import (
    BasisMatroid,
    LinearMatroid,
    Matroid,
    UniformMatroid,
    from_bases,
    from_matrix,
)
from .symbolic import (
    DSequence,
    ReesGenerator,
    alpha_closed_form,
    alpha_fast,
    alpha_fast_witness,
    alpha_oracle,
    in_symbolic_power,
    min_squarefree_degree,
    minimal_generators_symbolic,
    rees_generators,
    regularity,
    waldschmidt,
)
from .weights import GhwSequence, SubadditivityReport, classify, ghw, paving_profile

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "Mat", "make_field", "nullspace_basis", "rank_of_columns",
    "LinearCode", "dual_code", "ghw_wei", "ghw_wei_sequence", "ghw_via_matroid",
    "ghw_matroid_sequence", "min_distance", "weight",
    "Matroid", "LinearMatroid", "UniformMatroid", "BasisMatroid",
    "from_matrix", "from_bases",
    "GhwSequence", "SubadditivityReport", "classify", "ghw", "paving_profile",
    "DSequence", "ReesGenerator", "alpha_fast", "alpha_fast_witness",
    "alpha_closed_form", "alpha_oracle", "in_symbolic_power",
    "min_squarefree_degree", "minimal_generators_symbolic", "rees_generators",
    "regularity", "waldschmidt",
    "SteinerSystem", "fano_steiner", "steiner_matroid", "uniform", "vamos",
    "reed_muller_code", "dual_hamming_code", "complete_intersection_code",
    "all_ones_code", "constant_weight_ghw", "constant_weight_example_code",
    "BoundsReport", "SpecializedInvariants", "specialized_invariants",
    "resurgence_bounds", "resurgence_sandwich",
]
