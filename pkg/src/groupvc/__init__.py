"""VC-dimension of translate families and random Cayley graphs over finite groups."""

from .errors import (
    CapacityError,
    EmptyFamilyError,
    FrontierCapError,
    GroupValidationError,
)
from .groups import (
    FiniteGroup,
    from_cayley_table,
    group_family,
    group_from_descriptor,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    read_cayley_table,
    validate_group,
    write_cayley_table,
)
from .setsystem import (
    Subset,
    Trace,
    TranslateFamily,
    cuts_out,
    explicit_family,
    is_shattered,
    left_translate,
    restriction,
    sisask_family,
    translate_family,
    vc_dim,
    vc_dim_naive,
)
from .cayley import (
    Digraph,
    cayley_digraph,
    cayley_sum_graph,
    closed_neighborhood_family,
    neighborhood_family,
)
from .sampling import (
    SeededRng,
    bernoulli_subset,
    derive_rng,
    symmetrize,
    uniform_fixed_size,
)
from .tiling import (
    Cover,
    Packing,
    abelian_cover_shortcut,
    greedy_cover,
    greedy_disjoint_translates,
    product_set,
)
from .residues import (
    ResidueSet,
    is_prime,
    paley_digraph,
    power_residues,
    residue_experiment,
)
from .experiments import (
    CutoutResult,
    ExperimentRecord,
    Summary,
    cutout_probability,
    emit_csv,
    emit_json,
    parse_csv,
    run_lln,
    summarize,
)

__all__ = [
    "CapacityError",
    "Cover",
    "CutoutResult",
    "Digraph",
    "EmptyFamilyError",
    "ExperimentRecord",
    "FiniteGroup",
    "FrontierCapError",
    "GroupValidationError",
    "Packing",
    "ResidueSet",
    "SeededRng",
    "Subset",
    "Summary",
    "Trace",
    "TranslateFamily",
    "abelian_cover_shortcut",
    "bernoulli_subset",
    "cayley_digraph",
    "cayley_sum_graph",
    "closed_neighborhood_family",
    "cutout_probability",
    "cuts_out",
    "derive_rng",
    "emit_csv",
    "emit_json",
    "explicit_family",
    "from_cayley_table",
    "greedy_cover",
    "greedy_disjoint_translates",
    "group_family",
    "group_from_descriptor",
    "is_prime",
    "is_shattered",
    "left_translate",
    "make_cyclic",
    "make_dihedral",
    "make_direct_product",
    "neighborhood_family",
    "paley_digraph",
    "parse_csv",
    "power_residues",
    "product_set",
    "read_cayley_table",
    "residue_experiment",
    "restriction",
    "run_lln",
    "sisask_family",
    "summarize",
    "symmetrize",
    "translate_family",
    "uniform_fixed_size",
    "validate_group",
    "vc_dim",
    "vc_dim_naive",
    "write_cayley_table",
]

__version__ = "0.1.0"
