"""Recognition, constructive perfect division and exhaustive verification for
(fork, antifork+K1)-free graphs."""

from perfdiv.decomposition import (
    ClassViolationError,
    HoleDecomposition,
    PipelineFailure,
    PropertyReport,
    SSelection,
    TierNotApplicableError,
    build_S,
    check_properties,
    choose_base,
    classify_around_hole,
    color_via_divisions,
    extend_division,
    perfect_divide,
)
from perfdiv.divisibility import (
    Division,
    DivisionCheck,
    ResourceLimitError,
    anti_divider_everywhere,
    divide_by_anti_nbhd,
    find_perfect_division,
    is_perfectly_divisible,
    verify_division,
)
from perfdiv.graph import (
    Graph,
    GraphFormatError,
    UnsupportedSizeError,
    anti_neighborhood,
    complement,
    disjoint_union,
    from_graph6,
    induced_subgraph,
    is_anticomplete_to,
    is_clique,
    is_complete_to,
    is_stable,
    join,
    members,
    neighbors,
    set_neighborhood,
    to_graph6,
    vset,
)
from perfdiv.kernels import BACKEND
from perfdiv.patterns import Embedding, Pattern, balloon, catalog, find_induced, get_pattern, in_class, is_free, is_homogeneous_set
from perfdiv.perfection import (
    Coloring,
    HoleCertificate,
    all_maximum_cliques,
    chromatic_number,
    clique_number,
    color_perfect,
    find_odd_antihole,
    find_odd_hole,
    is_k_colorable,
    is_perfect,
    max_clique,
)

__version__ = "0.1.0"
