"""Finite hyperquasigroups and their intuitionistic fuzzy sub-hyperquasigroups."""

from .errors import *  # noqa: F401,F403
from .families import (
    all_hyperquasigroups,
    block4,
    pair,
    random_hyperquasigroup,
    regular_closure,
    total,
    zgroup,
)
from .fundamental import (
    FundamentalResult,
    Partition,
    Quasigroup,
    beta_star,
    check_if_subquasigroup,
    finite_products,
    fundamental_quasigroup,
    pushforward,
)
from .grades import Grade, grade, grade_complement, grade_parse
from .hyperstructures import (
    AxiomReport,
    Hypergroupoid,
    Verdict,
    check_axioms,
    elements,
    enumerate_subs,
    is_sub_hyperquasigroup,
    mask_of,
    restrict,
)
from .ifs import (
    IFS,
    IntuitionisticFuzzySet,
    box,
    characteristic_ifs,
    combine,
    diamond,
    ifs_complement,
    ifs_subset,
    ifs_validate,
    level_cut,
    modal,
    reconstruct,
    zero_ifs,
)
from .ifsh import (
    LevelChain,
    build_characteristic,
    build_from_chain,
    build_two_level,
    check_fuzzy_subhq,
    check_ifsh,
    check_ifsh_via_cuts,
)
from .relations import (
    IfshFamily,
    FamilyPartition,
    canonical_family,
    classify,
    level_map,
    verify_equipotence,
)
from .textio import (
    parse_chain,
    parse_hqg,
    parse_ifs,
    parse_qsg,
    serialize_chain,
    serialize_hqg,
    serialize_ifs,
    serialize_quasigroup,
)

__version__ = "0.1.0"
