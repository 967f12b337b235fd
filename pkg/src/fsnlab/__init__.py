"""Formation-theoretic subgroup predicates on finite permutation groups."""

from .classify import (
    SubgroupClassification, carter_subgroups, classify_lattice, classify_subgroup, is_f_abnormal,
    is_f_projector, is_f_subnormal, is_minimal_non_f, is_schmidt_group, is_self_normalizing,
)
from .core import (
    Config, Group, QuotientGroup, Subgroup, center, centralizer, configure, conjugate_subgroup,
    contains, core, derived_series, derived_subgroup, fitting_subgroup, get_config,
    group_from_generators, is_abelian, is_nilpotent, is_normal, is_soluble, lower_central_series,
    normalizer, pcore, quotient,
)
from .corpus import GroupSpec, load_corpus, packaged_corpus, parse_group_file, render_group_spec
from .errors import ConstructionError, FsnError, InputError, ResourceCapError
from .example864 import build_example_864
from .formations import (
    ABELIAN, BUILTINS, METANILPOTENT, NILPOTENT, SOLUBLE, SUPERSOLUBLE, Formation, FormationFlags,
    belongs, formation_pi, parse_formation, pi_of_group, product_formation, residual,
)
from .groupgen import ActionSpec, direct_product, make_standard, semidirect_product
from .lattice import (
    ChainWitness, ConjugacyClassOfSubgroups, LatticeIndex, all_maximal_chains, frattini_subgroup,
    hall_pprime_subgroup, maximal_subgroups, maximal_subgroups_containing, normal_subgroups,
    primary_cyclic_subgroups, subgroup_lattice, sylow_subgroup,
)
from .permutation import Permutation, format_cycles, parse_cycles
from .verify import (
    StatementVector, VerificationReport, check_corollary3, check_statement1, check_statement2,
    check_statement3, run_corpus, verify_corollary, verify_lemma_inF, verify_lemmas, verify_theorem,
)

__version__ = "0.1.0"
