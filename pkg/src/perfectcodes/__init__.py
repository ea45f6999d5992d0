"""Perfect binary codes, Steiner triple systems and the Mollard construction."""

__version__ = "0.1.0"

from .bitcode import (
    BinaryCode,
    BitWord,
    ExplicitCode,
    LinearCode,
    dual,
    hamming_code,
    is_perfect,
    kernel,
    min_distance,
    nonlinear_lambda,
    rank,
    vasilev,
    weight3_words,
)
from .design import (
    SteinerLoop,
    TripleSystem,
    check_nu_identities,
    is_projective,
    lin_nu,
    loop_of,
    pasch_count_at,
    sts_automorphisms,
    sts_of_code,
    subdesign,
)
from .errors import (
    ConstructionBug,
    CorruptCode,
    CorruptDesign,
    InvalidInput,
    InvalidParameter,
    NotClosed,
    PerfectCodesError,
    ResourceLimit,
    TheoryViolation,
)
from .fundpart import FundamentalPartition, fundamental_partition, heden_loop, mollard_partition, respects_partition
from .linearity import check_hamming_on_linmu, check_linmu_subset_linnu, lin_mu, mu, mu_profile
from .mollard import GridCoords, MollardCode, decompose, kernel_membership, mollard, mollard_dual, mollard_mu, mollard_sts
from .perm import Permutation, PermGroup, group_closure
from .symmetry import dub1, dub2, in_T, is_symmetry, ort, ort_sts, stab_setwise, sym_group
from .verify import verify_lemmas, verify_mollard, verify_theorem2, verify_theorem3
