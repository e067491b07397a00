"""Exact arithmetic for circular units of Z[alpha], alpha a 2^n-th root of
unity, their mod-2 congruence calculus, the funnel subgroups F and sqrt(F),
and the induced units of the group ring Z[C_{2^n}]."""

from .circular_units import (
    PWord,
    UnitWord,
    beta,
    d_index_set,
    eval_p_word,
    eval_word,
    fold_d_index,
    independence_rank,
    p_word_is_unit,
    p_word_to_unit_word,
    parse_word,
)
from .congruence import (
    Certificate,
    F2System,
    Mod2WordValue,
    e_membership,
    galois_transport_check,
    p_factor,
    p_factor_indices,
    q_power_identities,
    verify_main_theorem,
    word_mod2,
)
from .cyclotomic import CycInt, Level
from .errors import (
    CircUnitsError,
    DisagreementError,
    EvenGaloisIndex,
    IndexNotInPartition,
    IndexOutOfRange,
    InternalInconsistency,
    LevelMismatch,
    LevelTooSmall,
    NonRealWord,
    NotAUnit,
    NotIntegral,
    NotReal,
)
from .funnel import (
    FunnelPartition,
    GeneratorSystem,
    LabeledWord,
    build_partition,
    f_generators,
    generator_system,
    q_word,
    sqrt_over_f_generators,
)
from .group_ring import (
    AdmissibleUnit,
    GroupRingElt,
    V1Report,
    gr_mul,
    is_admissible,
    u_chi1,
    v1_generators,
)
from .real_basis import (
    RealElem,
    SpecialCoordsMod2,
    canonical_r_token,
    canonical_s_token,
    from_special_basis,
    r_table_tokens,
    rtilde_member,
    s_table_tokens,
    seq_d,
    seq_r,
    seq_s,
    special_mod2,
    to_s_basis,
    to_special_basis,
)
from .version import TOOL_VERSION

__version__ = TOOL_VERSION

__all__ = [
    "AdmissibleUnit",
    "Certificate",
    "CircUnitsError",
    "CycInt",
    "DisagreementError",
    "EvenGaloisIndex",
    "F2System",
    "FunnelPartition",
    "GeneratorSystem",
    "GroupRingElt",
    "IndexNotInPartition",
    "IndexOutOfRange",
    "InternalInconsistency",
    "LabeledWord",
    "Level",
    "LevelMismatch",
    "LevelTooSmall",
    "Mod2WordValue",
    "NonRealWord",
    "NotAUnit",
    "NotIntegral",
    "NotReal",
    "PWord",
    "RealElem",
    "SpecialCoordsMod2",
    "TOOL_VERSION",
    "UnitWord",
    "V1Report",
    "beta",
    "build_partition",
    "canonical_r_token",
    "canonical_s_token",
    "d_index_set",
    "e_membership",
    "eval_p_word",
    "eval_word",
    "f_generators",
    "fold_d_index",
    "from_special_basis",
    "galois_transport_check",
    "generator_system",
    "gr_mul",
    "independence_rank",
    "is_admissible",
    "p_factor",
    "p_factor_indices",
    "p_word_is_unit",
    "p_word_to_unit_word",
    "parse_word",
    "q_power_identities",
    "q_word",
    "r_table_tokens",
    "rtilde_member",
    "s_table_tokens",
    "seq_d",
    "seq_r",
    "seq_s",
    "special_mod2",
    "sqrt_over_f_generators",
    "to_s_basis",
    "to_special_basis",
    "u_chi1",
    "v1_generators",
    "verify_main_theorem",
    "word_mod2",
]
