"""Stable and set-stable semantics for logic programs with naf in rule heads
and for non-flat assumption-based argumentation, with translations between
the two and an executable correspondence harness."""

from .aba import (
    AbaFramework,
    AbaRule,
    DerivationTree,
    attacks,
    closure_aba,
    derivation_tree,
    is_bipolar_aba,
    is_closed,
    is_conflict_free,
    is_flat,
    is_lp_aba,
    is_set_stable_extension,
    is_stable_extension,
    set_stable_extensions,
    stable_extensions,
    theory,
)
from .errors import (
    DomainError,
    EnumerationLimitError,
    FragmentError,
    NafabaError,
    ParseError,
    RestrictionError,
)
from .formats import parse, parse_aba, parse_lp, serialize, serialize_aba, serialize_lp
from .generate import InstanceGenConfig, generate_instance
from .lp import (
    Literal,
    LogicProgram,
    LpRule,
    ReductRule,
    closure_lp,
    herbrand_base,
    is_bipolar_lp,
    is_set_stable_model,
    is_stable_model,
    least_model,
    reduct,
    set_stable_models,
    set_stable_reduct,
    stable_models,
    supp,
)
from .translate import (
    TranslationRecord,
    aba_to_lp,
    aba_to_lp_aba,
    delta,
    lp_aba_to_lp,
    lp_to_aba,
)
from .verify import TheoremId, VerificationReport, fuzz, verify_instance

__version__ = "0.1.0"
