"""Two-base binary expansions: unique-expansion sets, lexicographic
subshifts, critical bases, entropy and dimension bounds."""

from .config import Config, DEFAULT
from .words import (
    Word,
    LetterStream,
    WordError,
    parse_word,
    compare,
    reflect,
    shift,
    extremal_suffix,
    sup0,
    inf1,
)
from .substitution import (
    Directive,
    DirectiveError,
    NodeBoundaries,
    SMapResult,
    LimitWordStream,
    parse_directive,
    apply,
    limit_word,
    node_boundaries,
    s_map,
    is_primitive,
)
from .series import pi, pi_tilde, f, f_tilde, reduce_system, DegenerateSystemError
from .solvers import Bracket, BELOW_ONE, PreconditionError, g, g_tilde, mu, critical_base
from .expansions import BasePair, DigitRun, ExpansionStream, quasi_greedy, quasi_lazy, expansion_bounds, regular
from .classify import Label, Classification, classify_omega, classify_sigma, classify_univoque
from .critical import (
    Case,
    CriticalResult,
    KsResult,
    generalized_golden_ratio,
    komornik_loreti,
    kl_fixed_point,
    ks_crosscheck,
    sample_curve,
    curve_csv,
    parse_curve_csv,
)
from .spectral import (
    SubshiftAutomaton,
    build_automaton,
    entropy,
    entropy_estimate,
    ifs_dimension,
    univoque_dimension_lower_bound,
)
from .oracle import BlockCountTable, block_count, block_count_table, block_counts, brute_classify, verify_membership

__version__ = "0.1.0"

__all__ = [
    "Config", "DEFAULT",
    "Word", "LetterStream", "WordError", "parse_word", "compare", "reflect",
    "shift", "extremal_suffix", "sup0", "inf1",
    "Directive", "DirectiveError", "NodeBoundaries", "SMapResult",
    "LimitWordStream", "parse_directive", "apply", "limit_word",
    "node_boundaries", "s_map", "is_primitive",
    "pi", "pi_tilde", "f", "f_tilde", "reduce_system", "DegenerateSystemError",
    "Bracket", "BELOW_ONE", "PreconditionError", "g", "g_tilde", "mu", "critical_base",
    "BasePair", "DigitRun", "ExpansionStream", "quasi_greedy", "quasi_lazy", "expansion_bounds", "regular",
    "Label", "Classification", "classify_omega", "classify_sigma", "classify_univoque",
    "Case", "CriticalResult", "KsResult", "generalized_golden_ratio",
    "komornik_loreti", "kl_fixed_point", "ks_crosscheck", "sample_curve",
    "curve_csv", "parse_curve_csv",
    "SubshiftAutomaton", "build_automaton", "entropy", "entropy_estimate",
    "ifs_dimension", "univoque_dimension_lower_bound",
    "BlockCountTable", "block_count", "block_count_table", "block_counts", "brute_classify", "verify_membership",
]
