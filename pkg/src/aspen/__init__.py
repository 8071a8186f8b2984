"""Ground logic-program workbench: semantics, splitting solvers, extremal families."""

from .extremal import (
    Bound,
    Signature,
    canonical_program,
    decompose_234,
    extremal_program,
    gen_D,
    gen_named,
    generate_from_spec,
    is_extremal_member,
    max_stable,
    program_234,
    s0,
    shift,
)
from .families import (
    EncodingReport,
    encode_antichain,
    encoding_size_report,
    format_family,
    is_antichain,
    make_witness_random,
    models_as_family,
    parse_family,
    witness_greatest,
    witness_least,
)
from .semantics import (
    ModelFamily,
    brute_force_answer_sets,
    brute_force_stable,
    generating_rules,
    gl_reduct,
    is_answer_set,
    is_minimal_model,
    is_model,
    is_stable,
    least_model,
)
from .solver import (
    Heuristics,
    QueryAnswer,
    QueryMode,
    SearchDepthExceeded,
    SearchStats,
    select_atom_default,
    solve_query,
    stable_models_a,
    stable_models_h,
    stable_models_r,
)
from .syntax import (
    Atom,
    DuplicateLiteralWarning,
    ParseError,
    Program,
    ProgramBuilder,
    Rule,
    format_atom_set,
    format_model,
    parse_program,
    print_program,
    program_size,
)
from .transform import (
    atom_reduct_neg,
    atom_reduct_pos,
    overline,
    remove_redundant_rules,
    rule_reduct_neg,
    rule_reduct_pos,
    simp,
)
from .wfs import ImpliedSetResult, WfsResult, implied_set, well_founded

__all__ = [
    "Atom",
    "Bound",
    "DuplicateLiteralWarning",
    "EncodingReport",
    "Heuristics",
    "ImpliedSetResult",
    "ModelFamily",
    "ParseError",
    "Program",
    "ProgramBuilder",
    "QueryAnswer",
    "QueryMode",
    "Rule",
    "SearchDepthExceeded",
    "SearchStats",
    "Signature",
    "WfsResult",
    "atom_reduct_neg",
    "atom_reduct_pos",
    "brute_force_answer_sets",
    "brute_force_stable",
    "canonical_program",
    "decompose_234",
    "encode_antichain",
    "encoding_size_report",
    "extremal_program",
    "format_atom_set",
    "format_family",
    "format_model",
    "gen_D",
    "gen_named",
    "generate_from_spec",
    "generating_rules",
    "gl_reduct",
    "implied_set",
    "is_answer_set",
    "is_antichain",
    "is_extremal_member",
    "is_minimal_model",
    "is_model",
    "is_stable",
    "least_model",
    "make_witness_random",
    "max_stable",
    "models_as_family",
    "overline",
    "parse_family",
    "parse_program",
    "print_program",
    "program_234",
    "program_size",
    "remove_redundant_rules",
    "rule_reduct_neg",
    "rule_reduct_pos",
    "s0",
    "select_atom_default",
    "shift",
    "simp",
    "solve_query",
    "stable_models_a",
    "stable_models_h",
    "stable_models_r",
    "well_founded",
    "witness_greatest",
    "witness_least",
]
