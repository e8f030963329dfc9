"""Max-plus algebra and global optimization over an affine constraint."""

from maxplusopt._core import (
    DEFAULT_TOL,
    EPS,
    INF,
    DimensionMismatch,
    EmptyObjective,
    Matrix,
    MaxPlusError,
    OptProblem,
    OracleVerdict,
    ParseError,
    PreprocessReport,
    SampleConfig,
    SolveReport,
    UndefinedExtOp,
    check_criterion,
    construct_alternative,
    evaluate,
    ext_scale,
    ext_sub,
    format_problem,
    greatest_lower_bound,
    greatest_subsolution,
    is_system_solvable,
    leq,
    mat_leq,
    mat_oplus,
    mat_otimes,
    mat_vec,
    oplus,
    otimes,
    parse_problem,
    preprocess,
    render_report_json,
    render_report_text,
    sample_constraint_points,
    solve,
    verify_lower_bound,
    verify_optimality,
)

__all__ = [
    "DEFAULT_TOL",
    "EPS",
    "INF",
    "DimensionMismatch",
    "EmptyObjective",
    "Matrix",
    "MaxPlusError",
    "OptProblem",
    "OracleVerdict",
    "ParseError",
    "PreprocessReport",
    "SampleConfig",
    "SolveReport",
    "UndefinedExtOp",
    "check_criterion",
    "construct_alternative",
    "evaluate",
    "ext_scale",
    "ext_sub",
    "format_problem",
    "greatest_lower_bound",
    "greatest_subsolution",
    "is_system_solvable",
    "leq",
    "mat_leq",
    "mat_oplus",
    "mat_otimes",
    "mat_vec",
    "oplus",
    "otimes",
    "parse_problem",
    "preprocess",
    "render_report_json",
    "render_report_text",
    "sample_constraint_points",
    "solve",
    "verify_lower_bound",
    "verify_optimality",
]
