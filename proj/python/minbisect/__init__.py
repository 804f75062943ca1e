"""Certified minimum graph bisection via the spectral lower bound."""

from minbisect._core import (
    BisectError,
    Graph,
    apply_monotone_moves,
    brute_force_bw,
    build_fk_dual_cert,
    build_primal_cert,
    check_eigenvector_lemma,
    correction_from_bisection,
    cut_width,
    detect_isolated_pair,
    disprove_tightness,
    eval_f,
    eval_g,
    extract_bisection,
    gen_hypercube,
    gen_planted_bisection,
    gen_planted_regular,
    make_fixture,
    normalize_d,
    rank_one_value,
    recover_alpha,
    sample_monotone_moves,
    solve,
    supergradient_g,
    witness_vector,
)

__all__ = [
    "BisectError",
    "Graph",
    "apply_monotone_moves",
    "brute_force_bw",
    "build_fk_dual_cert",
    "build_primal_cert",
    "check_eigenvector_lemma",
    "correction_from_bisection",
    "cut_width",
    "detect_isolated_pair",
    "disprove_tightness",
    "eval_f",
    "eval_g",
    "extract_bisection",
    "gen_hypercube",
    "gen_planted_bisection",
    "gen_planted_regular",
    "make_fixture",
    "normalize_d",
    "rank_one_value",
    "recover_alpha",
    "sample_monotone_moves",
    "solve",
    "supergradient_g",
    "witness_vector",
]
