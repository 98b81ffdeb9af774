"""Exact and asymptotic counting for 2 x n rectangle partitions."""

from ._core import (
    almkvist_asym,
    asym_preset,
    b_full,
    b_i0,
    b_ij,
    b_m,
    benford_expected,
    cli_run,
    closed_form_table1,
    congruence_predict,
    digits_base,
    euler_p,
    euler_p_table,
    eval_asym,
    fit_p_k1,
    gt_singular,
    log_eval_asym,
    log_ratio_diag,
    murty_convolve,
    nuclear_q,
    oracle_count_multisets,
    oracle_count_symmetric,
    p2,
    p2_table,
    p_k1,
    p_k1_table,
    p_kl,
    p_max_part,
    p_multiset,
    p_tilde,
    p_two_parts,
    r_no_subsum,
    s_count,
    t_count,
    two_colored_q2,
    verify_bounds,
    verify_congruences,
)

__all__ = [name for name in dir() if not name.startswith("_")]
