"""Exact computation of higher order spt-functions and the rank/crank moment identities around them."""

from .congruences import SPECS, CongruenceSpec, check_congruence, s3, s4, skbt_series
from .moments import (
    moment_vector,
    ordinary_from_symmetrized,
    ordinary_moment,
    stirling_star,
    symmetrized_crank_series,
    symmetrized_moment,
    symmetrized_rank_series,
    verify_inequality,
)
from .partitions import (
    Partition,
    StatTable,
    build_stat_table,
    crank,
    crank_table_from_gf,
    partitions_of,
    rank,
    rank_table_from_gf,
    residue_count,
    stat_table,
)
from .report import VerificationReport
from .series import LaurentZSeries, TruncatedSeries, series_inv, series_mul
from .spt import (
    CRANK_PAIR,
    RANK_PAIR,
    a_k_series,
    spt_combinatorial,
    spt_from_moments,
    spt_series,
    weight,
)

__version__ = "0.1.0"
