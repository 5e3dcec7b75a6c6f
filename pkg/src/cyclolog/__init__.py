"""Logarithmic lattices of cyclotomic units: bounds and exact measurements."""

from cyclolog.bounds import (
    BoundReport,
    bound_corollary,
    bound_dearaujo,
    bound_new,
    bound_report,
    lemma2_envelope,
    lemma2_sum,
    lemma3_bound,
    lemma4_bound,
    lemma5_phi_upper,
)
from cyclolog.embedding import (
    LogVector,
    RamachandraUnitLog,
    log_sin_vector,
    ramachandra_basis,
    ramachandra_log,
)
from cyclolog.numtheory import (
    Modulus,
    SubsetDivisor,
    embedding_indices,
    gamma_subsets,
    make_modulus,
    unit_labels,
)

__version__ = "0.1.0"
