"""Construct and count numerical semigroups by genus."""
from .arith import binom, fib
from .census import CensusRow, baselines, elizalde_series, t_exact, t_lower, t_upper
from .construction import (
    build_f_lt_2m,
    build_typed,
    count_f_lt_2m,
    count_typed_g,
    count_typed_mg,
    total_f_lt_2m,
    type_of,
)
from .core import GapSemigroup, SemigroupClass, classify, frobenius, genus, is_closed, multiplicity
from .errors import ResourceLimitError
from .quad_field import QuadraticValue, bound_value, phi_pow, to_decimal
from .tree_oracle import bucket_counts, census_table, enumerate_by_genus, genus_counts
from .type_space import (
    ExponentHistogram,
    TypeDescriptor,
    count_Ak,
    enumerate_Ak,
    exponent_histogram,
    restricted_sumset_size,
    weight_exponent,
)

__version__ = "0.1.0"
