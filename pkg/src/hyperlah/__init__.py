"""Exact Ehrhart polynomials of hypersimplices and weighted Lah numbers.

Every quantity is computed in exact integer or rational arithmetic, by
several independent methods that the test suite and the `crosscheck`
CLI command compare against each other and against brute-force
enumeration.
"""

from ._kernels import kernel_backend
from .combinat import (
    binomial,
    eulerian,
    factorial,
    lah,
    stirling1_unsigned,
    sym_range_product,
)
from .ehrhart import (
    EHRHART_METHODS,
    EhrhartResult,
    HypersimplexParams,
    cnm_polynomial,
    ehrhart_coefficient_stirling,
    ehrhart_coefficient_wlah,
    ehrhart_interpolated,
    ehrhart_katzman,
    ehrhart_polynomial,
    f_coefficient,
    lattice_point_count,
)
from .errors import CapacityError
from .partitions import (
    OrderedSetPartition,
    enumerate_ordered_partitions,
    partition_weight,
)
from .polynomial import Polynomial, interpolate, rational_str, t_binomial
from .series import BivariateSeries, series_log_term
from .weighted_lah import WLAH_METHODS, wlah, wlah_table

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "kernel_backend",
    "factorial",
    "binomial",
    "stirling1_unsigned",
    "eulerian",
    "lah",
    "sym_range_product",
    "Polynomial",
    "t_binomial",
    "interpolate",
    "rational_str",
    "BivariateSeries",
    "series_log_term",
    "OrderedSetPartition",
    "enumerate_ordered_partitions",
    "partition_weight",
    "WLAH_METHODS",
    "wlah",
    "wlah_table",
    "EHRHART_METHODS",
    "HypersimplexParams",
    "EhrhartResult",
    "ehrhart_katzman",
    "ehrhart_interpolated",
    "ehrhart_polynomial",
    "lattice_point_count",
    "f_coefficient",
    "ehrhart_coefficient_stirling",
    "ehrhart_coefficient_wlah",
    "cnm_polynomial",
    "CapacityError",
]
