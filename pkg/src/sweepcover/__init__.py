"""Counting decorated sweep covers (coloured maximal antichains) in n-ary
tree posets, with exact enumeration, singularity analysis of the
generating function and checks of the accompanying bounds."""

__version__ = "0.1.0"

from .combinatorics import (  # noqa: E402
    Composition,
    IntPolynomial,
    bell,
    binomial,
    compositions,
    eulerian,
    stirling2,
    touchard,
)
from .exceptions import ConsistencyError, ConvergenceError, ResourceCapExceeded  # noqa: E402
from .recurrence import DscTable, check_growth_step, f_table, total_dsc  # noqa: E402
from .series import IntegerSeries, phi_apply, solve_ogf  # noqa: E402
from .singularity import (  # noqa: E402
    SingularityReport,
    asymptotic_table,
    characteristic_residual,
    solve_singularity,
    verify_growth_theorem,
)
from .tree import (  # noqa: E402
    TreePoset,
    build_nary_truncation,
    census_lower_dsc,
    count_dsc_on_antichain,
    maximal_antichains,
    sibling_decomposition,
)
