"""Complete residue systems, exact roots of unity, and p-th root branch selection."""

from .branches import (
    BranchSearchReport,
    BranchVector,
    BudgetExceeded,
    CollapsedSet,
    NoSolution,
    apply_branches,
    branch_root,
    brute_force_branch_search,
    rational_power_power_first,
    rational_power_root_first,
    solve_branch_vector,
)
from .crs import (
    CrsCandidate,
    ResidueProfile,
    affine,
    canonical_crs,
    is_crs,
    residue_profile,
    scale,
    shift_multiples,
)
from .cyclo import (
    CyclotomicPoint,
    RootSet,
    equals_omega,
    eval_complex,
    exponent_set,
    omega_set,
    point_from_exponent,
    power_set,
)
from .modcore import (
    DomainError,
    NotInvertible,
    canonical_residue,
    congruent,
    egcd,
    gcd,
    mod_inverse,
)

__version__ = "0.1.0"
