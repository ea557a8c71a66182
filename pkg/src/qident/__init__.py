"""Exact-arithmetic engine for nested-divisor q-series families.

The package computes truncated integer power series for four families of
weighted partition-chain sums, together with the q-Pochhammer, Gaussian
binomial, kernel, and theta machinery needed to express them in closed
form, and verifies every supported identity coefficientwise against
independent computations and brute-force combinatorial oracles.
"""

from .families import (
    FAMILIES,
    FamilySpec,
    InvalidSpec,
    atom,
    b_coefficient,
    binomial_combination,
    family_series,
    reconstruct_family,
)
from .identities import (
    REGISTRY,
    Discrepancy,
    IdentityCase,
    MissingParam,
    UnknownIdentity,
    VerifyReport,
    divisor_sum_series,
    overpartition_pair_series,
    pod_bipartition_series,
    verify,
    verify_suite,
)
from .oracles import (
    DomainError,
    b_extraction,
    divisor_sigma,
    overpartition_pairs,
    partition_count,
    partitions,
    pod_bipartitions,
    triangular,
    v_oracle,
    w_oracle,
)
from .qtools import (
    HALF,
    INFINITE,
    WHOLE,
    PochSpec,
    alt_triangular_sum,
    gaussian_binomial,
    kernel_H,
    phi2_1,
    pochhammer,
    theta_phi_neg,
    theta_psi,
)
from .series import (
    ExactSeries,
    ExponentOutOfOrder,
    NonUnitConstantTerm,
    add,
    coeff,
    from_coeffs,
    invert,
    monomial,
    mul,
    one,
    scale,
    shift,
    substitute_power,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "ExactSeries", "ExponentOutOfOrder", "NonUnitConstantTerm",
    "add", "coeff", "from_coeffs", "invert", "monomial", "mul", "one",
    "scale", "shift", "substitute_power", "zero",
    "INFINITE", "HALF", "WHOLE", "PochSpec",
    "pochhammer", "gaussian_binomial", "kernel_H", "phi2_1",
    "theta_phi_neg", "theta_psi", "alt_triangular_sum",
    "FAMILIES", "FamilySpec", "InvalidSpec",
    "atom", "family_series", "b_coefficient",
    "binomial_combination", "reconstruct_family",
    "DomainError", "partitions", "partition_count",
    "v_oracle", "w_oracle", "overpartition_pairs", "pod_bipartitions",
    "divisor_sigma", "triangular", "b_extraction",
    "Discrepancy", "IdentityCase", "VerifyReport",
    "UnknownIdentity", "MissingParam", "REGISTRY",
    "verify", "verify_suite",
    "overpartition_pair_series", "pod_bipartition_series", "divisor_sum_series",
    "__version__",
]
