"""Mirror categories of elementary birational cobordisms."""

from ._circuitcat import (
    Circuit,
    CircuitError,
    amodel,
    bmodel,
    check_koszul_duality,
    chi,
    chi_inv,
    decompose,
    emit_dot,
    geometric_oracle,
    grading,
    gram,
    half_twist,
    info,
    intersection_count,
    intersection_indices,
    monomials_of_weight,
    multiply,
    mutate_left,
    mutate_right,
    negate,
    quiver,
    signature,
    verify_iso,
    volume,
)

__all__ = [
    "Circuit",
    "CircuitError",
    "amodel",
    "bmodel",
    "check_koszul_duality",
    "chi",
    "chi_inv",
    "decompose",
    "emit_dot",
    "geometric_oracle",
    "grading",
    "gram",
    "half_twist",
    "info",
    "intersection_count",
    "intersection_indices",
    "monomials_of_weight",
    "multiply",
    "mutate_left",
    "mutate_right",
    "negate",
    "quiver",
    "signature",
    "verify_iso",
    "volume",
]
