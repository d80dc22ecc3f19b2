"""Closed-form solver for linear quaternionic equations."""

from ._quatsolve import (
    DegenerateInput,
    LinearEquation,
    Quaternion,
    SingularSystem,
    SolveReport,
    Summation,
    adjugate4,
    assemble_A,
    assemble_M,
    bracket4,
    delta,
    det4,
    gauss_solve,
    phi_apply,
    solve,
    solve_general,
    solve_oracle,
    solve_sylvester,
    solve_two_term,
    solve_with_conjugate,
    tri_dual,
)

__all__ = [
    "DegenerateInput",
    "LinearEquation",
    "Quaternion",
    "SingularSystem",
    "SolveReport",
    "Summation",
    "adjugate4",
    "assemble_A",
    "assemble_M",
    "bracket4",
    "delta",
    "det4",
    "gauss_solve",
    "phi_apply",
    "solve",
    "solve_general",
    "solve_oracle",
    "solve_sylvester",
    "solve_two_term",
    "solve_with_conjugate",
    "tri_dual",
]
