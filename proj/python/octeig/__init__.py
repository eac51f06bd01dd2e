"""Real right-eigenvalue solver for 2x2 and 3x3 octonionic Hermitian matrices."""

from ._core import (
    Cluster,
    EigenPair2,
    Family,
    FamilyResiduals,
    Herm2,
    Herm3,
    Octonion,
    SolverDefect,
    Spectrum3,
    associator,
    basis,
    char_residual,
    cmd_random,
    conj_matrix,
    decompose2,
    decompose3,
    det2,
    det3,
    eigenvalues2,
    embed,
    family_eigenvalues,
    family_residuals,
    jacobi_eigenvalues,
    kernel_basis,
    parse_matrix,
    phi,
    r_roots,
    random_herm2,
    random_herm3,
    run_eigen,
    run_oracle,
    run_verify,
    serialize_matrix,
    sigma,
    solve3,
    spectrum_with_multiplicity,
    three_psi_check,
    verify_left_eigen,
    verify_right_eigen,
)

__all__ = [name for name in dir() if not name.startswith("_")]
