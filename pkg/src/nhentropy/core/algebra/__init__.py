# src/nhentropy/core/algebra/__init__.py
# 稠密复矩阵内核与算符构造
from .matrix import ComplexMatrix, as_matrix, require_hermitian, require_same_dim
from .operators import (
    Axis,
    NHHamiltonian,
    anticommutator,
    assemble_nh,
    bloch_vector,
    commutator,
    complex_shift,
    expectation,
    from_bloch,
    gauge_shift,
    identity,
    pauli,
)
from .spectral import SpectralDecomposition, eigenvalues, herm_eig, mat_exp, psd_log, require_psd

__all__ = [
    "ComplexMatrix",
    "as_matrix",
    "require_hermitian",
    "require_same_dim",
    "Axis",
    "NHHamiltonian",
    "anticommutator",
    "assemble_nh",
    "bloch_vector",
    "commutator",
    "complex_shift",
    "expectation",
    "from_bloch",
    "gauge_shift",
    "identity",
    "pauli",
    "SpectralDecomposition",
    "eigenvalues",
    "herm_eig",
    "mat_exp",
    "psd_log",
    "require_psd",
]
