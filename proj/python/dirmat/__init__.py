"""Dirichlet-series matrices: exact v(n,k) tables, determinant identities,
and high-precision nontrivial spectra of the associated n x n matrices."""

from ._core import (
    ConvergenceError,
    InputError,
    StructureError,
    VnkTable,
    build_A,
    build_D,
    build_E,
    charpoly_exact,
    d_table,
    det_exact,
    det_from_vnk,
    det_weighted,
    det_weighted_dirichlet,
    dirichlet_convolve,
    dirichlet_inverse,
    eig_residual,
    eigenvector_left,
    eigenvector_right,
    expanded_charpoly,
    floor_value_set,
    mertens,
    mobius_sieve,
    published_eigentable,
    published_vnk_column,
    shifted_charpoly,
    spectrum,
    spectrum_from_v,
    split_point,
    vl_nk,
    vnk_fast,
    vnk_lattice,
    vnk_naive,
    __version__,
)

__all__ = [
    "ConvergenceError",
    "InputError",
    "StructureError",
    "VnkTable",
    "build_A",
    "build_D",
    "build_E",
    "charpoly_exact",
    "d_table",
    "det_exact",
    "det_from_vnk",
    "det_weighted",
    "det_weighted_dirichlet",
    "dirichlet_convolve",
    "dirichlet_inverse",
    "eig_residual",
    "eigenvector_left",
    "eigenvector_right",
    "expanded_charpoly",
    "floor_value_set",
    "mertens",
    "mobius_sieve",
    "published_eigentable",
    "published_vnk_column",
    "shifted_charpoly",
    "spectrum",
    "spectrum_from_v",
    "split_point",
    "vl_nk",
    "vnk_fast",
    "vnk_lattice",
    "vnk_naive",
    "__version__",
]
