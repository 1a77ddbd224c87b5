"""Exact-arithmetic cohomology for Zinbiel algebras and their tensor Lie algebras."""

from .algebras import AxiomReport, Bimodule, FiniteAlgebra, check_axioms, regular
from .catalog import BUILTIN_NAMES, builtin, perturbed_b2
from .complexes import (
    CE_MAX_DEGREE,
    DL_MAX_DEGREE,
    Cochain,
    CohomologyDims,
    ce_delta,
    ce_delta_matrix,
    ce_space_dim,
    cochain_to_vector,
    cohomology_dims,
    dl_delta,
    dl_delta_lowdeg,
    dl_delta_matrix,
    dl_space_dim,
    random_dl_cochain,
    vector_to_cochain,
)
from .fileio import (
    load_algebra,
    load_bimodule,
    save_algebra,
    save_bimodule,
)
from .free_leibniz import build_truncated, word_bracket, words
from .linalg import Matrix, format_scalar, parse_scalar
from .shuffles import (
    leibniz_expansion,
    net_signed_shuffle_terms,
    permutation_sign,
    shuffles1,
    signed_shuffle_terms,
)
from .tensor_bridge import (
    ChainMapReport,
    PsiNotInjectiveError,
    TensorContext,
    les_report,
    psi_apply,
    psi_matrix,
    tensor_lie,
    tensor_module,
    verify_chain_map,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "Bimodule",
    "BUILTIN_NAMES",
    "CE_MAX_DEGREE",
    "ChainMapReport",
    "Cochain",
    "CohomologyDims",
    "DL_MAX_DEGREE",
    "FiniteAlgebra",
    "Matrix",
    "PsiNotInjectiveError",
    "TensorContext",
    "build_truncated",
    "builtin",
    "ce_delta",
    "ce_delta_matrix",
    "ce_space_dim",
    "check_axioms",
    "cochain_to_vector",
    "cohomology_dims",
    "dl_delta",
    "dl_delta_lowdeg",
    "dl_delta_matrix",
    "dl_space_dim",
    "format_scalar",
    "leibniz_expansion",
    "les_report",
    "load_algebra",
    "load_bimodule",
    "net_signed_shuffle_terms",
    "parse_scalar",
    "permutation_sign",
    "perturbed_b2",
    "psi_apply",
    "psi_matrix",
    "random_dl_cochain",
    "regular",
    "save_algebra",
    "save_bimodule",
    "shuffles1",
    "signed_shuffle_terms",
    "tensor_lie",
    "tensor_module",
    "vector_to_cochain",
    "verify_chain_map",
    "word_bracket",
    "words",
    "__version__",
]
