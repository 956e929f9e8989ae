"""Loewy series, socles, and duality functors for basic quiver algebras.

Everything is exact arithmetic over a small prime field: algebras are
admissible quotients of truncated path algebras given by dense structure
tensors, modules are action-matrix tuples, and the socle/radical series,
linear and algebra duals, the Nakayama functor, and the layer-multiplicity
tables are all computed by Gaussian elimination mod p.  The verify module
turns the structural theorems relating these objects into executable
checks.
"""

from .algebra import (
    Algebra,
    Arrow,
    Quiver,
    Relation,
    SymmetryResult,
    build_path_algebra,
    is_symmetric,
)
from .corpus import default_corpus, linear_quiver_algebra, random_quiver_spec
from .linalg import PrimeField, Subspace, as_matrix, image, kernel, rank, rref, solve
from .modules import (
    ADualModule,
    IsoSearchResult,
    Module,
    ModuleMap,
    SubquotientModule,
    a_dual,
    f_dual,
    f_dual_map,
    find_isomorphism,
    hom_space,
    injective,
    nakayama,
    projective,
    quotient_module,
    regular_module,
    simple,
    submodule,
    subquotient,
)
from .nakayama import (
    build_nakayama,
    cyclic_quiver,
    expected_delta_table,
    expected_nakayama_shift,
    nakayama_spec,
)
from .series import (
    LayerTable,
    LoewySeries,
    adjunction_backward,
    adjunction_forward,
    capital_map,
    capital_n,
    dual_layer_iso,
    dual_socle_capital_iso,
    layer_table,
    radical_layer,
    radical_n,
    radical_series,
    socle_layer,
    socle_map,
    socle_n,
    socle_series,
    socle_submodule,
)
from .specfile import (
    SpecFileError,
    algebra_to_spec,
    dump_spec,
    load_spec,
    spec_text,
    spec_to_algebra,
    validate_spec,
)
from .verify import (
    CheckResult,
    VerificationReport,
    merge_reports,
    run_corpus,
    verify_adjunction,
    verify_duality_lemmas,
    verify_landrock,
    verify_main_theorem,
    verify_nakayama_identity,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Arrow",
    "Quiver",
    "Relation",
    "SymmetryResult",
    "build_path_algebra",
    "is_symmetric",
    "default_corpus",
    "linear_quiver_algebra",
    "random_quiver_spec",
    "PrimeField",
    "Subspace",
    "as_matrix",
    "image",
    "kernel",
    "rank",
    "rref",
    "solve",
    "ADualModule",
    "IsoSearchResult",
    "Module",
    "ModuleMap",
    "SubquotientModule",
    "a_dual",
    "f_dual",
    "f_dual_map",
    "find_isomorphism",
    "hom_space",
    "injective",
    "nakayama",
    "projective",
    "quotient_module",
    "regular_module",
    "simple",
    "submodule",
    "subquotient",
    "build_nakayama",
    "cyclic_quiver",
    "expected_delta_table",
    "expected_nakayama_shift",
    "nakayama_spec",
    "LayerTable",
    "LoewySeries",
    "adjunction_backward",
    "adjunction_forward",
    "capital_map",
    "capital_n",
    "dual_layer_iso",
    "dual_socle_capital_iso",
    "layer_table",
    "radical_layer",
    "radical_n",
    "radical_series",
    "socle_layer",
    "socle_map",
    "socle_n",
    "socle_series",
    "socle_submodule",
    "SpecFileError",
    "algebra_to_spec",
    "dump_spec",
    "load_spec",
    "spec_text",
    "spec_to_algebra",
    "validate_spec",
    "CheckResult",
    "VerificationReport",
    "merge_reports",
    "run_corpus",
    "verify_adjunction",
    "verify_duality_lemmas",
    "verify_landrock",
    "verify_main_theorem",
    "verify_nakayama_identity",
    "__version__",
]
