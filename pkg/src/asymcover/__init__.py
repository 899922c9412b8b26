"""Exact workbench for the asymmetric cover of a finite-dimensional algebra."""

__version__ = "0.1.0"

from .linalg import QQ, GF, Field, Mat, Subspace, rref, kernel_basis, solve
from .algebra import (
    Algebra, Element, Module, ModuleMap, Bimodule, verify_algebra, multiply, opposite,
    direct_product, trivial_extension, triangular_matrix_ring, corner, quotient_by_ideal,
    ideal_power, regular_module,
)
from .presentation import (
    QuiverPresentation, parse_presentation, compile_presentation, check_confluence,
    ideal_span_quotient_dim, kk_presentation, idempotent_split_relations,
)
from .representations import (
    CapabilityError, radical_of_algebra, radical_of_module, socle_of_module, top_of_module,
    hom_space, dual_is_nonzero, simple_modules, split_semisimple, endomorphism_algebra,
    primitive_idempotents,
)
from .homology import (
    projective_cover, syzygy, minimal_resolution, proj_dim_up_to, findim_zero_test,
    big_findim_flag, Finite, AtLeast,
)
from .cover import (
    Cover, SemilocalCover, build_cover, build_semilocal_cover, verify_cover_socle,
    pushforward_module, verify_findim_theorem, verify_radical_powers,
)
