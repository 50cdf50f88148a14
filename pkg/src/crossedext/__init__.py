"""Exact-arithmetic cohomology and crossed-extension calculator for
finite-dimensional Lie and Leibniz algebras over Q or F_p."""

from .errors import CheckFailure
from .field import QQ, PrimeField, field_from_spec
from .linalg import LinearMap, Matrix, Subspace
from .algebra import (LeibnizAlgebra, LeibnizRepresentation, LieAlgebra,
                      ModuleMorphism, Representation, adjoint,
                      leibniz_from_lie, trivial_rep, validate_leibniz,
                      validate_leibniz_module, validate_lie, validate_module,
                      validate_morphism)
from .cohomology import (Cochain, CohomologyClass, ShortExactSequence,
                         class_of, coboundary, coboundary_matrix,
                         coboundary_witness, cohomology, cohomology_table,
                         connecting_hom, validate_ses)
from .crossed import (CrossedModule, CrossedMorphism, Presentation,
                      check_crossed_morphism, classify2, induced_pair,
                      leibniz_theta, negate_crossed, theta, validate_crossed,
                      validate_presentation, yoneda_crossed_module,
                      zero_crossed_module)
from .extensions import (CrossedExtension, ExtensionMorphism, baer_sum,
                         baer_sum_n2, check_extension_morphism, mediate,
                         negate, opext_connecting, pushout, push_forward,
                         split_detect, sum_over_g, validate_extension,
                         zero_extension)
from .workspace import Workspace, parse_workspace, serialize_workspace

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
