"""Exact workbench for quantum (super)groups and (super)spaces.

Builds R-matrix derived algebras, verifies Yang-Baxter identities, applies
basis changes and nilpotent contractions, checks coaction homomorphisms and
audits PBW dimensions, all over an exact coefficient superring.
"""

from .scalars import GaussRational, ParameterSet, Scalar, arith
from .freealg import Element, FreeAlgebra, Generator
from .tensor import SMatrix, conjugate_R, kron, permutation_matrix, rhat, verify_ybe
from .presentations import (
    DimTable,
    Presentation,
    RewriteSystem,
    add_relation,
    classical_dims,
    confluence_check,
    hilbert_dims,
    ideals_equal_upto_degree,
    normal_form,
    orient_relations,
    quotient_set_generator,
)
from .derive import SignConvention, convention_scan, group_relations, space_relations
from .morphisms import (
    BasisMap,
    CoactionSpec,
    coaction_check,
    induced_group_transform,
    tensor_product_algebra,
    transform_presentation,
)
from .contract import ContractionScheme, contract, flatness_check, parameter_limit
from .reports import CheckReport
from .expressions import format_element, format_scalar, parse_expression
from .catalog import CATALOG_PARAMS, catalog_get, catalog_ids

__version__ = "0.1.0"
