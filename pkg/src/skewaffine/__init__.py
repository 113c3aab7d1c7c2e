"""Exact affine geometry over definite rational quaternion algebras.

Subspace sidedness (purely left / purely right / two-sided), exact
noncommutative linear algebra, and decomposition of affine collineations
into translation, right scalar, central matrix, automorphism and
anti-automorphism components.
"""

from .algebra import Algebra, Morphism, Scalar, restrict_scalars
from .errors import (DecompositionError, DegenerateLine, DimensionMismatch,
                     DimensionTooSmall, DivisionByZero, InconsistentAlpha,
                     InputError, NoSolution, NonCentralRatio, NotAdditive,
                     NotAntiMultiplicative, NotCentralRow, NotTwoSided,
                     ReconstructionMismatch, SideUnrepresentable,
                     SkewAffineError)
from .linalg import (LEFT, RIGHT, EchelonForm, Matrix, PivotComplement,
                     Vector, matrix, member, pivot_complement, row_echelon,
                     solve_central_linear, subspace_dim, vector)
from .maps import (AlphaTable, Componentwise, Compose, LineImageReport,
                   MapExpr, MatrixMul, RightScalar, SemilinearForm,
                   Translate, check_additivity, check_line_preservation,
                   decompose, detect_mode, eval_map, extract_alpha,
                   factor_matrix_central, identify_morphism, image_affine,
                   verify_theorem_instance)
from .subspaces import (AffineSubspace, Flag, PlaneChain, Sidedness,
                        VectorSubspace, bimodule_normalize,
                        classify_sidedness, connect_planes, extend_to_flag,
                        intersect_affine, line_intersection_characterization,
                        line_through, right_lines_in)
from .suites import CheckResult, SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
