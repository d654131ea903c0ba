"""Exact rational computations on metric Lie algebras: Ricci curvature, nilradicals,
nilsolitons and standard decompositions of solvable algebras."""

from .algebra import LieAlgebra, jacobi_check, parse_salamon, print_salamon
from .correction import aw_correction_solve
from .decomposition import Decomposition, iwasawa_classify, standard_obstruction, verify_decomposition
from .derivations import derivation_space, is_derivation
from .errors import (
    DegenerateMetricError,
    JacobiError,
    NotDerivationError,
    NotNilpotentError,
    NotSolvableError,
    ParseError,
    SolvlieError,
    UnsupportedError,
)
from .lieformat import Workspace, corpus, load, load_corpus, parse_file, parse_text
from .linalg import Matrix, Q, sym_signature
from .metric import Metric, induced_metric, orthogonalize, restrict_and_complement
from .poly import MPoly
from .polysolve import solve_poly_system_2var
from .report import Report
from .ricci import RicciData, einstein_check, ricci_formula, ricci_koszul
from .soliton import gen_nilsoliton_family_check, gen_nilsoliton_rhs, nilsoliton_solve
from .structure import classify, killing_form, nilradical, nilradical_search
from .subspace import Subspace

__version__ = "0.1.0"
