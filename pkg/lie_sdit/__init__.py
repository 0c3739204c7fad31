from .linalg import Matrix, ScalarField, Subspace, QQ_FIELD
from .lie import MatrixSpace, LieStructure, structure_constants
from .cartan import CartanConfig, CartanSolver
from .sdit import SditSolver
from .shrunk import ShrunkAnalyzer
from .certificates import CertificateFinder
from .toolkit import LieToolkit
