from .encode import CnfInstance, VarMap, decode, encode, export_dimacs, import_model
from .solver import SatResult, Solver, solve
from .search import ExactResult, SearchAborted, cir_exists, theta_c_exact

__all__ = [
    "CnfInstance", "VarMap", "encode", "decode", "export_dimacs", "import_model",
    "SatResult", "Solver", "solve",
    "ExactResult", "SearchAborted", "cir_exists", "theta_c_exact",
]
