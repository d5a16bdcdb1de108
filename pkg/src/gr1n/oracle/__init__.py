from .module import TruncatedModule, combine, degree_of
from .verify import ALL_CHECKS, Verifier, generic_point, verify_suite

__all__ = ["TruncatedModule", "combine", "degree_of", "ALL_CHECKS", "Verifier", "generic_point", "verify_suite"]
