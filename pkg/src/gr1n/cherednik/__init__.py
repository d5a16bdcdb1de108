from .clifford import CliffordReport, clifford_split, mcore_dominance_filter, orbit_k
from .findim import (CornerChain, Dimension, FinDimCertificate, NotProven, findim_check, l_dimension,
                     validate_chain)
from .lattice import (ClosedGenerator, Edge, calibration_edges, closed_generators, contains,
                      cyclic_submodule, lattice_graded_dims, radical, submodule_span)
from .spectrum import HyperplaneFamily, SpectrumReport, Violation, exceptional_hyperplanes, is_simple_spectrum
from .weights import (Transition, Weight, norm, phi_transition, psi_transition, sigma_transition,
                      z_weight)

__all__ = [
    "CliffordReport", "clifford_split", "mcore_dominance_filter", "orbit_k",
    "CornerChain", "Dimension", "FinDimCertificate", "NotProven", "findim_check", "l_dimension", "validate_chain",
    "ClosedGenerator", "Edge", "calibration_edges", "closed_generators", "contains",
    "cyclic_submodule", "lattice_graded_dims", "radical", "submodule_span",
    "HyperplaneFamily", "SpectrumReport", "Violation", "exceptional_hyperplanes", "is_simple_spectrum",
    "Transition", "Weight", "norm", "phi_transition", "psi_transition", "sigma_transition", "z_weight",
]
