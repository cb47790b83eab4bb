"""Exact G-lattice isomorphism testing over modified group rings."""
from .engine import IsoCertificate, NoIso, gs_recover, iso_pair, isomorphism_to_standard
from .glattice import GLattice, is_invertible, make_glattice, standard_lattice
from .group import GroupContext, make_group
from .instances import generate
from .lattice import coset_short_vector, lll_reduce
from .numth import find_aux_primes
from .roots import mu_of_order
from .tensor import glattice_mul, power_with_coset

__all__ = [
    "GLattice", "GroupContext", "IsoCertificate", "NoIso", "coset_short_vector",
    "find_aux_primes", "generate", "glattice_mul", "gs_recover", "is_invertible", "iso_pair",
    "isomorphism_to_standard", "lll_reduce", "make_glattice", "make_group", "mu_of_order",
    "power_with_coset", "standard_lattice",
]
__version__ = "0.1.0"
