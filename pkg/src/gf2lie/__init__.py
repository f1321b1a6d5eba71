"""Exact computer algebra for Lie (super)algebras over GF(2^k).

Builds the characteristic-2 Hamiltonian, Jurman and Kaplansky families
from structure constants, computes low-degree Chevalley-Eilenberg
cohomology, and checks deformation / isomorphism / superization claims
mechanically.
"""

__version__ = "0.1.0"
