"""mutalg: exact-arithmetic signed quiver mutation, root systems, and
Serre-like Lie algebra presentations."""

from .tring import TElem, t_sign
from .gss import GssMatrix, find_symmetrizer, mutate_matrix, mutate_sequence
from .quiver import Arrow, SignedValuedQuiver, matrix_from_quiver, quiver_from_matrix, mutate_quiver
from .diagram import DynkinType, unsigned_diagram, signed_diagram, recognize_dynkin
from .cartan import CartanCounterpart, cartan_counterpart, classical_cartan, dynkin_quiver

__all__ = [
    "TElem",
    "t_sign",
    "GssMatrix",
    "find_symmetrizer",
    "mutate_matrix",
    "mutate_sequence",
    "Arrow",
    "SignedValuedQuiver",
    "matrix_from_quiver",
    "quiver_from_matrix",
    "mutate_quiver",
    "DynkinType",
    "unsigned_diagram",
    "signed_diagram",
    "recognize_dynkin",
    "CartanCounterpart",
    "cartan_counterpart",
    "classical_cartan",
    "dynkin_quiver",
]
