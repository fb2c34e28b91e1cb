"""Twisted first homology of finitely presented groups over the integers.

Typical use::

    from twisthom import catalog, h1
    entry = catalog.load("n32")
    print(h1(entry.presentation, entry.representation).group)   # (Z/2)^6
"""

from .intlat import AbelianGroup, IntMatrix, cokernel, hnf, kernel_lattice, snf
from .words import Presentation, Relation, Word, parse_presentation, parse_word
from .representation import Representation, check_relations, parse_representation
from .homology import abelianization, boundary1_matrix, class_of, fox_vector, h0, h1
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "Presentation",
    "Relation",
    "Representation",
    "Word",
    "abelianization",
    "boundary1_matrix",
    "catalog",
    "check_relations",
    "class_of",
    "cokernel",
    "fox_vector",
    "h0",
    "h1",
    "hnf",
    "kernel_lattice",
    "parse_presentation",
    "parse_representation",
    "parse_word",
    "snf",
]
