"""Topology-generating automata.

Pair automata that describe when two digit sequences name the same point,
their multiple-address families, finite approximation spaces and exact
neighbor graphs of self-similar sets.
"""

from .address import Address, format_word, parse_word
from .analysis import class_of, diagonal_structure, is_pcf
from .approximation import (
    FiniteSpace,
    build_space,
    connectedness,
    cut_point_evidence,
    is_connected,
    project,
    verify_kuratowski_witness,
)
from .automaton import Automaton, accept_address_pair, accept_word_pair, validate
from .census import enumerate_automata
from .conditions import check_finite_class_necessary_conditions
from .exact import ExactComplex, Similitude
from .multiaddress import build_G3, completeness_split, compute_family, duplicate_collapse, extend
from .neighbors import IFS, coxeter_relation_check, neighbor_graph, verify_representation

__version__ = "0.1.0"

__all__ = [
    "Address",
    "Automaton",
    "ExactComplex",
    "FiniteSpace",
    "IFS",
    "Similitude",
    "accept_address_pair",
    "accept_word_pair",
    "build_G3",
    "build_space",
    "check_finite_class_necessary_conditions",
    "class_of",
    "completeness_split",
    "compute_family",
    "connectedness",
    "coxeter_relation_check",
    "cut_point_evidence",
    "diagonal_structure",
    "duplicate_collapse",
    "enumerate_automata",
    "extend",
    "format_word",
    "is_connected",
    "is_pcf",
    "neighbor_graph",
    "parse_word",
    "project",
    "validate",
    "verify_kuratowski_witness",
    "verify_representation",
]
