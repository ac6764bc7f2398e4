"""Finite-group engine for permutability, 4-permutability and the PT / Sq4T classes."""

from .catalog import build, build_named, parse_group_name, survey_corpus
from .classify import classify, is_pt_group, is_sq4t_group, is_solvable, is_supersolvable
from .config import Limits
from .lattice import all_subgroups, generated_subgroup
from .perm import GroupTable, Permutation, closure, compose, quotient
from .permutability import is_permutable, is_qn4, is_sqn4, perm4, permutes, product_set

__version__ = "0.1.0"
