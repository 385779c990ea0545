"""Exact spectra of normal Cayley graphs of the symmetric group."""

from .partitions import CycleType, Partition, parse_cycle_type, parse_partition
from .characters import mn_character, normalized_character, character_table
from .spectra import NormalElement, eigenvalue, lambda_nontrivial, ruling_set

__all__ = [
    "CycleType", "Partition", "parse_cycle_type", "parse_partition",
    "mn_character", "normalized_character", "character_table",
    "NormalElement", "eigenvalue", "lambda_nontrivial", "ruling_set",
]
__version__ = "0.1.0"
