"""
Gluing-pattern equivalence, inequivalent families and graph invariants
"""
from .pregraph import Pregraph, check_group
from .patterns import (
	GluingPattern,
	apply_pattern,
	block_form,
	gluing_patterns_equivalent,
	verify_equivalence_witness
)
from .family import transverse_matrix, twist_matrix, remark_matrix, candidate_block, generate_distinct_family
from .invariants import bisimulation_classes, qi_invariant_bisimilar, iso_necessary

__all__ = [
	'Pregraph',
	'check_group',
	'GluingPattern',
	'apply_pattern',
	'block_form',
	'gluing_patterns_equivalent',
	'verify_equivalence_witness',
	'transverse_matrix',
	'twist_matrix',
	'remark_matrix',
	'candidate_block',
	'generate_distinct_family',
	'bisimulation_classes',
	'qi_invariant_bisimilar',
	'iso_necessary'
]
