"""
Certificates obstructing locally CAT(0) metrics
"""
from .certificate import Certificate, KINDS, VERDICTS, OBSTRUCTED, NO_OBSTRUCTION, MONODROMY, EULER_CLASS, TWISTED_DOUBLE
from .monodromy import (
	cycle_fiber_monodromy,
	restricted_fiber_map,
	detect_distorted_wall,
	finite_order_bound,
	is_finite_order,
	is_unipotent,
	monodromy_sub_kind,
	UNIPOTENT,
	QUASI_UNIPOTENT,
	EXPONENTIAL
)
from .euler import euler_class_obstruction, homology_inputs
from .twisted_double import (
	double_gluing_matrix,
	positivity_sum,
	build_twisted_double,
	twisted_double_obstruction,
	twisted_double_from_manifold
)
from .verify import verify_certificate

__all__ = [
	'Certificate',
	'KINDS',
	'VERDICTS',
	'OBSTRUCTED',
	'NO_OBSTRUCTION',
	'MONODROMY',
	'EULER_CLASS',
	'TWISTED_DOUBLE',
	'cycle_fiber_monodromy',
	'restricted_fiber_map',
	'detect_distorted_wall',
	'finite_order_bound',
	'is_finite_order',
	'is_unipotent',
	'monodromy_sub_kind',
	'UNIPOTENT',
	'QUASI_UNIPOTENT',
	'EXPONENTIAL',
	'euler_class_obstruction',
	'homology_inputs',
	'double_gluing_matrix',
	'positivity_sum',
	'build_twisted_double',
	'twisted_double_obstruction',
	'twisted_double_from_manifold',
	'verify_certificate'
]
