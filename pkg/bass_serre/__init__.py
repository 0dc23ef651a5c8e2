"""
Bass-Serre tree calculus: path stabilizers, acylindricity and Dehn twists
"""
from .paths import (
	TreeEdge,
	TreePath,
	path_fix_lattice,
	enumerate_path_shapes,
	check_reduced,
	edge_matrix
)
from .acylindricity import AcylindricityVerdict, check_acylindricity
from .dehn_twist import DehnTwistWitness, dehn_twist_has_infinite_order

__all__ = [
	'TreeEdge',
	'TreePath',
	'path_fix_lattice',
	'enumerate_path_shapes',
	'check_reduced',
	'edge_matrix',
	'AcylindricityVerdict',
	'check_acylindricity',
	'DehnTwistWitness',
	'dehn_twist_has_infinite_order'
]
