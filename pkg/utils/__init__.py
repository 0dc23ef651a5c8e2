"""
Utility functions package
"""
from .validators import (
	is_decimal_string,
	parse_integer,
	parse_vector,
	parse_matrix,
	check_square,
	check_unimodular
)

__all__ = [
	'is_decimal_string',
	'parse_integer',
	'parse_vector',
	'parse_matrix',
	'check_square',
	'check_unimodular'
]
