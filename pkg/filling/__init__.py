"""
Filling-function bounds
"""
from .bounds import BoundExpr, NAMED, POLY, EXP, INFINITE_DEGREE, sum_bounds, compose_dehn_bound

__all__ = [
	'BoundExpr',
	'NAMED',
	'POLY',
	'EXP',
	'INFINITE_DEGREE',
	'sum_bounds',
	'compose_dehn_bound'
]
