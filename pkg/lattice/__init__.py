"""
Exact integer lattice algebra
"""
from .intmatrix import IntMatrix, Vector, as_vector, dot
from .hermite import (
	hermite_rows,
	hermite_with_transform,
	relation_vectors,
	solve_integer,
	smith_invariant_factors
)
from .lattice import Lattice, kernel, primitive, INFINITE_INDEX

__all__ = [
	'IntMatrix',
	'Vector',
	'as_vector',
	'dot',
	'hermite_rows',
	'hermite_with_transform',
	'relation_vectors',
	'solve_integer',
	'smith_invariant_factors',
	'Lattice',
	'kernel',
	'primitive',
	'INFINITE_INDEX'
]
