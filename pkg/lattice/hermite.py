"""
Hermite and Smith normal forms over the integers
"""
import logging
from math import gcd
from typing import List, Optional, Sequence, Tuple

from core.errors import InputError, InvariantViolation
from .intmatrix import IntMatrix, Vector, as_vector

logger = logging.getLogger(__name__)

SMITH_ROUND_LIMIT = 500


def _unit(i: int, size: int) -> List[int]:
	return [1 if j == i else 0 for j in range(size)]


def _leading(row: Sequence[int], width: int) -> int:
	for j in range(width):
		if row[j]:
			return j
	return -1


def hermite_rows(rows: Sequence[Sequence[int]], width: int) -> Tuple[List[List[int]], int]:
	"""Row-reduce integer rows to Hermite normal form on their first `width` entries.
	
	Entries past `width` ride along with the row operations, which is how
	transforms and relation vectors are recovered. Pivots are positive and
	entries above each pivot are reduced into [0, pivot).
	
	Args:
		rows: Integer rows, each of length >= width
		width: Number of leading columns to reduce
	
	Returns:
		(rows, rank): the first `rank` rows are the canonical basis, the
		remaining rows vanish on the first `width` columns
	"""
	work = [list(r) for r in rows]
	rank = 0
	for col in range(width):
		if rank == len(work):
			break
		if not any(work[i][col] for i in range(rank, len(work))):
			continue
		while True:
			pivot = min((i for i in range(rank, len(work)) if work[i][col]), key=lambda i: abs(work[i][col]))
			work[rank], work[pivot] = work[pivot], work[rank]
			head = work[rank]
			cleared = True
			for i in range(rank + 1, len(work)):
				if work[i][col]:
					q = work[i][col] // head[col]
					work[i] = [x - q * y for x, y in zip(work[i], head)]
					if work[i][col]:
						cleared = False
			if cleared:
				break
		if work[rank][col] < 0:
			work[rank] = [-x for x in work[rank]]
		head = work[rank]
		for i in range(rank):
			q = work[i][col] // head[col]
			if q:
				work[i] = [x - q * y for x, y in zip(work[i], head)]
		rank += 1
	return work, rank


def hermite_with_transform(vectors: Sequence[Sequence[int]], width: int) -> Tuple[List[Vector], List[Vector], int]:
	"""Hermite form of a list of vectors together with the unimodular transform.
	
	Row k of the result satisfies H[k] = sum_j U[k][j] * vectors[j]. Rows
	past the rank are zero, so the matching rows of U span all integer
	relations among the vectors.
	
	Args:
		vectors: Generators, each of length width
		width: Ambient length of the vectors
	
	Returns:
		(H, U, rank)
	"""
	count = len(vectors)
	augmented = [list(as_vector(v)) + _unit(i, count) for i, v in enumerate(vectors)]
	work, rank = hermite_rows(augmented, width)
	hnf = [tuple(r[:width]) for r in work]
	transform = [tuple(r[width:]) for r in work]
	return hnf, transform, rank


def relation_vectors(vectors: Sequence[Sequence[int]], width: int) -> List[Vector]:
	"""Basis of the integer relations c with sum_j c_j * vectors[j] = 0"""
	_, transform, rank = hermite_with_transform(vectors, width)
	return transform[rank:]


def solve_integer(matrix: IntMatrix, target: Sequence[int]) -> Optional[Vector]:
	"""Find an integer x with matrix @ x == target
	
	Args:
		matrix: Coefficient matrix
		target: Right-hand side of length matrix.nrows
	
	Returns:
		One integer solution, or None when the system has none over the integers
	"""
	rhs = list(as_vector(target))
	if len(rhs) != matrix.nrows:
		raise InputError(f"right-hand side of length {len(rhs)} for a {matrix.shape} system")
	hnf, transform, rank = hermite_with_transform(matrix.columns(), matrix.nrows)
	solution = [0] * matrix.ncols
	for k in range(rank):
		row = hnf[k]
		p = _leading(row, matrix.nrows)
		q, remainder = divmod(rhs[p], row[p])
		if remainder:
			return None
		if q:
			rhs = [a - q * b for a, b in zip(rhs, row)]
			solution = [a + q * b for a, b in zip(solution, transform[k])]
	if any(rhs):
		return None
	return tuple(solution)


def _is_diagonal(rows: Sequence[Sequence[int]]) -> bool:
	return all(sum(1 for a in row if a) <= 1 for row in rows)


def smith_invariant_factors(matrix: IntMatrix) -> List[int]:
	"""Non-zero invariant factors d1 | d2 | ... of an integer matrix
	
	Alternates row and column Hermite reduction until every row carries a
	single non-zero entry, then normalises the diagonal with gcd/lcm swaps.
	"""
	rows = [list(r) for r in matrix.rows]
	width = matrix.ncols
	for _ in range(SMITH_ROUND_LIMIT):
		work, rank = hermite_rows(rows, width)
		work = work[:rank]
		if _is_diagonal(work):
			diagonal = sorted(abs(a) for row in work for a in row if a)
			break
		rows = [[work[i][j] for i in range(rank)] for j in range(width)]
		width = rank
	else:
		raise InvariantViolation(f"Smith reduction of a {matrix.shape} matrix did not settle")
	
	for i in range(len(diagonal)):
		for j in range(i + 1, len(diagonal)):
			g = gcd(diagonal[i], diagonal[j])
			diagonal[i], diagonal[j] = g, diagonal[i] * diagonal[j] // g
	logger.debug(f"invariant factors of {matrix.shape} matrix: {diagonal}")
	return diagonal
