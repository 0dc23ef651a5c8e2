"""
Gluing patterns and their equivalence at a fixed edge
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

from core.errors import InputError, InvariantViolation, UnsupportedOperation
from lattice import IntMatrix, hermite_with_transform, solve_integer
from model import GraphManifold
from .pregraph import Pregraph

logger = logging.getLogger(__name__)

Witness = Tuple[IntMatrix, IntMatrix]


@dataclass(frozen=True)
class GluingPattern:
	"""Edge id -> unimodular gluing matrix, in a fixed edge order"""
	matrices: Tuple[Tuple[str, IntMatrix], ...]
	
	def __post_init__(self):
		for edge, matrix in self.matrices:
			if not matrix.is_unimodular:
				raise InputError(f"pattern matrix for edge {edge} is not unimodular")
	
	@classmethod
	def of(cls, matrices: Iterable[Tuple[str, IntMatrix]]) -> 'GluingPattern':
		return cls(tuple(matrices))
	
	def as_dict(self) -> Dict[str, IntMatrix]:
		return dict(self.matrices)
	
	def matrix(self, edge: str) -> IntMatrix:
		return self.as_dict()[edge]
	
	def to_dict(self) -> Dict[str, Any]:
		return {edge: matrix.to_list() for edge, matrix in self.matrices}


def apply_pattern(manifold: GraphManifold, pattern: GluingPattern) -> GraphManifold:
	"""Manifold with the pattern's matrices substituted on its edges"""
	unknown = [e for e, _ in pattern.matrices if e not in {g.id for g in manifold.gluings}]
	if unknown:
		raise InputError(f"pattern names unknown edges: {unknown}")
	return manifold.with_matrices(pattern.as_dict())


def block_form(theta: IntMatrix, v: IntMatrix, w: IntMatrix) -> IntMatrix:
	"""[[theta, 0], [v, w]]"""
	return IntMatrix.from_blocks(theta, IntMatrix.zeros(theta.nrows, w.ncols), v, w)


def _edge_shape(pre: Pregraph, edge: str) -> Tuple[str, str, int, int, int, int]:
	g = pre.edge(edge)
	if g.is_loop:
		raise UnsupportedOperation(f"pattern equivalence on loop edge {edge} is not supported")
	source, target = g.source.piece, g.target.piece
	return source, target, pre.base_rank(source), pre.fiber_rank(source), pre.base_rank(target), pre.fiber_rank(target)


def _check_pattern_matrix(matrix: IntMatrix, rank: int, name: str) -> None:
	if matrix.shape != (rank, rank):
		raise InputError(f"{name} must be {rank}x{rank}, got {matrix.nrows}x{matrix.ncols}")
	if not matrix.is_unimodular:
		raise InputError(f"{name} is not unimodular")


def _match_columns(b_prime: IntMatrix, target: IntMatrix) -> Optional[IntMatrix]:
	"""Unimodular w with b_prime @ w == target, when the column lattices agree.
	
	Both column sets are brought to Hermite form; equal forms give
	U' b'^T = U t^T, hence w = (U^-1 U')^T.
	"""
	width = b_prime.nrows
	hnf_prime, transform_prime, rank_prime = hermite_with_transform(b_prime.columns(), width)
	hnf_target, transform_target, rank_target = hermite_with_transform(target.columns(), width)
	if rank_prime != rank_target or hnf_prime[:rank_prime] != hnf_target[:rank_target]:
		return None
	size = b_prime.ncols
	u_prime = IntMatrix.of(transform_prime, size)
	u_target = IntMatrix.of(transform_target, size)
	w = (u_target.inverse() @ u_prime).transpose()
	if b_prime @ w != target:
		raise InvariantViolation('column lattice match produced a wrong transform')
	return w


def gluing_patterns_equivalent(pre: Pregraph, edge: str, p: IntMatrix, p_prime: IntMatrix) -> Tuple[bool, Optional[Witness]]:
	"""Decide whether two gluing matrices on `edge` give equivalent patterns
	
	Looks for N1 = [[t1, 0], [v1, w1]] and N2 = [[t2, 0], [v2, w2]] with
	t_i in Theta, w_i in GL(k_i, Z) and p_prime @ N1 == N2 @ p. For fixed
	(t1, t2) the top block row reduces to b' w1 = t2 b (a column lattice
	equality) and b' v1 = t2 a - a' t1 (an integer linear system); N2 is
	then forced.
	
	Args:
		pre: Pregraph carrying the Theta groups
		edge: Edge id with distinct endpoints
		p: First gluing matrix
		p_prime: Second gluing matrix
	
	Returns:
		Tuple of (equivalent, (N1, N2) or None)
	"""
	source, target, b1, k1, b2, k2 = _edge_shape(pre, edge)
	rank = b1 + k1
	_check_pattern_matrix(p, rank, 'P')
	_check_pattern_matrix(p_prime, rank, "P'")
	a, b = p.block(0, b2, 0, b1), p.block(0, b2, b1, rank)
	a_prime, b_prime = p_prime.block(0, b2, 0, b1), p_prime.block(0, b2, b1, rank)
	p_inverse = p.inverse()
	
	for theta1 in pre.group(source):
		for theta2 in pre.group(target):
			w1 = _match_columns(b_prime, theta2 @ b)
			if w1 is None:
				continue
			residual = theta2 @ a - a_prime @ theta1
			columns = [solve_integer(b_prime, residual.column(j)) for j in range(b1)]
			if any(c is None for c in columns):
				continue
			v1 = IntMatrix.from_columns(columns, k1)
			n1 = block_form(theta1, v1, w1)
			n2 = p_prime @ n1 @ p_inverse
			if n2.block(0, b2, 0, b2) != theta2 or not n2.block(0, b2, b2, rank).is_zero:
				raise InvariantViolation(f"forced N2 on edge {edge} is not of block form")
			logger.debug(f"edge {edge}: patterns equivalent via theta pair {theta1}, {theta2}")
			return True, (n1, n2)
	return False, None


def verify_equivalence_witness(pre: Pregraph, edge: str, p: IntMatrix, p_prime: IntMatrix, n1: IntMatrix, n2: IntMatrix) -> Tuple[bool, str]:
	"""Re-check a witness from scratch
	
	Returns:
		Tuple of (valid, reason)
	"""
	source, target, b1, k1, b2, k2 = _edge_shape(pre, edge)
	rank = b1 + k1
	for name, n, base, vertex in (('N1', n1, b1, source), ('N2', n2, b2, target)):
		if n.shape != (rank, rank):
			return False, f"{name} has shape {n.shape}"
		if n.block(0, base, 0, base) not in pre.group(vertex):
			return False, f"{name} top-left block is not in Theta({vertex})"
		if not n.block(0, base, base, rank).is_zero:
			return False, f"{name} top-right block is not zero"
		if not n.block(base, rank, base, rank).is_unimodular:
			return False, f"{name} bottom-right block is not invertible"
	if p_prime @ n1 != n2 @ p:
		return False, "P' N1 != N2 P"
	return True, ''
