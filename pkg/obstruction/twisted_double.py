"""
Twisted doubles of a truncated piece times a circle
"""
import logging
from typing import List, Optional, Sequence, Tuple

from core.errors import InputError, InvariantViolation, ManifestError
from lattice import IntMatrix, Vector, dot
from model import CuspRef, Gluing, GraphManifold, Piece, has_transverse_pair, is_closed, is_irreducible, manifest_to_dict, validate
from utils.validators import parse_integer, parse_vector
from .certificate import OBSTRUCTED, TWISTED_DOUBLE, Certificate
from .euler import homology_inputs

logger = logging.getLogger(__name__)

PLUS, MINUS = 'V+', 'V-'
PROVENANCE = (
	'under a locally CAT(0) metric the fiber directions on both sides of every wall are orthogonal '
	'to the wall classes, which forces the weighted sum of squared norms of the twist classes to vanish'
)


def fiber_shift(weight: int, b: Sequence[int]) -> Vector:
	"""Base part of the fiber image: weight * b, or e_1 when b vanishes"""
	if any(b):
		return tuple(weight * value for value in b)
	return tuple(1 if i == 0 else 0 for i in range(len(b)))


def double_gluing_matrix(base_dim: int, weight: int, b: Sequence[int]) -> IntMatrix:
	"""Identity on the base coordinates; the fiber generator goes to (fiber_shift, 1)"""
	rank = base_dim
	rows = [list(row) for row in IntMatrix.identity(rank).rows]
	for i, value in enumerate(fiber_shift(weight, b)):
		rows[i][rank - 1] = value
	return IntMatrix.of(rows, rank)


def positivity_sum(b: Sequence[Sequence[int]], weights: Sequence[int]) -> int:
	"""sum of n_i <b_i, b_i>"""
	return sum(w * dot(v, v) for v, w in zip(b, weights))


def _check_inputs(base_dim: int, cusps: Sequence[str], i_star: IntMatrix, b: Sequence[Vector], weights: Sequence[int]) -> None:
	if base_dim < 3:
		raise InputError(f"piece dimension must be at least 3, got {base_dim}")
	if not cusps:
		raise InputError("the piece has no cusps to glue")
	if len(b) != len(cusps):
		raise InputError(f"expected one b vector per cusp ({len(cusps)}), got {len(b)}")
	if len(weights) != len(cusps):
		raise InputError(f"expected one weight per cusp ({len(cusps)}), got {len(weights)}")
	for cusp, v in zip(cusps, b):
		if len(v) != base_dim - 1:
			raise InputError(f"b for cusp {cusp} has length {len(v)}, expected {base_dim - 1}")
	for cusp, w in zip(cusps, weights):
		if w < 1:
			raise InputError(f"weight for cusp {cusp} must be positive, got {w}")
	if all(not any(v) for v in b):
		raise InputError("every b vector is zero: there is nothing to twist")
	total = tuple(a for v in b for a in v)
	if i_star.ncols != len(total):
		raise InputError(f"i_star has {i_star.ncols} columns, boundary classes have {len(total)} coordinates")
	image = i_star @ total
	if any(image):
		raise InputError(f"sum of the b classes is not in the kernel of i_star (image {list(image)})")


def build_twisted_double(base_dim: int, cusps: Sequence[str], b: Sequence[Vector], weights: Sequence[int]) -> GraphManifold:
	"""Two copies of the piece times a circle, glued along every cusp"""
	gluings = tuple(
		Gluing(f"g{i}", CuspRef(PLUS, cusp), CuspRef(MINUS, cusp), double_gluing_matrix(base_dim, w, v))
		for i, (cusp, v, w) in enumerate(zip(cusps, b, weights), start=1)
	)
	pieces = tuple(Piece(pid, base_dim, 1, tuple(cusps), 'product') for pid in (PLUS, MINUS))
	return GraphManifold(base_dim + 1, pieces, gluings)


def _self_check(manifold: GraphManifold) -> None:
	try:
		validate(manifest_to_dict(manifold))
	except ManifestError as e:
		raise InvariantViolation(f"constructed twisted double is not a valid manifest: {e.message}", e.violations)
	if not is_closed(manifold):
		raise InvariantViolation(f"constructed twisted double has boundary cusps: {[str(c) for c in manifold.boundary_cusps()]}")
	irreducible, failing = is_irreducible(manifold)
	if not irreducible or not has_transverse_pair(manifold):
		raise InvariantViolation(f"constructed twisted double is not irreducible (failing gluings: {failing})")


def twisted_double_obstruction(base_dim: int, cusps: Sequence[str], i_star: IntMatrix, b: Sequence[Sequence[int]],
		weights: Optional[Sequence[int]] = None) -> Tuple[Certificate, GraphManifold]:
	"""Build the closed twisted double and certify that it carries no locally CAT(0) metric
	
	Every cusp is glued. A cusp with b = 0 gets the transverse shift e_1 and adds
	nothing to the positivity sum.
	
	Args:
		base_dim: Dimension of the truncated piece
		cusps: Cusp ids of the piece
		i_star: Matrix of the boundary-to-interior map on H1, columns ordered by cusp
		b: Per-cusp boundary classes, each of length base_dim - 1
		weights: Positive per-cusp multipliers (default all 1)
	
	Returns:
		Tuple of (certificate, constructed manifold)
	
	Raises:
		InputError: For zero or inconsistent classes
		InvariantViolation: If the constructed manifold is not closed and irreducible
	"""
	vectors = [tuple(v) for v in b]
	weights = list(weights) if weights is not None else [1] * len(cusps)
	_check_inputs(base_dim, cusps, i_star, vectors, weights)
	
	manifold = build_twisted_double(base_dim, cusps, vectors, weights)
	_self_check(manifold)
	
	total = positivity_sum(vectors, weights)
	transverse: List[str] = [c for c, v in zip(cusps, vectors) if not any(v)]
	logger.info(f"Twisted double over {len(cusps)} cusps ({len(transverse)} with b = 0), positivity sum {total}")
	certificate = Certificate(
		TWISTED_DOUBLE,
		OBSTRUCTED,
		{
			'base_dim': base_dim,
			'cusps': list(cusps),
			'b': [list(v) for v in vectors],
			'weights': weights,
			'i_star': i_star.to_list(),
			'positivity_sum': total
		},
		PROVENANCE
	)
	return certificate, manifold


def twisted_double_from_manifold(manifold: GraphManifold) -> Tuple[Certificate, GraphManifold]:
	"""Read the piece and its homology block from a one-piece manifold"""
	if len(manifold.pieces) != 1 or manifold.gluings:
		raise InputError("twisted double needs a manifest with exactly one piece and no gluings")
	piece = manifold.pieces[0]
	homology = manifold.homology or {}
	_, i_star = homology_inputs(homology)
	if 'b' not in homology:
		raise InputError("homology block has no per-cusp b vectors")
	b = [parse_vector(v, f"homology.b[{i}]") for i, v in enumerate(homology['b'])]
	weights = None
	if 'weights' in homology:
		weights = [parse_integer(w, f"homology.weights[{i}]") for i, w in enumerate(homology['weights'])]
	return twisted_double_obstruction(piece.base_dim, piece.cusps, i_star, b, weights)
