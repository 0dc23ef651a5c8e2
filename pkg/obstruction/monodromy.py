"""
Fiber monodromy around cycles of the quotient graph and the distorted-wall search
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache, reduce
from typing import List, Optional, Sequence, Tuple

from sympy import totient

from core.config import get_max_cycle_len
from core.errors import InputError
from lattice import IntMatrix
from model import GraphManifold, Piece
from .certificate import MONODROMY, NO_OBSTRUCTION, OBSTRUCTED, Certificate

logger = logging.getLogger(__name__)

Traversal = Tuple[str, bool]

UNIPOTENT = 'unipotent'
QUASI_UNIPOTENT = 'quasi_unipotent'
EXPONENTIAL = 'exponential'

PROVENANCE = {
	UNIPOTENT: 'distorted wall: the fiber subgroup of a cycle with unipotent monodromy is not quasi-isometrically embedded',
	QUASI_UNIPOTENT: 'extension: a power of the monodromy is unipotent of infinite order',
	EXPONENTIAL: 'extension: the monodromy has an eigenvalue off the unit circle'
}


def _ends(manifold: GraphManifold, traversal: Traversal) -> Tuple[Piece, Piece, IntMatrix]:
	gluing_id, forward = traversal
	g = manifold.gluing(gluing_id)
	if forward:
		return manifold.source_piece(g), manifold.target_piece(g), g.matrix
	return manifold.target_piece(g), manifold.source_piece(g), g.matrix.inverse()


def restricted_fiber_map(manifold: GraphManifold, traversal: Traversal) -> Optional[IntMatrix]:
	"""Fiber block of a traversal, or None when the fiber is not carried onto the fiber"""
	source, target, matrix = _ends(manifold, traversal)
	if source.fiber_lattice().image(matrix) != target.fiber_lattice():
		return None
	r = manifold.torus_rank
	return matrix.block(r - target.fiber_dim, r, r - source.fiber_dim, r)


def _check_closed(manifold: GraphManifold, cycle: Sequence[Traversal]) -> None:
	if not cycle:
		raise InputError("a cycle needs at least one traversal")
	for i, (prev, nxt) in enumerate(zip(cycle, list(cycle[1:]) + [cycle[0]]), start=1):
		if _ends(manifold, prev)[1].id != _ends(manifold, nxt)[0].id:
			raise InputError(f"non-closed cycle: traversal {i} ({prev[0]}) does not end where the next one starts")


def cycle_fiber_monodromy(manifold: GraphManifold, cycle: Sequence[Traversal]) -> Optional[IntMatrix]:
	"""Automorphism of the starting fiber lattice induced by going around `cycle`
	
	Args:
		manifold: Validated manifold
		cycle: (gluing id, forward) traversals forming a closed walk
	
	Returns:
		Product D_L ... D_1 of the restricted fiber maps, or None when some
		traversal does not preserve fibers
	"""
	_check_closed(manifold, cycle)
	start = _ends(manifold, cycle[0])[0]
	total = IntMatrix.identity(start.fiber_dim)
	for traversal in cycle:
		block = restricted_fiber_map(manifold, traversal)
		if block is None:
			return None
		total = block @ total
	return total


@lru_cache(maxsize=None)
def finite_order_bound(d: int) -> int:
	"""lcm of every m with phi(m) <= d: each finite order in GL(d, Z) divides it"""
	if d <= 0:
		return 1
	orders = [m for m in range(1, 2 * d * d + 2) if int(totient(m)) <= d]
	return reduce(lambda a, b: a * b // math.gcd(a, b), orders, 1)


def is_finite_order(matrix: IntMatrix) -> bool:
	return matrix.power(finite_order_bound(matrix.nrows)).is_identity


def is_unipotent(matrix: IntMatrix) -> bool:
	if matrix.nrows == 0:
		return True
	return (matrix - IntMatrix.identity(matrix.nrows)).power(matrix.nrows).is_zero


def monodromy_sub_kind(matrix: IntMatrix) -> Optional[str]:
	"""Sub-kind of an infinite-order monodromy, None for finite order"""
	if is_finite_order(matrix):
		return None
	if is_unipotent(matrix):
		return UNIPOTENT
	if is_unipotent(matrix.power(finite_order_bound(matrix.nrows))):
		return QUASI_UNIPOTENT
	return EXPONENTIAL


def _traversals(manifold: GraphManifold) -> List[Traversal]:
	return [(g.id, forward) for g in manifold.gluings for forward in (True, False)]


def _cycles_from(manifold: GraphManifold, start: Traversal, traversals: List[Traversal], max_len: int) -> Tuple[Optional[Tuple[List[Traversal], IntMatrix]], int, int]:
	"""Depth-first search for closed non-backtracking walks beginning with `start`.
	
	Returns:
		(first infinite-order cycle and monodromy or None, closed walks with defined monodromy, walks cut where fibers are not preserved)
	"""
	first_block = restricted_fiber_map(manifold, start)
	if first_block is None:
		return None, 0, 1
	origin = _ends(manifold, start)[0].id
	defined = pruned = 0
	stack = [([start], first_block)]
	while stack:
		prefix, total = stack.pop()
		last = prefix[-1]
		at = _ends(manifold, last)[1].id
		reverse_first = (start[0], not start[1])
		if at == origin and (len(prefix) == 1 or last != reverse_first):
			defined += 1
			if not is_finite_order(total):
				return (prefix, total), defined, pruned
		if len(prefix) == max_len:
			continue
		for t in reversed(traversals):
			if t == (last[0], not last[1]) or _ends(manifold, t)[0].id != at:
				continue
			block = restricted_fiber_map(manifold, t)
			if block is None:
				pruned += 1
				continue
			stack.append((prefix + [t], block @ total))
	return None, defined, pruned


def detect_distorted_wall(manifold: GraphManifold, max_len: Optional[int] = None, workers: int = 1) -> Certificate:
	"""Search cycles for a fiber-preserving one with infinite-order monodromy
	
	Args:
		manifold: Validated manifold
		max_len: Longest cycle searched, in traversals (environment default)
		workers: Threads used to split the search by starting traversal
	
	Returns:
		Certificate of kind monodromy
	"""
	bound = get_max_cycle_len() if max_len is None else max_len
	if bound < 1:
		raise InputError(f"cycle length bound must be positive, got {bound}")
	traversals = _traversals(manifold)
	if workers > 1 and traversals:
		with ThreadPoolExecutor(max_workers=workers) as pool:
			results = list(pool.map(lambda t: _cycles_from(manifold, t, traversals, bound), traversals))
	else:
		results = [_cycles_from(manifold, t, traversals, bound) for t in traversals]
	
	defined = sum(r[1] for r in results)
	pruned = sum(r[2] for r in results)
	for found, _, _ in results:
		if found is None:
			continue
		cycle, matrix = found
		sub_kind = monodromy_sub_kind(matrix)
		logger.info(f"Distorted wall candidate: cycle {cycle} with {sub_kind} monodromy")
		return Certificate(
			MONODROMY,
			OBSTRUCTED,
			{
				'cycle': [{'gluing': g, 'forward': f} for g, f in cycle],
				'matrix': matrix.to_list(),
				'sub_kind': sub_kind,
				'max_len': bound
			},
			PROVENANCE[sub_kind]
		)
	logger.info(f"No infinite-order fiber monodromy within {bound} traversals ({defined} closed walks with defined monodromy, {pruned} cut)")
	return Certificate(
		MONODROMY,
		NO_OBSTRUCTION,
		{'max_len': bound, 'defined_monodromies': defined, 'walks_cut': pruned},
		'distorted wall search',
		(f"no obstruction within cycle length {bound}",)
	)
