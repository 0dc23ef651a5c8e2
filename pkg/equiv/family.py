"""
Reference gluing matrices and families of pairwise inequivalent patterns
"""
import logging
from typing import List, Optional, Sequence

from core.config import FAMILY_SCAN_FACTOR
from core.errors import InputError, InvariantViolation, UnsupportedOperation
from lattice import IntMatrix, Lattice
from .patterns import GluingPattern
from .pregraph import Pregraph

logger = logging.getLogger(__name__)


def transverse_matrix(rank: int, source_fiber_dim: int, target_fiber_dim: int) -> IntMatrix:
	"""Unipotent gluing that sends each source fiber vector e_(r-s+t) to
	e_(r-s+t) + e_t, so the image of the source fiber meets the target
	fiber trivially.
	
	Raises:
		InputError: If no transverse gluing exists for these ranks
	"""
	if source_fiber_dim + target_fiber_dim > rank:
		raise InputError(f"fibers of rank {source_fiber_dim} and {target_fiber_dim} cannot be transverse in Z^{rank}")
	rows = [list(row) for row in IntMatrix.identity(rank).rows]
	for t in range(source_fiber_dim):
		rows[t][rank - source_fiber_dim + t] = 1
	return IntMatrix.of(rows, rank)


def twist_matrix(n: int) -> IntMatrix:
	"""[[1, 0, n], [0, 1, 0], [0, 0, 1]]: the fiber picks up n times the first base vector"""
	return IntMatrix.of([[1, 0, n], [0, 1, 0], [0, 0, 1]])


def remark_matrix(n: int, q: int = 0, r: int = 1, s: int = 0) -> IntMatrix:
	"""[[1, q, 1], [0, r, 0], [0, s, n]]
	
	The literal form is only invertible over Z for n = +-1 and r = +-1;
	use twist_matrix for unimodular gluings in the same family.
	"""
	return IntMatrix.of([[1, q, 1], [0, r, 0], [0, s, n]])


def candidate_block(base_rank: int, fiber_rank: int, j: int) -> IntMatrix:
	"""Top-right block with columns e_1 + j e_(k+1), e_2, ..., e_k"""
	columns = []
	for t in range(fiber_rank):
		column = [0] * base_rank
		column[t] = 1
		if t == 0:
			column[fiber_rank] = j
		columns.append(column)
	return IntMatrix.from_columns(columns, base_rank)


def _in_orbit(lattice: Lattice, accepted: Sequence[Lattice], group: Sequence[IntMatrix]) -> bool:
	return any(lattice == other.image(theta) for other in accepted for theta in group)


def generate_distinct_family(pre: Pregraph, edge: str, count: int, scan_factor: Optional[int] = None) -> List[GluingPattern]:
	"""Generate `count` pairwise inequivalent gluing patterns differing only at `edge`
	
	Candidates use P_j = [[I, B_j], [0, I]]; a candidate is kept when its
	top-right column lattice lies outside the Theta-orbit of every kept
	one, which rules out equivalence. All other edges get the reference
	transverse gluing.
	
	Args:
		pre: Pregraph with the Theta groups
		edge: Edge whose gluing varies
		count: Number of patterns wanted
		scan_factor: Candidates scanned per pattern and group element
	
	Returns:
		List of patterns in generation order
	
	Raises:
		InputError: If the ranks at the edge admit no such family
		InvariantViolation: If the scan ends short
	"""
	if count < 1:
		raise InputError(f"count must be at least 1, got {count}")
	g = pre.edge(edge)
	if g.is_loop:
		raise UnsupportedOperation(f"family generation on loop edge {edge} is not supported")
	source, target = g.source.piece, g.target.piece
	fiber, other_fiber = pre.fiber_rank(source), pre.fiber_rank(target)
	base = pre.base_rank(source)
	rank = pre.manifold.torus_rank
	if fiber != other_fiber:
		raise InputError(f"infeasible rank constraints: fiber ranks {fiber} and {other_fiber} differ at edge {edge}")
	if fiber < 1 or fiber >= base:
		raise InputError(f"infeasible rank constraints: need 1 <= k < n-1-k, got k={fiber}, n-1={rank}")
	
	others = [
		(e.id, transverse_matrix(rank, pre.fiber_rank(e.source.piece), pre.fiber_rank(e.target.piece)))
		for e in pre.edges() if e.id != edge
	]
	group = pre.group(target)
	factor = FAMILY_SCAN_FACTOR if scan_factor is None else scan_factor
	limit = count * len(group) * max(1, factor) + count
	accepted: List[Lattice] = []
	patterns: List[GluingPattern] = []
	j = 0
	while len(patterns) < count and j < limit:
		j += 1
		block = candidate_block(base, fiber, j)
		lattice = Lattice.from_generators(base, block.columns())
		if _in_orbit(lattice, accepted, group):
			continue
		accepted.append(lattice)
		p = IntMatrix.from_blocks(IntMatrix.identity(base), block, IntMatrix.zeros(fiber, base), IntMatrix.identity(fiber))
		matrices = dict(others)
		matrices[edge] = p
		patterns.append(GluingPattern.of((e.id, matrices[e.id]) for e in pre.edges()))
	if len(patterns) < count:
		raise InvariantViolation(f"only {len(patterns)} of {count} inequivalent patterns found after {j} candidates")
	logger.info(f"generated {count} inequivalent patterns on edge {edge} from {j} candidates")
	return patterns
