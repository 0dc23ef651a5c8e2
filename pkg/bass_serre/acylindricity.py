"""
Acylindricity of the Bass-Serre tree action
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.errors import InputError
from lattice import Lattice
from model import GraphManifold
from .paths import TreeEdge, TreePath, all_traversals, edge_matrix, edge_source, edge_target, extend_fix_lattice, path_fix_lattice

logger = logging.getLogger(__name__)

MIN_MAX_LEN = 3
OVER_APPROXIMATION_NOTE = (
	'shapes are quotient-graph edge sequences; a step back along the arriving gluing is taken '
	'through a different coset, so loop-loop sequences are included and the search may over-approximate'
)


@dataclass(frozen=True)
class AcylindricityVerdict:
	"""Outcome of the path-shape search.
	
	`k` is the least path length (in edges) from which every shape has a
	trivial fix lattice; it is None when some shape of length `max_len`
	still has a non-zero one.
	"""
	bounded: bool
	k: Optional[int]
	max_len: int
	longest_nontrivial: int
	witness: Optional[TreePath]
	witness_lattice: Optional[Lattice]
	shapes_checked: int
	notes: Tuple[str, ...] = field(default=(OVER_APPROXIMATION_NOTE,))
	
	def to_dict(self) -> Dict[str, Any]:
		return {
			'bounded': self.bounded,
			'k': self.k,
			'max_len': self.max_len,
			'longest_nontrivial': self.longest_nontrivial,
			'witness': self.witness.to_dict() if self.witness else None,
			'witness_lattice': self.witness_lattice.to_dict() if self.witness_lattice else None,
			'shapes_checked': self.shapes_checked,
			'notes': list(self.notes)
		}


def _search_from(manifold: GraphManifold, start: TreeEdge, traversals: List[TreeEdge], max_len: int) -> Tuple[int, List[Tuple[str, bool]], Lattice, int]:
	"""Depth-first search over shapes starting with `start`.
	
	A prefix with zero fix lattice is not extended: the lattice only shrinks.
	
	Returns:
		(longest non-trivial length, its traversals, its lattice, shapes checked)
	"""
	best_len, best_path, best_lattice = 0, [], Lattice.zero(manifold.torus_rank)
	checked = 0
	stack = [([(start.gluing, start.forward)], Lattice.full(manifold.torus_rank).image(edge_matrix(manifold, start)), start)]
	while stack:
		prefix, current, last = stack.pop()
		checked += 1
		if current.is_zero:
			continue
		if len(prefix) > best_len:
			best_len, best_path, best_lattice = len(prefix), prefix, current
		if len(prefix) == max_len:
			continue
		interior = edge_target(manifold, last)
		for t in reversed(traversals):
			if edge_source(manifold, t).id != interior.id:
				continue
			stack.append((prefix + [(t.gluing, t.forward)], extend_fix_lattice(manifold, current, interior, t), t))
	return best_len, best_path, best_lattice, checked


def check_acylindricity(manifold: GraphManifold, max_len: int, workers: int = 1) -> AcylindricityVerdict:
	"""Find the least K such that every reduced path of K edges has trivial stabilizer
	
	Args:
		manifold: Validated manifold
		max_len: Longest shape length examined (at least 3)
		workers: Threads used to split the search by first edge
	
	Returns:
		AcylindricityVerdict with a witness of the longest non-trivial shape
	"""
	if max_len < MIN_MAX_LEN:
		raise InputError(f"max_len must be at least {MIN_MAX_LEN}, got {max_len}")
	traversals = all_traversals(manifold)
	if not traversals:
		return AcylindricityVerdict(True, 1, max_len, 0, None, None, 0)
	
	if workers > 1:
		with ThreadPoolExecutor(max_workers=workers) as pool:
			results = list(pool.map(lambda t: _search_from(manifold, t, traversals, max_len), traversals))
	else:
		results = [_search_from(manifold, t, traversals, max_len) for t in traversals]
	
	best_len, best_path, best_lattice = 0, [], None
	for length, path, lattice, _ in results:
		if length > best_len:
			best_len, best_path, best_lattice = length, path, lattice
	checked = sum(r[3] for r in results)
	bounded = best_len < max_len
	witness = TreePath.from_traversals(best_path) if best_path else None
	if witness is not None:
		best_lattice = path_fix_lattice(manifold, witness)
	logger.info(f"Acylindricity search: {checked} shapes, longest non-trivial length {best_len}, max_len {max_len}")
	return AcylindricityVerdict(
		bounded=bounded,
		k=best_len + 1 if bounded else None,
		max_len=max_len,
		longest_nontrivial=best_len,
		witness=witness,
		witness_lattice=best_lattice,
		shapes_checked=checked
	)
