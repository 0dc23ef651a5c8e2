"""
Structural predicates on validated graph manifolds
"""
import logging
from typing import List, Tuple, Union

import networkx as nx

from core.errors import InputError
from lattice import IntMatrix, Lattice
from .types import Gluing, GraphManifold

logger = logging.getLogger(__name__)


def fibers_meet(matrix: IntMatrix, source_fiber_dim: int, target_fiber_dim: int) -> Lattice:
	"""Intersection of the image of the source fiber with the target fiber.
	
	Works for any square integer matrix in the fiber-last frame, unimodular
	or not.
	
	Args:
		matrix: Linear part of the gluing, source frame to target frame
		source_fiber_dim: Fiber rank on the source side
		target_fiber_dim: Fiber rank on the target side
	
	Returns:
		The witness lattice, zero exactly when the fibers are transverse
	"""
	if not matrix.is_square:
		raise InputError(f"gluing matrix must be square, got {matrix.shape}")
	rank = matrix.nrows
	source = Lattice.coordinate(rank, range(rank - source_fiber_dim, rank))
	target = Lattice.coordinate(rank, range(rank - target_fiber_dim, rank))
	return source.image(matrix).intersect(target)


def _resolve(manifold: GraphManifold, gluing: Union[Gluing, str]) -> Gluing:
	return manifold.gluing(gluing) if isinstance(gluing, str) else gluing


def gluing_is_transverse(manifold: GraphManifold, gluing: Union[Gluing, str]) -> Tuple[bool, Lattice]:
	"""Check whether a gluing has transverse fibers
	
	Args:
		manifold: Validated manifold owning the gluing
		gluing: Gluing or gluing id
	
	Returns:
		Tuple of (transverse, witness lattice in the target frame)
	"""
	g = _resolve(manifold, gluing)
	witness = fibers_meet(g.matrix, manifold.source_piece(g).fiber_dim, manifold.target_piece(g).fiber_dim)
	return witness.is_zero, witness


def is_irreducible(manifold: GraphManifold) -> Tuple[bool, List[str]]:
	"""Every gluing transverse
	
	Returns:
		Tuple of (irreducible, ids of the failing gluings)
	"""
	failing = [g.id for g in manifold.gluings if not gluing_is_transverse(manifold, g)[0]]
	if failing:
		logger.debug(f"non-transverse gluings: {failing}")
	return not failing, failing


def has_transverse_pair(manifold: GraphManifold) -> bool:
	return any(gluing_is_transverse(manifold, g)[0] for g in manifold.gluings)


def is_closed(manifold: GraphManifold) -> bool:
	return not manifold.boundary_cusps()


def internal_wall_count(manifold: GraphManifold) -> int:
	return len(manifold.gluings)


def quotient_graph(manifold: GraphManifold) -> nx.MultiGraph:
	"""Underlying multigraph: one node per piece, one keyed edge per gluing"""
	graph = nx.MultiGraph()
	for p in manifold.pieces:
		graph.add_node(p.id, label=p.label, base_dim=p.base_dim, fiber_dim=p.fiber_dim, cusp_count=len(p.cusps))
	for g in manifold.gluings:
		graph.add_edge(g.source.piece, g.target.piece, key=g.id)
	return graph


def separating_walls(manifold: GraphManifold) -> List[str]:
	"""Internal walls whose removal disconnects the manifold"""
	graph = quotient_graph(manifold)
	separating = []
	for g in manifold.gluings:
		if g.is_loop:
			continue
		pruned = graph.copy()
		pruned.remove_edge(g.source.piece, g.target.piece, key=g.id)
		if not nx.is_connected(pruned):
			separating.append(g.id)
	return separating
