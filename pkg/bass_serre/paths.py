"""
Reduced paths in the Bass-Serre tree and their pointwise stabilizers
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from core.errors import InputError
from lattice import IntMatrix, Lattice
from model import GraphManifold, Piece

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeEdge:
	"""A tree edge over a gluing, crossed in a direction, with a symbolic coset token.
	
	Two consecutive edges over the same gluing in opposite directions leave
	their shared vertex through the same cusp; they are the same tree edge
	only when the tokens agree.
	"""
	gluing: str
	forward: bool = True
	coset: int = 0
	
	def reverses(self, other: 'TreeEdge') -> bool:
		return self.gluing == other.gluing and self.forward != other.forward
	
	def to_dict(self) -> Dict[str, Any]:
		return {'gluing': self.gluing, 'forward': self.forward, 'coset': self.coset}


@dataclass(frozen=True)
class TreePath:
	edges: Tuple[TreeEdge, ...]
	
	@classmethod
	def from_traversals(cls, traversals: Sequence[Tuple[str, bool]]) -> 'TreePath':
		"""Build a reduced path from (gluing id, forward) pairs.
		
		A step that turns back along the gluing it arrived on gets a fresh
		coset token, so the resulting tree path never backtracks.
		"""
		edges: List[TreeEdge] = []
		for gluing, forward in traversals:
			token = 0
			if edges and edges[-1].gluing == gluing and edges[-1].forward != forward:
				token = edges[-1].coset + 1
			edges.append(TreeEdge(gluing, forward, token))
		return cls(tuple(edges))
	
	@property
	def length(self) -> int:
		return len(self.edges)
	
	def vertices(self, manifold: GraphManifold) -> List[Tuple[str, int]]:
		"""Piece ids along the path, tagged with their position as coset token"""
		if not self.edges:
			return []
		chain = [edge_source(manifold, self.edges[0]).id]
		chain.extend(edge_target(manifold, e).id for e in self.edges)
		return [(pid, i) for i, pid in enumerate(chain)]
	
	def reversed(self) -> 'TreePath':
		return TreePath(tuple(TreeEdge(e.gluing, not e.forward, e.coset) for e in reversed(self.edges)))
	
	def to_dict(self) -> Dict[str, Any]:
		return {'length': self.length, 'edges': [e.to_dict() for e in self.edges]}


def edge_source(manifold: GraphManifold, edge: TreeEdge) -> Piece:
	g = manifold.gluing(edge.gluing)
	return manifold.piece(g.source.piece if edge.forward else g.target.piece)


def edge_target(manifold: GraphManifold, edge: TreeEdge) -> Piece:
	g = manifold.gluing(edge.gluing)
	return manifold.piece(g.target.piece if edge.forward else g.source.piece)


def edge_matrix(manifold: GraphManifold, edge: TreeEdge) -> IntMatrix:
	"""Frame change along the edge: the gluing matrix, or its inverse when crossed backwards"""
	g = manifold.gluing(edge.gluing)
	return g.matrix if edge.forward else g.matrix.inverse()


def check_reduced(manifold: GraphManifold, path: TreePath) -> None:
	"""Raise InputError unless the path is a reduced path in the tree"""
	if not path.edges:
		raise InputError("a tree path needs at least one edge")
	for i, (prev, nxt) in enumerate(zip(path.edges, path.edges[1:]), start=1):
		if edge_target(manifold, prev).id != edge_source(manifold, nxt).id:
			raise InputError(f"path edges {i} and {i + 1} do not share a vertex")
		if prev.reverses(nxt) and prev.coset == nxt.coset:
			raise InputError(f"path backtracks at step {i} over gluing {prev.gluing}")


def extend_fix_lattice(manifold: GraphManifold, current: Lattice, interior: Piece, edge: TreeEdge) -> Lattice:
	"""One step of the stabilizer calculus: pass an interior vertex, then cross `edge`.
	
	Elements fixing two distinct edges at a vertex lie in its fiber, which
	has the same coordinates in every cusp frame of the piece.
	"""
	return current.intersect(interior.fiber_lattice()).image(edge_matrix(manifold, edge))


def path_fix_lattice(manifold: GraphManifold, path: TreePath) -> Lattice:
	"""Lattice of edge-group elements fixing the whole path
	
	Args:
		manifold: Validated manifold
		path: Reduced tree path
	
	Returns:
		The fix lattice, expressed in the source frame of the first edge
	"""
	check_reduced(manifold, path)
	first = edge_matrix(manifold, path.edges[0])
	current = Lattice.full(manifold.torus_rank).image(first)
	accumulated = first
	for prev, edge in zip(path.edges, path.edges[1:]):
		current = extend_fix_lattice(manifold, current, edge_target(manifold, prev), edge)
		accumulated = edge_matrix(manifold, edge) @ accumulated
	return current.image(accumulated.inverse())


def all_traversals(manifold: GraphManifold) -> List[TreeEdge]:
	"""Every gluing in both directions, in manifest order"""
	return [TreeEdge(g.id, forward) for g in manifold.gluings for forward in (True, False)]


def enumerate_path_shapes(manifold: GraphManifold, length: int) -> Iterator[TreePath]:
	"""All reduced path shapes with `length` edges, in a stable order"""
	if length < 1:
		return
	traversals = all_traversals(manifold)
	
	def grow(prefix: List[Tuple[str, bool]], at: str) -> Iterator[TreePath]:
		if len(prefix) == length:
			yield TreePath.from_traversals(prefix)
			return
		for t in traversals:
			if edge_source(manifold, t).id == at:
				yield from grow(prefix + [(t.gluing, t.forward)], edge_target(manifold, t).id)
	
	for t in traversals:
		yield from grow([(t.gluing, t.forward)], edge_target(manifold, t).id)
