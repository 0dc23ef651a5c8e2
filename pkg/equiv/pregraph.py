"""
Pregraphs of groups: the manifold's graph plus finite groups of base symmetries
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import InputError
from lattice import IntMatrix
from model import Gluing, GraphManifold

logger = logging.getLogger(__name__)


def check_group(matrices: Sequence[IntMatrix], size: int) -> Tuple[bool, str]:
	"""Check that a finite list of matrices is a subgroup of GL(size, Z)
	
	Returns:
		Tuple of (is_group, reason)
	"""
	if not matrices:
		return False, 'empty set of matrices'
	elements = set(matrices)
	for m in elements:
		if m.shape != (size, size):
			return False, f"matrix {m} is not {size}x{size}"
		if not m.is_unimodular:
			return False, f"matrix {m} is not invertible over the integers"
	if IntMatrix.identity(size) not in elements:
		return False, 'identity missing'
	for a in elements:
		if a.inverse() not in elements:
			return False, f"inverse of {a} missing"
		for b in elements:
			if a @ b not in elements:
				return False, f"product {a} * {b} missing"
	return True, ''


@dataclass(frozen=True)
class Pregraph:
	"""The graph of a manifold with, per vertex, a finite group Theta_v of
	automorphisms of the base part of the cusp lattices. Vertices without
	an entry get the trivial group."""
	manifold: GraphManifold
	theta: Dict[str, Tuple[IntMatrix, ...]] = field(default_factory=dict, compare=False, hash=False)
	
	@classmethod
	def from_manifold(cls, manifold: GraphManifold, theta: Optional[Dict[str, Sequence[IntMatrix]]] = None) -> 'Pregraph':
		"""Build and check a pregraph
		
		Args:
			manifold: Validated manifold supplying vertices, edges and frames
			theta: Vertex id -> group elements; defaults to the manifest's theta block
		
		Raises:
			InputError: If some Theta_v is not a group
		"""
		source = manifold.theta if theta is None else theta
		groups = {}
		for pid, matrices in sorted(source.items()):
			piece = manifold.piece(pid)
			size = piece.base_dim - 1
			ok, reason = check_group(list(matrices), size)
			if not ok:
				raise InputError(f"theta for {pid} is not a group: {reason}")
			identity = IntMatrix.identity(size)
			ordered = [identity] + [m for m in dict.fromkeys(matrices) if m != identity]
			groups[pid] = tuple(ordered)
		return cls(manifold, groups)
	
	def base_rank(self, vertex: str) -> int:
		return self.manifold.piece(vertex).base_dim - 1
	
	def fiber_rank(self, vertex: str) -> int:
		return self.manifold.piece(vertex).fiber_dim
	
	def group(self, vertex: str) -> Tuple[IntMatrix, ...]:
		if vertex in self.theta:
			return self.theta[vertex]
		return (IntMatrix.identity(self.base_rank(vertex)),)
	
	def edge(self, edge_id: str) -> Gluing:
		return self.manifold.gluing(edge_id)
	
	def edges(self) -> List[Gluing]:
		return list(self.manifold.gluings)
