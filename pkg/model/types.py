"""
Graph-manifold data model
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

from core.errors import InputError
from lattice import IntMatrix, Lattice


@dataclass(frozen=True)
class Piece:
	"""A vertex N x T^d. Boundary tori use the fiber-last frame: coordinates
	0..base_dim-2 are horospherical, the last fiber_dim are the fiber."""
	id: str
	base_dim: int
	fiber_dim: int
	cusps: Tuple[str, ...]
	label: Optional[str] = None
	
	@property
	def is_surface(self) -> bool:
		return self.base_dim == 2
	
	@property
	def torus_rank(self) -> int:
		return self.base_dim - 1 + self.fiber_dim
	
	def fiber_lattice(self) -> Lattice:
		"""Fiber subgroup inside any of the piece's boundary tori"""
		rank = self.torus_rank
		return Lattice.coordinate(rank, range(rank - self.fiber_dim, rank))


@dataclass(frozen=True)
class CuspRef:
	"""A boundary torus: (piece id, cusp id)"""
	piece: str
	cusp: str
	
	def to_list(self) -> List[str]:
		return [self.piece, self.cusp]
	
	def __str__(self) -> str:
		return f"{self.piece}:{self.cusp}"


@dataclass(frozen=True)
class Gluing:
	"""An internal wall. `matrix` maps the source frame to the target frame."""
	id: str
	source: CuspRef
	target: CuspRef
	matrix: IntMatrix
	
	@property
	def is_loop(self) -> bool:
		return self.source.piece == self.target.piece
	
	def inverse(self) -> 'Gluing':
		return Gluing(self.id, self.target, self.source, self.matrix.inverse())


@dataclass(frozen=True)
class GraphManifold:
	"""Validated graph manifold: a connected decorated multigraph of pieces.
	
	Extension blocks (`theta`, `homology`, `dehn`) are carried through
	unchanged for the modules that consume them.
	"""
	n: int
	pieces: Tuple[Piece, ...]
	gluings: Tuple[Gluing, ...]
	extended: bool = False
	theta: Dict[str, Tuple[IntMatrix, ...]] = field(default_factory=dict, compare=False, hash=False)
	homology: Optional[Dict[str, Any]] = field(default=None, compare=False, hash=False)
	dehn: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)
	
	@property
	def torus_rank(self) -> int:
		return self.n - 1
	
	@cached_property
	def _pieces_by_id(self) -> Dict[str, Piece]:
		return {p.id: p for p in self.pieces}
	
	@cached_property
	def _gluings_by_id(self) -> Dict[str, Gluing]:
		return {g.id: g for g in self.gluings}
	
	def piece(self, piece_id: str) -> Piece:
		try:
			return self._pieces_by_id[piece_id]
		except KeyError:
			raise InputError(f"unknown piece '{piece_id}'")
	
	def gluing(self, gluing_id: str) -> Gluing:
		try:
			return self._gluings_by_id[gluing_id]
		except KeyError:
			raise InputError(f"unknown gluing '{gluing_id}'")
	
	@cached_property
	def cusp_usage(self) -> Dict[CuspRef, str]:
		"""Glued cusp -> gluing id"""
		used = {}
		for g in self.gluings:
			used[g.source] = g.id
			used[g.target] = g.id
		return used
	
	def boundary_cusps(self) -> List[CuspRef]:
		return [CuspRef(p.id, c) for p in self.pieces for c in p.cusps if CuspRef(p.id, c) not in self.cusp_usage]
	
	def source_piece(self, gluing: Gluing) -> Piece:
		return self.piece(gluing.source.piece)
	
	def target_piece(self, gluing: Gluing) -> Piece:
		return self.piece(gluing.target.piece)
	
	def with_matrices(self, matrices: Dict[str, IntMatrix]) -> 'GraphManifold':
		"""Copy with some gluing matrices replaced"""
		gluings = tuple(
			Gluing(g.id, g.source, g.target, matrices.get(g.id, g.matrix)) for g in self.gluings
		)
		return GraphManifold(self.n, self.pieces, gluings, self.extended, dict(self.theta), self.homology, dict(self.dehn))
