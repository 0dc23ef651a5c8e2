"""
Sublattices of Z^m in canonical Hermite form
"""
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union

from core.errors import InputError
from .hermite import hermite_rows, relation_vectors
from .intmatrix import IntMatrix, Vector, as_vector

INFINITE_INDEX = math.inf


def _combine(vectors: Sequence[Vector], coefficients: Sequence[int], width: int) -> Vector:
	total = [0] * width
	for c, v in zip(coefficients, vectors):
		if c:
			total = [a + c * b for a, b in zip(total, v)]
	return tuple(total)


@dataclass(frozen=True)
class Lattice:
	"""A sublattice of Z^m.
	
	`basis` holds the Hermite-normal-form basis vectors (the columns of the
	column-style HNF basis matrix). The form is canonical, so two lattices
	are equal exactly when their bases are identical.
	"""
	ambient_rank: int
	basis: Tuple[Vector, ...] = ()
	
	@classmethod
	def from_generators(cls, ambient_rank: int, generators: Iterable[Sequence[int]]) -> 'Lattice':
		"""Canonical lattice spanned by a list of generators
		
		Args:
			ambient_rank: Length m of every generator
			generators: Integer vectors; dependent ones are absorbed
		
		Returns:
			Lattice in Hermite normal form
		"""
		if ambient_rank < 0:
			raise InputError(f"ambient rank must be non-negative, got {ambient_rank}")
		gens = [as_vector(g) for g in generators]
		for g in gens:
			if len(g) != ambient_rank:
				raise InputError(f"generator {list(g)} has length {len(g)}, expected {ambient_rank}")
		work, rank = hermite_rows(gens, ambient_rank)
		return cls(ambient_rank, tuple(tuple(r) for r in work[:rank]))
	
	@classmethod
	def zero(cls, ambient_rank: int) -> 'Lattice':
		return cls(ambient_rank, ())
	
	@classmethod
	def full(cls, ambient_rank: int) -> 'Lattice':
		return cls.coordinate(ambient_rank, range(ambient_rank))
	
	@classmethod
	def coordinate(cls, ambient_rank: int, indices: Iterable[int]) -> 'Lattice':
		"""Span of the standard basis vectors e_i for the given 0-based indices"""
		chosen = sorted(set(indices))
		return cls(ambient_rank, tuple(tuple(1 if j == i else 0 for j in range(ambient_rank)) for i in chosen))
	
	@property
	def rank(self) -> int:
		return len(self.basis)
	
	@property
	def is_zero(self) -> bool:
		return not self.basis
	
	@property
	def pivots(self) -> Tuple[int, ...]:
		return tuple(next(j for j, a in enumerate(v) if a) for v in self.basis)
	
	def _same_ambient(self, other: 'Lattice') -> None:
		if self.ambient_rank != other.ambient_rank:
			raise InputError(f"ambient rank mismatch: {self.ambient_rank} vs {other.ambient_rank}")
	
	def contains(self, vector: Sequence[int]) -> bool:
		"""Exact membership test by reduction along the Hermite basis"""
		residual = list(as_vector(vector))
		if len(residual) != self.ambient_rank:
			raise InputError(f"vector of length {len(residual)} tested against Z^{self.ambient_rank}")
		for row, p in zip(self.basis, self.pivots):
			q, remainder = divmod(residual[p], row[p])
			if remainder:
				return False
			if q:
				residual = [a - q * b for a, b in zip(residual, row)]
		return not any(residual)
	
	def __contains__(self, vector: Sequence[int]) -> bool:
		return self.contains(vector)
	
	def is_sublattice_of(self, other: 'Lattice') -> bool:
		self._same_ambient(other)
		return all(other.contains(v) for v in self.basis)
	
	def equal(self, other: 'Lattice') -> bool:
		self._same_ambient(other)
		return self.basis == other.basis
	
	def sum(self, other: 'Lattice') -> 'Lattice':
		self._same_ambient(other)
		return Lattice.from_generators(self.ambient_rank, self.basis + other.basis)
	
	def intersect(self, other: 'Lattice') -> 'Lattice':
		"""Intersection through the relation module of the stacked bases.
		
		A relation sum c_i a_i - sum d_j b_j = 0 gives the common vector
		sum c_i a_i; the relations of a Hermite transform span them all.
		"""
		self._same_ambient(other)
		if self.is_zero or other.is_zero:
			return Lattice.zero(self.ambient_rank)
		stacked = list(self.basis) + [tuple(-a for a in b) for b in other.basis]
		relations = relation_vectors(stacked, self.ambient_rank)
		common = [_combine(self.basis, rel[:self.rank], self.ambient_rank) for rel in relations]
		return Lattice.from_generators(self.ambient_rank, common)
	
	def saturate(self) -> 'Lattice':
		"""{v : k v in self for some k != 0}, as the double orthogonal complement"""
		if self.is_zero:
			return self
		if self.rank == self.ambient_rank:
			return Lattice.full(self.ambient_rank)
		orthogonal = kernel(IntMatrix(self.basis, self.ambient_rank))
		return kernel(IntMatrix(orthogonal.basis, self.ambient_rank))
	
	def is_saturated(self) -> bool:
		return self.saturate() == self
	
	def index_in(self, sup: 'Lattice') -> Union[int, float]:
		"""Index [sup : self]
		
		Returns:
			The finite index when ranks agree, INFINITE_INDEX otherwise
		
		Raises:
			InputError: If self is not contained in sup
		"""
		if not self.is_sublattice_of(sup):
			raise InputError("index requested for a lattice that is not a sublattice")
		if self.rank != sup.rank:
			return INFINITE_INDEX
		own = reduce(lambda acc, pv: acc * pv[0][pv[1]], zip(self.basis, self.pivots), 1)
		ambient = reduce(lambda acc, pv: acc * pv[0][pv[1]], zip(sup.basis, sup.pivots), 1)
		return own // ambient
	
	def image(self, matrix: IntMatrix) -> 'Lattice':
		"""Image of the lattice under a linear map acting on column vectors"""
		if matrix.ncols != self.ambient_rank:
			raise InputError(f"{matrix.shape} matrix cannot act on Z^{self.ambient_rank}")
		return Lattice.from_generators(matrix.nrows, [matrix @ v for v in self.basis])
	
	def to_list(self) -> List[List[int]]:
		return [list(v) for v in self.basis]
	
	def to_dict(self) -> dict:
		return {'ambient_rank': self.ambient_rank, 'rank': self.rank, 'basis': self.to_list()}


def kernel(matrix: IntMatrix) -> Lattice:
	"""Integer kernel {v : matrix @ v = 0} as a canonical lattice"""
	if matrix.nrows == 0:
		return Lattice.full(matrix.ncols)
	return Lattice.from_generators(matrix.ncols, relation_vectors(matrix.columns(), matrix.nrows))


def primitive(vector: Sequence[int]) -> Vector:
	"""Divide a non-zero vector by the gcd of its entries"""
	values = as_vector(vector)
	g = reduce(math.gcd, values, 0)
	if g == 0:
		raise InputError("the zero vector has no primitive part")
	return tuple(a // g for a in values)
