"""
Arbitrary-precision integer matrices
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from core.errors import InputError

Vector = Tuple[int, ...]


def as_vector(values: Iterable) -> Vector:
	"""Coerce an iterable of integer-likes to an immutable integer vector"""
	return tuple(int(v) for v in values)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
	return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class IntMatrix:
	"""Immutable integer matrix stored row-major; acts on column vectors."""
	rows: Tuple[Vector, ...]
	ncols: int
	
	@classmethod
	def of(cls, rows: Iterable[Iterable], ncols: Optional[int] = None) -> 'IntMatrix':
		"""Build a matrix from nested rows
		
		Args:
			rows: Iterable of rows of integer-likes
			ncols: Column count (required when there are no rows)
		
		Returns:
			IntMatrix with validated rectangular shape
		"""
		data = tuple(as_vector(r) for r in rows)
		width = ncols if ncols is not None else (len(data[0]) if data else 0)
		for i, row in enumerate(data):
			if len(row) != width:
				raise InputError(f"ragged matrix: row {i} has {len(row)} entries, expected {width}")
		return cls(data, width)
	
	@classmethod
	def identity(cls, n: int) -> 'IntMatrix':
		return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)
	
	@classmethod
	def zeros(cls, nrows: int, ncols: int) -> 'IntMatrix':
		return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)
	
	@classmethod
	def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> 'IntMatrix':
		cols = [as_vector(c) for c in columns]
		for c in cols:
			if len(c) != nrows:
				raise InputError(f"column of length {len(c)} does not fit {nrows} rows")
		return cls(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))
	
	@classmethod
	def from_blocks(cls, top_left: 'IntMatrix', top_right: 'IntMatrix',
			bottom_left: 'IntMatrix', bottom_right: 'IntMatrix') -> 'IntMatrix':
		"""Assemble [[TL, TR], [BL, BR]]"""
		if top_left.nrows != top_right.nrows or bottom_left.nrows != bottom_right.nrows:
			raise InputError("block rows do not line up")
		if top_left.ncols != bottom_left.ncols or top_right.ncols != bottom_right.ncols:
			raise InputError("block columns do not line up")
		upper = tuple(a + b for a, b in zip(top_left.rows, top_right.rows))
		lower = tuple(a + b for a, b in zip(bottom_left.rows, bottom_right.rows))
		return cls(upper + lower, top_left.ncols + top_right.ncols)
	
	@property
	def nrows(self) -> int:
		return len(self.rows)
	
	@property
	def shape(self) -> Tuple[int, int]:
		return (self.nrows, self.ncols)
	
	@property
	def is_square(self) -> bool:
		return self.nrows == self.ncols
	
	def column(self, j: int) -> Vector:
		return tuple(row[j] for row in self.rows)
	
	def columns(self) -> List[Vector]:
		return [self.column(j) for j in range(self.ncols)]
	
	def transpose(self) -> 'IntMatrix':
		return IntMatrix(tuple(self.columns()), self.nrows)
	
	def block(self, r0: int, r1: int, c0: int, c1: int) -> 'IntMatrix':
		"""Sub-matrix of rows [r0, r1) and columns [c0, c1)"""
		return IntMatrix(tuple(row[c0:c1] for row in self.rows[r0:r1]), c1 - c0)
	
	def __matmul__(self, other: Union['IntMatrix', Sequence[int]]):
		if isinstance(other, IntMatrix):
			if self.ncols != other.nrows:
				raise InputError(f"cannot multiply {self.shape} by {other.shape}")
			cols = other.columns()
			return IntMatrix(tuple(tuple(dot(row, c) for c in cols) for row in self.rows), other.ncols)
		vec = as_vector(other)
		if len(vec) != self.ncols:
			raise InputError(f"cannot apply {self.shape} matrix to vector of length {len(vec)}")
		return tuple(dot(row, vec) for row in self.rows)
	
	def __add__(self, other: 'IntMatrix') -> 'IntMatrix':
		if self.shape != other.shape:
			raise InputError(f"cannot add {self.shape} and {other.shape}")
		return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)
	
	def __neg__(self) -> 'IntMatrix':
		return self.scale(-1)
	
	def __sub__(self, other: 'IntMatrix') -> 'IntMatrix':
		return self + (-other)
	
	def scale(self, k: int) -> 'IntMatrix':
		return IntMatrix(tuple(tuple(k * a for a in row) for row in self.rows), self.ncols)
	
	def power(self, exponent: int) -> 'IntMatrix':
		"""Non-negative integer power by repeated squaring"""
		if not self.is_square:
			raise InputError("power of a non-square matrix")
		if exponent < 0:
			return self.inverse().power(-exponent)
		result = IntMatrix.identity(self.nrows)
		base = self
		while exponent:
			if exponent & 1:
				result = result @ base
			base = base @ base
			exponent >>= 1
		return result
	
	@property
	def is_identity(self) -> bool:
		return self == IntMatrix.identity(self.nrows) if self.is_square else False
	
	@property
	def is_zero(self) -> bool:
		return all(a == 0 for row in self.rows for a in row)
	
	def to_sympy(self) -> sympy.Matrix:
		return sympy.Matrix(self.nrows, self.ncols, [a for row in self.rows for a in row])
	
	def det(self) -> int:
		"""Exact determinant"""
		if not self.is_square:
			raise InputError(f"determinant of non-square {self.shape} matrix")
		if self.nrows == 0:
			return 1
		return int(self.to_sympy().det(method='bareiss'))
	
	@property
	def is_unimodular(self) -> bool:
		return self.is_square and abs(self.det()) == 1
	
	def inverse(self) -> 'IntMatrix':
		"""Integer inverse of a unimodular matrix
		
		Raises:
			InputError: If the matrix is not unimodular
		"""
		det = self.det()
		if abs(det) != 1:
			raise InputError(f"matrix with determinant {det} has no integer inverse")
		if self.nrows == 0:
			return self
		adjugate = self.to_sympy().adjugate()
		return IntMatrix.of((int(adjugate[i, j]) * det for j in range(self.ncols)) for i in range(self.nrows))
	
	def to_list(self) -> List[List[int]]:
		return [list(row) for row in self.rows]
	
	def __str__(self) -> str:
		return '[' + ', '.join('[' + ','.join(str(a) for a in row) + ']' for row in self.rows) + ']'
