"""
Validation utilities for manifest values
"""
import re
from typing import Any, Sequence, Tuple

from core.errors import InputError
from lattice import IntMatrix, Vector

DECIMAL = re.compile(r'^-?[0-9]+$')


def is_decimal_string(value: Any) -> bool:
	"""Check whether a value is a decimal integer string such as '-12'"""
	return isinstance(value, str) and bool(DECIMAL.match(value))


def parse_integer(value: Any, where: str = 'value') -> int:
	"""Parse a manifest integer (native or decimal string, arbitrary precision)
	
	Args:
		value: JSON value
		where: Location used in the error message
	
	Returns:
		The integer
	"""
	if isinstance(value, bool):
		raise InputError(f"{where}: expected an integer, got a boolean")
	if isinstance(value, int):
		return value
	if is_decimal_string(value):
		return int(value)
	raise InputError(f"{where}: expected an integer, got {value!r}")


def parse_vector(values: Sequence[Any], where: str = 'vector') -> Vector:
	if not isinstance(values, (list, tuple)):
		raise InputError(f"{where}: expected an array of integers")
	return tuple(parse_integer(v, f"{where}[{i}]") for i, v in enumerate(values))


def parse_matrix(rows: Sequence[Sequence[Any]], where: str = 'matrix', ncols: int = None) -> IntMatrix:
	"""Parse nested integer rows into an IntMatrix"""
	if not isinstance(rows, (list, tuple)):
		raise InputError(f"{where}: expected an array of rows")
	parsed = [parse_vector(row, f"{where}[{i}]") for i, row in enumerate(rows)]
	return IntMatrix.of(parsed, ncols)


def check_square(matrix: IntMatrix, size: int) -> Tuple[bool, str]:
	"""Check a matrix has the given square size
	
	Returns:
		Tuple of (ok, message)
	"""
	if matrix.shape != (size, size):
		return False, f"expected a {size}x{size} matrix, got {matrix.nrows}x{matrix.ncols}"
	return True, ''


def check_unimodular(matrix: IntMatrix) -> Tuple[bool, str]:
	"""Check |det| = 1
	
	Returns:
		Tuple of (ok, message)
	"""
	det = matrix.det()
	if abs(det) != 1:
		return False, f"non-unimodular matrix (det {det})"
	return True, ''
