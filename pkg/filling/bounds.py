"""
Symbolic upper bounds for filling functions and their composition across walls
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Sequence, Tuple, Union

import sympy

from core.errors import InputError
from utils.validators import is_decimal_string

logger = logging.getLogger(__name__)

POLY = 'poly'
EXP = 'exp'
INFINITE_DEGREE = 'inf'

L = sympy.Symbol('L')

Number = Union[int, Fraction]


def _coefficient(value: Any, where: str) -> Fraction:
	if isinstance(value, bool):
		raise InputError(f"{where}: expected a rational, got a boolean")
	if isinstance(value, (int, Fraction)):
		result = Fraction(value)
	elif isinstance(value, str) and (is_decimal_string(value) or '/' in value):
		try:
			result = Fraction(value)
		except (ValueError, ZeroDivisionError):
			raise InputError(f"{where}: malformed rational {value!r}")
	else:
		raise InputError(f"{where}: expected an integer or 'p/q' string, got {value!r}")
	if result < 0:
		raise InputError(f"{where}: coefficients must be non-negative, got {value!r}")
	return result


def _canonical(coeffs: Iterable[Fraction]) -> Tuple[Fraction, ...]:
	values = list(coeffs)
	while values and values[-1] == 0:
		values.pop()
	return tuple(values)


def _serialize(c: Fraction) -> Union[int, str]:
	return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class BoundExpr:
	"""Non-decreasing bound in L.
	
	kind 'poly': sum_i coeffs[i] * L^i.
	kind 'exp': 2^(sum_i coeffs[i] * L^i).
	Coefficients are non-negative rationals with trailing zeros stripped.
	A poly bound has at least one non-zero coefficient.
	"""
	kind: str
	coeffs: Tuple[Fraction, ...] = ()
	
	def __post_init__(self):
		if self.kind not in (POLY, EXP):
			raise InputError(f"bound kind must be '{POLY}' or '{EXP}', got {self.kind!r}")
		values = tuple(_coefficient(c, f"{self.kind} bound coefficient {i}") for i, c in enumerate(self.coeffs))
		object.__setattr__(self, 'coeffs', _canonical(values))
		if self.kind == POLY and not self.coeffs:
			raise InputError("poly bound is identically zero; a filling bound needs a non-zero coefficient")
	
	@classmethod
	def poly(cls, coeffs: Sequence[Any]) -> 'BoundExpr':
		return cls(POLY, tuple(coeffs))
	
	@classmethod
	def exp(cls, coeffs: Sequence[Any]) -> 'BoundExpr':
		return cls(EXP, tuple(coeffs))
	
	@classmethod
	def parse(cls, value: Any) -> 'BoundExpr':
		"""Read a named class or a {kind, coeffs} object"""
		if isinstance(value, BoundExpr):
			return value
		if isinstance(value, str):
			if value not in NAMED:
				raise InputError(f"unknown bound class {value!r}; expected one of {sorted(NAMED)}")
			return NAMED[value]
		if isinstance(value, dict):
			if 'kind' not in value:
				raise InputError("bound object needs a 'kind'")
			coeffs = value.get('coeffs', [])
			if not isinstance(coeffs, (list, tuple)):
				raise InputError("bound coeffs must be an array")
			return cls(value['kind'], tuple(coeffs))
		raise InputError(f"cannot read a bound from {value!r}")
	
	@property
	def degree(self) -> Union[int, str]:
		if self.kind == EXP:
			return INFINITE_DEGREE
		return max(len(self.coeffs) - 1, 0)
	
	def to_poly(self) -> sympy.Poly:
		"""The polynomial part: the bound itself, or the exponent of an exp bound"""
		rationals = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)] or [0]
		return sympy.Poly(rationals, L, domain='QQ')
	
	@classmethod
	def from_poly(cls, kind: str, poly: sympy.Poly) -> 'BoundExpr':
		coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
		return cls(kind, tuple(coeffs))
	
	def evaluate(self, length: int) -> Number:
		"""Value at L = length; exp bounds are evaluated exactly when the exponent is integral"""
		value = sum((c * length ** i for i, c in enumerate(self.coeffs)), Fraction(0))
		if self.kind == POLY:
			return value.numerator if value.denominator == 1 else value
		if value.denominator == 1:
			return 2 ** value.numerator
		return 2 ** float(value)
	
	def to_dict(self) -> Dict[str, Any]:
		return {'kind': self.kind, 'coeffs': [_serialize(c) for c in self.coeffs], 'degree': self.degree}
	
	def __str__(self) -> str:
		expr = self.to_poly().as_expr()
		return str(expr) if self.kind == POLY else f"2**({expr})"


NAMED = {
	'linear': BoundExpr(POLY, (0, 1)),
	'quadratic': BoundExpr(POLY, (0, 0, 1)),
	'exponential': BoundExpr(EXP, (0, 1))
}


def sum_bounds(bounds: Sequence[BoundExpr]) -> BoundExpr:
	"""Canonical upper bound for the pointwise sum
	
	Polynomials add exactly. With exp terms present the sum is absorbed
	into one exponential: P + 2^a <= 2^(P + a) and 2^a + 2^b <= 2^(a + b + 1)
	for non-negative P, a, b.
	"""
	if not bounds:
		raise InputError("at least one bound is required")
	polys = [b.to_poly() for b in bounds if b.kind == POLY]
	exps = [b.to_poly() for b in bounds if b.kind == EXP]
	total = sum(polys + exps, sympy.Poly(0, L, domain='QQ'))
	if not exps:
		return BoundExpr.from_poly(POLY, total)
	return BoundExpr.from_poly(EXP, total + (len(exps) - 1))


def compose_dehn_bound(piece_bounds: Sequence[BoundExpr], lam: int, c: int, k: int) -> BoundExpr:
	"""Bound G(L) = lam * L * F(lam*C*L^2 + lam*K*L + L) with F the sum of the piece bounds
	
	The result certifies a recursive filling bound, hence a solvable word
	problem; it is not a Dehn function.
	
	Args:
		piece_bounds: One bound per piece, at least one
		lam: Positive wall-separation constant
		c: Positive quasi-isometry constant
		k: Non-negative quasi-isometry constant
	
	Returns:
		Canonical BoundExpr; degree 2d + 1 for polynomial F of degree d
	"""
	if lam < 1 or c < 1:
		raise InputError(f"lambda and C must be positive, got {lam} and {c}")
	if k < 0:
		raise InputError(f"K must be non-negative, got {k}")
	f = sum_bounds(piece_bounds)
	inner = sympy.Poly(lam * c * L ** 2 + (lam * k + 1) * L, L, domain='QQ')
	outer = sympy.Poly(lam * L, L, domain='QQ')
	if f.kind == POLY:
		result = BoundExpr.from_poly(POLY, outer * f.to_poly().compose(inner))
	else:
		# lam*L*2^e <= 2^(e + lam*L)
		result = BoundExpr.from_poly(EXP, f.to_poly().compose(inner) + outer)
	logger.debug(f"composed bound over {len(piece_bounds)} pieces: {result}")
	return result
