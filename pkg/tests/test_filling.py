"""
Filling-function bounds
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import InputError
from filling import EXP, INFINITE_DEGREE, NAMED, POLY, BoundExpr, compose_dehn_bound, sum_bounds

QUADRATIC = NAMED['quadratic']
LINEAR = NAMED['linear']
EXPONENTIAL = NAMED['exponential']

bounds = st.one_of(
	st.builds(BoundExpr.poly, st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(any)),
	st.builds(BoundExpr.exp, st.lists(st.integers(0, 2), max_size=3))
)


def test_quadratic_piece_gives_degree_five():
	bound = compose_dehn_bound([QUADRATIC], 1, 1, 1)
	assert bound.kind == POLY
	assert bound.coeffs == (0, 0, 0, 4, 4, 1)
	assert bound.degree == 5
	assert bound.evaluate(1) == 9
	assert bound.evaluate(2) == 128
	assert str(bound) == 'L**5 + 4*L**4 + 4*L**3'


def test_linear_piece_gives_degree_three():
	bound = compose_dehn_bound([LINEAR], 1, 1, 1)
	assert bound.coeffs == (0, 0, 2, 1)
	assert bound.degree == 3


def test_piece_bounds_add_before_composition():
	assert compose_dehn_bound([QUADRATIC, QUADRATIC], 1, 1, 1).coeffs == (0, 0, 0, 8, 8, 2)
	assert compose_dehn_bound([LINEAR, QUADRATIC], 2, 1, 1).degree == 5


def test_exponential_piece_stays_exponential():
	bound = compose_dehn_bound([EXPONENTIAL], 1, 1, 1)
	assert bound.kind == EXP
	assert bound.coeffs == (0, 3, 1)
	assert bound.degree == INFINITE_DEGREE


def test_sum_absorbs_into_exponential():
	assert sum_bounds([QUADRATIC, EXPONENTIAL]) == BoundExpr.exp([0, 1, 1])
	assert sum_bounds([EXPONENTIAL, EXPONENTIAL]) == BoundExpr.exp([1, 2])
	assert sum_bounds([LINEAR, QUADRATIC]) == BoundExpr.poly([0, 1, 1])
	with pytest.raises(InputError):
		sum_bounds([])


@settings(max_examples=60, deadline=None)
@given(st.lists(bounds, min_size=1, max_size=4), st.integers(0, 6))
def test_sum_dominates_pointwise(parts, length):
	assert sum_bounds(parts).evaluate(length) >= sum(b.evaluate(length) for b in parts)


@settings(max_examples=60, deadline=None)
@given(st.lists(bounds, min_size=1, max_size=4), st.randoms(use_true_random=False))
def test_sum_ignores_piece_order(parts, rng):
	shuffled = list(parts)
	rng.shuffle(shuffled)
	assert sum_bounds(parts) == sum_bounds(shuffled)


@settings(max_examples=60, deadline=None)
@given(st.lists(bounds, min_size=1, max_size=3), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2), st.integers(0, 4))
def test_composition_is_monotone_and_dominates(parts, lam, c, k, length):
	bound = compose_dehn_bound(parts, lam, c, k)
	assert bound.evaluate(length) <= bound.evaluate(length + 1)
	inner = lam * c * length ** 2 + lam * k * length + length
	assert bound.evaluate(length) >= lam * length * sum_bounds(parts).evaluate(inner)


def test_composition_constants_are_checked():
	with pytest.raises(InputError):
		compose_dehn_bound([QUADRATIC], 0, 1, 0)
	with pytest.raises(InputError):
		compose_dehn_bound([QUADRATIC], 1, 0, 0)
	with pytest.raises(InputError):
		compose_dehn_bound([QUADRATIC], 1, 1, -1)


def test_parse_named_and_explicit_bounds():
	assert BoundExpr.parse('quadratic') is QUADRATIC
	assert BoundExpr.parse({'kind': 'poly', 'coeffs': [1, '1/2', 0]}).coeffs == (1, Fraction(1, 2))
	assert BoundExpr.parse({'kind': 'exp', 'coeffs': ['3']}) == BoundExpr.exp([3])
	for bad in ('cubic', {'coeffs': [1]}, {'kind': 'poly', 'coeffs': 1}, {'kind': 'log'}, 7):
		with pytest.raises(InputError):
			BoundExpr.parse(bad)
	for coeff in (-1, True, 'x', '1/0'):
		with pytest.raises(InputError):
			BoundExpr.poly([coeff])


def test_serialization():
	assert BoundExpr.poly([0, '1/2']).to_dict() == {'kind': POLY, 'coeffs': [0, '1/2'], 'degree': 1}
	assert EXPONENTIAL.to_dict() == {'kind': EXP, 'coeffs': [0, 1], 'degree': INFINITE_DEGREE}
	assert BoundExpr.poly([3]).degree == 0
	assert str(EXPONENTIAL) == '2**(L)'


def test_evaluation():
	assert EXPONENTIAL.evaluate(10) == 1024
	assert BoundExpr.exp([0, '1/2']).evaluate(3) == pytest.approx(2 ** 1.5)
	assert BoundExpr.poly([0, '1/2']).evaluate(3) == Fraction(3, 2)


def _enlarge(bound, extra):
	padded = list(bound.coeffs) + [0] * max(len(extra) - len(bound.coeffs), 0)
	return BoundExpr(bound.kind, tuple(c + e for c, e in zip(padded, list(extra) + [0] * len(padded))))


@settings(max_examples=60, deadline=None)
@given(
	st.lists(st.tuples(bounds, st.lists(st.integers(0, 2), max_size=3)), min_size=1, max_size=3),
	st.integers(1, 2),
	st.integers(1, 2),
	st.integers(0, 2),
	st.integers(0, 4)
)
def test_composition_grows_with_larger_piece_bounds(pairs, lam, c, k, length):
	smaller = [b for b, _ in pairs]
	larger = [_enlarge(b, extra) for b, extra in pairs]
	for b, bigger in zip(smaller, larger):
		assert b.evaluate(length) <= bigger.evaluate(length)
	assert compose_dehn_bound(smaller, lam, c, k).evaluate(length) <= compose_dehn_bound(larger, lam, c, k).evaluate(length)


def test_zero_polynomial_is_not_a_bound():
	for coeffs in ([], [0], [0, 0, 0]):
		with pytest.raises(InputError):
			BoundExpr.poly(coeffs)
	with pytest.raises(InputError):
		BoundExpr.parse({'kind': 'poly'})
	assert BoundExpr.exp([]).evaluate(5) == 1
