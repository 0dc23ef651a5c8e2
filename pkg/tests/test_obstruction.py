"""
Monodromy, Euler-class and twisted-double certificates
"""
import random

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import InputError
from lattice import IntMatrix
from model import gluing_is_transverse, is_closed, is_irreducible, validate
from obstruction import (
	EXPONENTIAL,
	NO_OBSTRUCTION,
	OBSTRUCTED,
	QUASI_UNIPOTENT,
	UNIPOTENT,
	Certificate,
	cycle_fiber_monodromy,
	detect_distorted_wall,
	double_gluing_matrix,
	euler_class_obstruction,
	finite_order_bound,
	homology_inputs,
	is_finite_order,
	monodromy_sub_kind,
	restricted_fiber_map,
	twisted_double_from_manifold,
	twisted_double_obstruction,
	verify_certificate
)
from utils.generators import gluing, identity_double, knot_complement_manifest, piece, random_unimodular

KNOT_I_STAR = IntMatrix.of([[1, 0]])


def _swap_manifest():
	swap = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
	return {
		'n': 5,
		'pieces': [piece('V1', 3, 2, ['A', "A'"], 'a'), piece('V2', 3, 2, ['A', "A'"], 'a')],
		'gluings': [
			gluing('g1', ['V1', 'A'], ['V2', 'A'], IntMatrix.identity(4)),
			gluing('g2', ['V2', "A'"], ['V1', "A'"], swap)
		]
	}


def test_notqi_has_unipotent_monodromy(notqi):
	cert = detect_distorted_wall(notqi, 6)
	assert cert.verdict == OBSTRUCTED
	assert cert.witness['matrix'] == [[1, 0], [1, 1]]
	assert cert.witness['sub_kind'] == UNIPOTENT
	assert cert.witness['cycle'] == [{'gluing': 'g1', 'forward': True}, {'gluing': 'g2', 'forward': True}]
	assert verify_certificate(cert, notqi) == (True, '')


def test_parallel_search_matches_serial(notqi):
	assert detect_distorted_wall(notqi, 6, workers=4).witness == detect_distorted_wall(notqi, 6).witness


def test_single_wall_has_no_cycles(identity_pair):
	cert = detect_distorted_wall(identity_pair, 6)
	assert cert.verdict == NO_OBSTRUCTION
	assert cert.witness['defined_monodromies'] == 0
	assert cert.notes
	assert verify_certificate(cert, identity_pair)[0]


def test_finite_order_monodromy_is_not_an_obstruction():
	manifold = validate(_swap_manifest())
	cert = detect_distorted_wall(manifold, 4)
	assert cert.verdict == NO_OBSTRUCTION
	assert cert.witness['defined_monodromies'] > 0
	assert cycle_fiber_monodromy(manifold, [('g1', True), ('g2', True)]) == IntMatrix.of([[0, 1], [1, 0]])


def test_transverse_gluing_cuts_walks(transverse_pair):
	assert restricted_fiber_map(transverse_pair, ('g1', True)) is None
	cert = detect_distorted_wall(transverse_pair, 4)
	assert cert.verdict == NO_OBSTRUCTION
	assert cert.witness['walks_cut'] > 0


def test_reverse_cycle_gives_inverse(notqi):
	forward = cycle_fiber_monodromy(notqi, [('g1', True), ('g2', True)])
	backward = cycle_fiber_monodromy(notqi, [('g2', False), ('g1', False)])
	assert backward == forward.inverse()


def test_cycle_must_close(notqi):
	with pytest.raises(InputError):
		cycle_fiber_monodromy(notqi, [('g1', True)])
	with pytest.raises(InputError):
		cycle_fiber_monodromy(notqi, [])
	with pytest.raises(InputError):
		detect_distorted_wall(notqi, 0)


def test_finite_order_bound():
	assert finite_order_bound(1) == 2
	assert finite_order_bound(2) == 12
	for order, matrix in ((4, [[0, -1], [1, 0]]), (6, [[1, -1], [1, 0]]), (3, [[0, -1], [1, -1]])):
		m = IntMatrix.of(matrix)
		assert m.power(order).is_identity
		assert is_finite_order(m)
		assert monodromy_sub_kind(m) is None


def test_monodromy_sub_kinds():
	assert monodromy_sub_kind(IntMatrix.of([[1, 0], [1, 1]])) == UNIPOTENT
	assert monodromy_sub_kind(IntMatrix.of([[-1, 1], [0, -1]])) == QUASI_UNIPOTENT
	assert monodromy_sub_kind(IntMatrix.of([[2, 1], [1, 1]])) == EXPONENTIAL


def test_tampered_monodromy_certificate_fails(notqi):
	cert = detect_distorted_wall(notqi, 6)
	witness = dict(cert.witness, matrix=[[1, 0], [2, 1]])
	ok, reason = verify_certificate(Certificate(cert.kind, cert.verdict, witness, cert.provenance), notqi)
	assert not ok
	assert 'reproduce' in reason
	finite = dict(cert.witness, matrix=[[0, 1], [1, 0]])
	assert not verify_certificate(Certificate(cert.kind, cert.verdict, finite))[0]


def test_euler_kernel_witness():
	cert = euler_class_obstruction(2, IntMatrix.of([[1, 1]]))
	assert cert.obstructed
	assert cert.witness['kernel_vector'] == [1, -1]
	assert cert.witness['kernel_rank'] == 1
	assert verify_certificate(cert) == (True, '')


def test_injective_i_star_is_flagged():
	cert = euler_class_obstruction(2, IntMatrix.identity(2))
	assert cert.verdict == NO_OBSTRUCTION
	assert 'injective' in cert.notes[0]
	assert verify_certificate(cert)[0]


def test_zero_map_kills_first_generator():
	cert = euler_class_obstruction(3, IntMatrix.of([[0, 0, 0]]))
	assert cert.witness['kernel_vector'] == [1, 0, 0]
	assert cert.witness['kernel_rank'] == 3


def test_euler_rejects_column_mismatch():
	with pytest.raises(InputError):
		euler_class_obstruction(3, IntMatrix.of([[1, 1]]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6), st.integers(0, 10**6))
def test_euler_verdict_survives_change_of_basis(entries, seed):
	i_star = IntMatrix.of([entries[:3], entries[3:]])
	u = random_unimodular(random.Random(seed), 3)
	moved = euler_class_obstruction(3, i_star @ u)
	assert euler_class_obstruction(3, i_star).verdict == moved.verdict
	assert verify_certificate(moved)[0]


def test_malformed_euler_witness():
	ok, reason = verify_certificate(Certificate('euler_class', OBSTRUCTED, {}))
	assert not ok
	assert 'malformed' in reason


def test_homology_inputs(knot_data):
	rank, i_star = homology_inputs(knot_data['homology'])
	assert rank == 2
	assert i_star == KNOT_I_STAR
	with pytest.raises(InputError):
		homology_inputs(None)
	with pytest.raises(InputError):
		homology_inputs(dict(knot_data['homology'], h1_interior_rank=3))
	assert homology_inputs({'h1_boundary_rank': 2, 'i_star': []})[1].shape == (0, 2)


@pytest.mark.parametrize('weight', [1, 5])
def test_knot_twisted_double(weight):
	cert, double = twisted_double_obstruction(3, ('c',), KNOT_I_STAR, [(0, 1)], [weight])
	assert cert.obstructed
	assert cert.witness['positivity_sum'] == weight
	assert double.n == 4
	assert [p.id for p in double.pieces] == ['V+', 'V-']
	assert double.gluing('g1').matrix == IntMatrix.of([[1, 0, 0], [0, 1, weight], [0, 0, 1]])
	assert is_irreducible(double)[0]
	assert verify_certificate(cert, double) == (True, '')


def test_twisted_double_from_manifest():
	cert, double = twisted_double_from_manifold(validate(knot_complement_manifest(5)))
	assert cert.witness['weights'] == [5]
	assert double.gluing('g1').matrix == double_gluing_matrix(3, 5, (0, 1))


def test_twisted_double_input_errors():
	with pytest.raises(InputError):
		twisted_double_obstruction(3, ('c',), KNOT_I_STAR, [(0, 0)])
	with pytest.raises(InputError):
		twisted_double_obstruction(3, ('c',), IntMatrix.of([[0, 1]]), [(0, 1)])
	with pytest.raises(InputError):
		twisted_double_obstruction(3, ('c',), KNOT_I_STAR, [(0, 1)], [0])
	with pytest.raises(InputError):
		twisted_double_obstruction(2, ('c',), IntMatrix.of([[0]]), [(1,)])
	with pytest.raises(InputError):
		twisted_double_from_manifold(validate(identity_double()))


def test_zero_class_cusps_are_glued_transversally():
	i_star = IntMatrix.of([[1, 0, 0, 0]])
	cert, double = twisted_double_obstruction(3, ('c', 'd'), i_star, [(0, 1), (0, 0)])
	assert is_closed(double)
	assert [g.id for g in double.gluings] == ['g1', 'g2']
	assert double.gluing('g2').matrix == IntMatrix.of([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
	assert gluing_is_transverse(double, 'g2')[0]
	assert is_irreducible(double) == (True, [])
	assert cert.witness['positivity_sum'] == 1
	assert verify_certificate(cert, double) == (True, '')


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(any), st.integers(1, 4))
def test_twisted_double_is_always_closed(seconds, weight):
	cusps = tuple(f"c{i}" for i in range(len(seconds)))
	i_star = IntMatrix.of([[1] + [0] * (2 * len(cusps) - 1)])
	cert, double = twisted_double_obstruction(3, cusps, i_star, [(0, s) for s in seconds], [weight] * len(cusps))
	assert is_closed(double)
	assert len(double.gluings) == len(cusps)
	assert cert.witness['positivity_sum'] == weight * sum(s * s for s in seconds)


def test_tampered_twisted_double_fails():
	cert, double = twisted_double_obstruction(3, ('c',), KNOT_I_STAR, [(0, 1)], [2])
	ok, reason = verify_certificate(Certificate(cert.kind, cert.verdict, dict(cert.witness, positivity_sum=7)))
	assert not ok
	assert 'positivity' in reason
	_, other = twisted_double_obstruction(3, ('c',), KNOT_I_STAR, [(0, 1)], [3])
	assert not verify_certificate(cert, other)[0]


def test_certificate_round_trip():
	cert = euler_class_obstruction(2, IntMatrix.of([[1, 1]]))
	assert Certificate.from_dict(cert.to_dict()) == cert
	with pytest.raises(InputError):
		Certificate.from_dict({'kind': 'other', 'verdict': OBSTRUCTED})
	with pytest.raises(InputError):
		Certificate.from_dict({'verdict': OBSTRUCTED})
