"""
Manifest validation, predicates and the property classifier
"""
import copy
import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import ManifestError
from equiv import remark_matrix
from model import (
	classify_properties,
	fibers_meet,
	gluing_is_transverse,
	has_transverse_pair,
	internal_wall_count,
	is_closed,
	is_irreducible,
	manifest_to_dict,
	quotient_graph,
	separating_walls,
	validate
)
from utils.generators import double_manifest, random_irreducible_manifest, random_unimodular, single_piece_manifest


def test_notqi_is_not_irreducible(notqi):
	irreducible, failing = is_irreducible(notqi)
	assert not irreducible
	assert failing == ['g1', 'g2']
	assert not has_transverse_pair(notqi)
	assert is_closed(notqi)
	assert internal_wall_count(notqi) == 2


def test_transverse_double(transverse_pair):
	ok, witness = gluing_is_transverse(transverse_pair, 'g1')
	assert ok and witness.is_zero
	assert is_irreducible(transverse_pair) == (True, [])
	assert separating_walls(transverse_pair) == ['g1']


def test_identity_gluing_shares_fibers(identity_pair):
	ok, witness = gluing_is_transverse(identity_pair, 'g1')
	assert not ok
	assert witness.rank == 1


def test_literal_remark_matrices_are_transverse():
	for n in range(1, 7):
		assert fibers_meet(remark_matrix(n), 1, 1).is_zero


def test_single_piece_is_vacuously_irreducible(single_fibered):
	assert is_irreducible(single_fibered) == (True, [])
	assert not is_closed(single_fibered)


def test_validation_collects_every_violation():
	manifest = double_manifest(4, 1, [[1, 0, 0], [0, 2, 0], [0, 0, 1]])
	manifest['pieces'][1]['fiber_dim'] = 2
	manifest['gluings'].append({'from': ['V1', 'zz'], 'to': ['V2', 'c'], 'matrix': [[1]]})
	with pytest.raises(ManifestError) as caught:
		validate(manifest)
	text = ' | '.join(caught.value.violations)
	assert 'non-unimodular' in text
	assert 'dimension inconsistency' in text
	assert "no cusp 'zz'" in text
	assert 'already used' in text
	assert len(caught.value.violations) >= 4


def test_schema_rejects_unknown_keys():
	manifest = single_piece_manifest(3, 1)
	manifest['colour'] = 'blue'
	with pytest.raises(ManifestError) as caught:
		validate(manifest)
	assert any('colour' in v for v in caught.value.violations)


def test_disconnected_graph_is_rejected():
	manifest = single_piece_manifest(3, 1)
	manifest['pieces'].append({'id': 'V2', 'base_dim': 3, 'fiber_dim': 1, 'cusps': ['d']})
	with pytest.raises(ManifestError) as caught:
		validate(manifest)
	assert any('connected' in v for v in caught.value.violations)


def test_low_dimension_and_surface_pieces():
	with pytest.raises(ManifestError):
		validate(single_piece_manifest(2, 1))
	surface = single_piece_manifest(2, 1)
	surface['extended'] = True
	assert validate(surface).pieces[0].is_surface


def test_extended_surface_fibers_must_not_match():
	manifest = double_manifest(3, 1, [[1, 0], [0, 1]])
	manifest['extended'] = True
	with pytest.raises(ManifestError) as caught:
		validate(manifest)
	assert any('identifies the fibers' in v for v in caught.value.violations)


def test_decimal_strings_and_big_integers():
	big = str(10 ** 30)
	manifest = double_manifest(3 + 1, 1, [['1', '0', big], ['0', '1', '0'], ['0', '0', '1']])
	manifold = validate(manifest)
	assert manifold.gluings[0].matrix.rows[0][2] == 10 ** 30
	assert is_irreducible(manifold)[0]


def test_gluing_ids_default_by_position(notqi_data):
	data = copy.deepcopy(notqi_data)
	for g in data['gluings']:
		del g['id']
	assert [g.id for g in validate(data).gluings] == ['g1', 'g2']


def test_manifest_round_trip(notqi):
	assert validate(manifest_to_dict(notqi)) == notqi


def test_quotient_graph_attributes(notqi):
	graph = quotient_graph(notqi)
	assert graph.number_of_edges() == 2
	assert graph.nodes['V1']['fiber_dim'] == 2
	assert separating_walls(notqi) == []


def test_classifier_truth_table(classifier_inputs, classifier_table):
	assert set(classifier_inputs) == set(classifier_table)
	for name, manifest in classifier_inputs.items():
		report = classify_properties(validate(manifest))
		assert report.values() == classifier_table[name], name


def test_classifier_trails_name_hypotheses(notqi):
	report = classify_properties(notqi)
	assert any('non-transverse: g1, g2' in line for line in report.cstar_simple.trail)
	assert report.to_dict()['euler_char_zero_if_even_dim']['value'] is None


def test_sq_trail_marks_the_lone_piece_case(single_fibered):
	report = classify_properties(single_fibered)
	assert report.sq_universal_guaranteed.value is False
	assert any(line.startswith('single piece without internal walls: yes') for line in report.sq_universal_guaranteed.trail)


def _scrambled(seed):
	rng = random.Random(seed)
	manifold = validate(random_irreducible_manifest(seed))
	rank = manifold.torus_rank
	swapped = {g.id: random_unimodular(rng, rank) for g in manifold.gluings if rng.random() < 0.5}
	return rng, manifold.with_matrices(swapped)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(4, 6), st.integers(0, 5), st.integers(0, 5))
def test_transversality_is_symmetric_under_inverse(seed, n, f1, f2):
	rng = random.Random(seed)
	rank = n - 1
	matrix = random_unimodular(rng, rank)
	forward = fibers_meet(matrix, min(f1, rank), min(f2, rank))
	backward = fibers_meet(matrix.inverse(), min(f2, rank), min(f1, rank))
	assert forward.is_zero == backward.is_zero
	assert forward.rank == backward.rank
	manifold = validate(double_manifest(n, 1, matrix))
	g = manifold.gluing('g1')
	assert gluing_is_transverse(manifold, g)[0] == gluing_is_transverse(manifold, g.inverse())[0]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_irreducibility_survives_edge_deletion(seed):
	_, manifold = _scrambled(seed)
	irreducible, failing = is_irreducible(manifold)
	for g in manifold.gluings:
		smaller = dataclasses.replace(manifold, gluings=tuple(h for h in manifold.gluings if h.id != g.id))
		still, remaining = is_irreducible(smaller)
		assert set(remaining) <= set(failing)
		if irreducible:
			assert still


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_classifier_ignores_manifest_order(seed):
	rng, manifold = _scrambled(seed)
	data = manifest_to_dict(manifold)
	shuffled = copy.deepcopy(data)
	rng.shuffle(shuffled['pieces'])
	rng.shuffle(shuffled['gluings'])
	for p in shuffled['pieces']:
		rng.shuffle(p['cusps'])
	assert classify_properties(validate(shuffled)).values() == classify_properties(validate(data)).values()
