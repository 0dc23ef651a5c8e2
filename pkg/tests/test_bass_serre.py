"""
Tree paths, acylindricity and Dehn twists
"""
import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import InputError
from bass_serre import (
	TreeEdge,
	TreePath,
	check_acylindricity,
	check_reduced,
	dehn_twist_has_infinite_order,
	edge_matrix,
	enumerate_path_shapes,
	path_fix_lattice
)
from lattice import IntMatrix, Lattice
from model import is_irreducible, validate
from utils.generators import random_irreducible_manifest, random_unimodular


def test_fix_lattice_shrinks_along_transverse_path(transverse_pair):
	one = TreePath.from_traversals([('g1', True)])
	two = TreePath.from_traversals([('g1', True), ('g1', False)])
	three = TreePath.from_traversals([('g1', True), ('g1', False), ('g1', True)])
	assert path_fix_lattice(transverse_pair, one) == Lattice.full(3)
	assert path_fix_lattice(transverse_pair, two) == Lattice.from_generators(3, [(1, 0, -1)])
	assert path_fix_lattice(transverse_pair, three).is_zero


def test_u_turn_gets_fresh_coset():
	path = TreePath.from_traversals([('g1', True), ('g1', False)])
	assert path.edges[1].coset != path.edges[0].coset


def test_backtracking_path_is_rejected(transverse_pair):
	path = TreePath((TreeEdge('g1', True, 0), TreeEdge('g1', False, 0)))
	with pytest.raises(InputError):
		check_reduced(transverse_pair, path)
	with pytest.raises(InputError):
		path_fix_lattice(transverse_pair, TreePath(()))


def test_path_shapes(transverse_pair):
	assert len(list(enumerate_path_shapes(transverse_pair, 2))) == 2
	assert list(enumerate_path_shapes(transverse_pair, 0)) == []


def test_acylindricity_of_transverse_double(transverse_pair):
	verdict = check_acylindricity(transverse_pair, 4)
	assert verdict.bounded
	assert verdict.k == 3
	assert verdict.longest_nontrivial == 2
	assert verdict.witness.length == 2
	assert verdict.to_dict()['witness_lattice']['rank'] == 1


def test_notqi_is_not_acylindrical_within_bound(notqi):
	verdict = check_acylindricity(notqi, 4)
	assert not verdict.bounded
	assert verdict.k is None
	assert verdict.longest_nontrivial == 4


def test_parallel_search_agrees(chain):
	assert check_acylindricity(chain, 4, workers=3) == check_acylindricity(chain, 4)


def test_max_len_floor(chain):
	with pytest.raises(InputError):
		check_acylindricity(chain, 2)


def test_single_piece_has_bound_one(single_fibered):
	verdict = check_acylindricity(single_fibered, 3)
	assert verdict.bounded and verdict.k == 1


def test_random_irreducible_manifolds_are_uniformly_acylindrical():
	for seed in range(100):
		manifold = validate(random_irreducible_manifest(seed))
		assert is_irreducible(manifold)[0], seed
		verdict = check_acylindricity(manifold, 4)
		assert verdict.bounded and verdict.k <= 3, seed
		for path in enumerate_path_shapes(manifold, 3):
			assert path_fix_lattice(manifold, path).is_zero, (seed, path)


def test_dehn_twist_order(transverse_pair, notqi):
	finite, witness = dehn_twist_has_infinite_order(transverse_pair, 'g1', (1, 0, 0))
	assert not finite
	assert witness.fiber_sum == Lattice.coordinate(3, [0, 2])
	infinite, witness = dehn_twist_has_infinite_order(transverse_pair, 'g1', (0, 1, 0))
	assert infinite and witness.intersection.is_zero
	assert dehn_twist_has_infinite_order(notqi, 'g1', (1, 0, 0, 0))[0]
	assert not dehn_twist_has_infinite_order(notqi, 'g2', (0, 0, 2, 0))[0]


def test_dehn_twist_input_errors(transverse_pair):
	with pytest.raises(InputError):
		dehn_twist_has_infinite_order(transverse_pair, 'g1', (0, 0, 0))
	with pytest.raises(InputError):
		dehn_twist_has_infinite_order(transverse_pair, 'g1', (1, 0))
	with pytest.raises(InputError):
		dehn_twist_has_infinite_order(transverse_pair, 'nope', (1, 0, 0))


def _mixed_manifold(seed):
	"""Random manifold where some gluings are swapped for arbitrary unimodular ones"""
	rng = random.Random(seed)
	manifold = validate(random_irreducible_manifest(seed))
	swapped = {g.id: random_unimodular(rng, manifold.torus_rank) for g in manifold.gluings if rng.random() < 0.5}
	return manifold.with_matrices(swapped)


def _frame_change(manifold, path):
	accumulated = IntMatrix.identity(manifold.torus_rank)
	for edge in path.edges:
		accumulated = edge_matrix(manifold, edge) @ accumulated
	return accumulated


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_reversed_path_fixes_the_transported_lattice(seed, length):
	manifold = _mixed_manifold(seed)
	for path in itertools.islice(enumerate_path_shapes(manifold, length), 25):
		back = path.reversed()
		check_reduced(manifold, back)
		expected = path_fix_lattice(manifold, path).image(_frame_change(manifold, path))
		assert path_fix_lattice(manifold, back) == expected
		assert [pid for pid, _ in back.vertices(manifold)] == [pid for pid, _ in reversed(path.vertices(manifold))]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_fix_lattices_shrink_as_paths_grow(seed):
	manifold = _mixed_manifold(seed)
	for path in itertools.islice(enumerate_path_shapes(manifold, 3), 25):
		lattices = [path_fix_lattice(manifold, TreePath(path.edges[:j])) for j in (1, 2, 3)]
		assert lattices[0] == Lattice.full(manifold.torus_rank)
		assert lattices[2].is_sublattice_of(lattices[1])
		assert lattices[1].is_sublattice_of(lattices[0])
		interior = manifold.piece(path.vertices(manifold)[1][0])
		assert lattices[1].rank <= interior.fiber_dim
