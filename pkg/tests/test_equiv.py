"""
Gluing-pattern equivalence, inequivalent families and labelled-graph invariants
"""
import random

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import InputError, UnsupportedOperation
from equiv import (
	Pregraph,
	apply_pattern,
	block_form,
	check_group,
	generate_distinct_family,
	gluing_patterns_equivalent,
	iso_necessary,
	qi_invariant_bisimilar,
	transverse_matrix,
	twist_matrix,
	verify_equivalence_witness
)
from lattice import IntMatrix, Lattice
from model import is_irreducible, validate
from utils.generators import (
	chain_manifest,
	double_manifest,
	gluing,
	identity_double,
	piece,
	random_unimodular,
	transverse_double
)

I2 = IntMatrix.identity(2)
SIGNS = [I2, -I2]


@pytest.fixture
def signed_pregraph():
	return Pregraph.from_manifold(validate(identity_double()), {'V1': SIGNS, 'V2': SIGNS})


@pytest.fixture
def plain_pregraph():
	return Pregraph.from_manifold(validate(identity_double()))


def test_identical_patterns_have_identity_witness(plain_pregraph):
	p = twist_matrix(3)
	equivalent, (n1, n2) = gluing_patterns_equivalent(plain_pregraph, 'g1', p, p)
	assert equivalent
	assert n1.is_identity and n2.is_identity


@pytest.mark.parametrize('n', range(1, 7))
@pytest.mark.parametrize('m', range(1, 7))
def test_twist_family_separated_by_entry(signed_pregraph, n, m):
	equivalent, witness = gluing_patterns_equivalent(signed_pregraph, 'g1', twist_matrix(n), twist_matrix(m))
	assert equivalent == (n == m)
	if not equivalent:
		assert witness is None


def test_fiber_flip_relates_opposite_twists(plain_pregraph):
	equivalent, (n1, n2) = gluing_patterns_equivalent(plain_pregraph, 'g1', twist_matrix(2), twist_matrix(-2))
	assert equivalent
	ok, reason = verify_equivalence_witness(plain_pregraph, 'g1', twist_matrix(2), twist_matrix(-2), n1, n2)
	assert ok, reason


def _unimodular(seed):
	return random_unimodular(random.Random(seed), 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_equivalence_is_reflexive_and_symmetric(first, second):
	pre = Pregraph.from_manifold(validate(identity_double()), {'V1': SIGNS, 'V2': SIGNS})
	p, q = _unimodular(first), _unimodular(second)
	assert gluing_patterns_equivalent(pre, 'g1', p, p)[0]
	forward, _ = gluing_patterns_equivalent(pre, 'g1', p, q)
	backward, _ = gluing_patterns_equivalent(pre, 'g1', q, p)
	assert forward == backward


@settings(max_examples=40, deadline=None)
@given(
	st.integers(0, 10**6),
	st.sampled_from([0, 1]),
	st.sampled_from([0, 1]),
	st.lists(st.integers(-3, 3), min_size=4, max_size=4),
	st.sampled_from([1, -1]),
	st.sampled_from([1, -1])
)
def test_block_form_action_stays_in_class(seed, t1, t2, entries, w1, w2):
	pre = Pregraph.from_manifold(validate(identity_double()), {'V1': SIGNS, 'V2': SIGNS})
	p = _unimodular(seed)
	n1 = block_form(SIGNS[t1], IntMatrix.of([entries[:2]]), IntMatrix.of([[w1]]))
	n2 = block_form(SIGNS[t2], IntMatrix.of([entries[2:]]), IntMatrix.of([[w2]]))
	moved = n2 @ p @ n1.inverse()
	equivalent, witness = gluing_patterns_equivalent(pre, 'g1', p, moved)
	assert equivalent
	ok, reason = verify_equivalence_witness(pre, 'g1', p, moved, *witness)
	assert ok, reason


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 1]), st.sampled_from([0, 1]), st.integers(-2, 2))
def test_witnesses_compose(seed, t1, t2, shift):
	pre = Pregraph.from_manifold(validate(identity_double()), {'V1': SIGNS, 'V2': SIGNS})
	p = _unimodular(seed)
	q = block_form(SIGNS[t2], IntMatrix.of([[shift, 0]]), IntMatrix.of([[1]])) @ p
	r = block_form(SIGNS[t1], IntMatrix.of([[0, 1]]), IntMatrix.of([[-1]])) @ q
	_, (a1, a2) = gluing_patterns_equivalent(pre, 'g1', p, q)
	_, (b1, b2) = gluing_patterns_equivalent(pre, 'g1', q, r)
	ok, reason = verify_equivalence_witness(pre, 'g1', p, r, b1 @ a1, b2 @ a2)
	assert ok, reason
	assert gluing_patterns_equivalent(pre, 'g1', p, r)[0]


def test_bad_witness_is_reported(plain_pregraph):
	p = twist_matrix(1)
	ok, reason = verify_equivalence_witness(plain_pregraph, 'g1', p, p, IntMatrix.identity(3), twist_matrix(1))
	assert not ok
	assert 'top-right' in reason


def test_equivalence_rejects_wrong_shapes(plain_pregraph):
	with pytest.raises(InputError):
		gluing_patterns_equivalent(plain_pregraph, 'g1', I2, I2)
	with pytest.raises(InputError):
		gluing_patterns_equivalent(plain_pregraph, 'g1', IntMatrix.of([[2, 0, 0], [0, 1, 0], [0, 0, 1]]), IntMatrix.identity(3))


def _loop_manifest():
	return {
		'n': 4,
		'pieces': [piece('V1', 3, 1, ['a', 'b'], 'a')],
		'gluings': [gluing('g1', ['V1', 'a'], ['V1', 'b'], transverse_matrix(3, 1, 1))]
	}


def test_loop_edges_are_unsupported():
	pre = Pregraph.from_manifold(validate(_loop_manifest()))
	p = transverse_matrix(3, 1, 1)
	with pytest.raises(UnsupportedOperation):
		gluing_patterns_equivalent(pre, 'g1', p, p)
	with pytest.raises(UnsupportedOperation):
		generate_distinct_family(pre, 'g1', 2)


def test_group_checks():
	assert check_group(SIGNS, 2) == (True, '')
	swap = IntMatrix.of([[0, 1], [1, 0]])
	assert check_group([I2, swap], 2)[0]
	assert not check_group([], 2)[0]
	assert not check_group([-I2], 2)[0]
	ok, reason = check_group([I2, IntMatrix.of([[1, 1], [0, 1]])], 2)
	assert not ok
	assert 'missing' in reason
	assert not check_group([IntMatrix.identity(3)], 2)[0]


def test_theta_from_manifest_puts_identity_first():
	manifest = identity_double()
	manifest['theta'] = {'V2': [[[-1, 0], [0, -1]], [[1, 0], [0, 1]]]}
	pre = Pregraph.from_manifold(validate(manifest))
	assert pre.group('V2') == (I2, -I2)
	assert pre.group('V1') == (I2,)


def test_theta_that_is_not_a_group_is_rejected():
	manifest = identity_double()
	manifest['theta'] = {'V1': [[[-1, 0], [0, -1]]]}
	with pytest.raises(InputError):
		Pregraph.from_manifold(validate(manifest))


def test_family_is_pairwise_inequivalent_and_irreducible(signed_pregraph):
	family = generate_distinct_family(signed_pregraph, 'g1', 10)
	assert len(family) == 10
	for j, pattern in enumerate(family, start=1):
		p = pattern.matrix('g1')
		assert p.column(2) == (1, j, 1)
		assert is_irreducible(apply_pattern(signed_pregraph.manifold, pattern))[0]
	for i, first in enumerate(family):
		for second in family[i + 1:]:
			assert not gluing_patterns_equivalent(signed_pregraph, 'g1', first.matrix('g1'), second.matrix('g1'))[0]


def test_family_lattices_lie_in_distinct_orbits(signed_pregraph):
	family = generate_distinct_family(signed_pregraph, 'g1', 5)
	lattices = [Lattice.from_generators(2, [p.matrix('g1').block(0, 2, 2, 3).column(0)]) for p in family]
	for i, first in enumerate(lattices):
		for second in lattices[i + 1:]:
			assert all(first != second.image(theta) for theta in SIGNS)


def test_single_member_family(plain_pregraph):
	family = generate_distinct_family(plain_pregraph, 'g1', 1)
	assert len(family) == 1
	assert family[0].matrix('g1').is_unimodular


def test_family_sets_other_edges_transverse():
	pre = Pregraph.from_manifold(validate(chain_manifest(3)))
	family = generate_distinct_family(pre, 'g1', 3)
	for pattern in family:
		assert pattern.matrix('g2') == transverse_matrix(3, 1, 1)


def test_family_rank_constraints(notqi):
	with pytest.raises(InputError):
		generate_distinct_family(Pregraph.from_manifold(notqi), 'g1', 2)
	with pytest.raises(InputError):
		generate_distinct_family(Pregraph.from_manifold(validate(identity_double())), 'g1', 0)


def test_apply_pattern_substitutes_matrices(plain_pregraph):
	pattern = generate_distinct_family(plain_pregraph, 'g1', 1)[0]
	glued = apply_pattern(plain_pregraph.manifold, pattern)
	assert glued.gluing('g1').matrix == pattern.matrix('g1')
	renamed = identity_double()
	renamed['gluings'][0]['id'] = 'h1'
	with pytest.raises(InputError):
		apply_pattern(validate(renamed), pattern)


def test_manifold_is_bisimilar_and_isomorphic_to_itself(transverse_pair):
	assert qi_invariant_bisimilar(transverse_pair, transverse_pair)
	isomorphic, mapping = iso_necessary(transverse_pair, transverse_pair)
	assert isomorphic
	assert set(mapping) == {'V1', 'V2'}


def test_non_commensurable_doubles_differ():
	first = validate(transverse_double())
	second = validate(double_manifest(4, 1, transverse_matrix(3, 1, 1), ('b', 'b')))
	assert not qi_invariant_bisimilar(first, second)
	assert iso_necessary(first, second) == (False, None)


def _moved_cusp(extra_on_first: bool):
	first_cusps = ['c', 'x'] if extra_on_first else ['c']
	second_cusps = ['c'] if extra_on_first else ['c', 'x']
	return validate({
		'n': 4,
		'pieces': [piece('V1', 3, 1, first_cusps, 'a'), piece('V2', 3, 1, second_cusps, 'b')],
		'gluings': [gluing('g1', ['V1', 'c'], ['V2', 'c'], transverse_matrix(3, 1, 1))]
	})


def test_bisimilarity_misses_cusp_placement():
	first, second = _moved_cusp(True), _moved_cusp(False)
	assert qi_invariant_bisimilar(first, second)
	assert not iso_necessary(first, second)[0]


def test_bisimilarity_is_coarser_than_isomorphism(chain, transverse_pair):
	assert qi_invariant_bisimilar(chain, transverse_pair)
	assert not iso_necessary(chain, transverse_pair)[0]


def test_invariants_need_labels(transverse_pair):
	unlabelled = validate(double_manifest(4, 1, transverse_matrix(3, 1, 1), (None, None)))
	with pytest.raises(InputError):
		qi_invariant_bisimilar(transverse_pair, unlabelled)
	with pytest.raises(InputError):
		iso_necessary(unlabelled, transverse_pair)


def test_isomorphism_rejects_unlabelled_manifolds(notqi_data):
	for p in notqi_data['pieces']:
		p.pop('label', None)
	stripped = validate(notqi_data)
	with pytest.raises(InputError):
		iso_necessary(stripped, stripped)
