"""
Manifest generators: reference manifolds and random irreducible ones
"""
import random
from typing import Any, Dict, List, Optional, Sequence

from equiv import transverse_matrix
from lattice import IntMatrix
from model import fibers_meet

Manifest = Dict[str, Any]

PHI = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 1]]


def piece(pid: str, base_dim: int, fiber_dim: int, cusps: Sequence[str], label: Optional[str] = None) -> Dict[str, Any]:
	entry = {'id': pid, 'base_dim': base_dim, 'fiber_dim': fiber_dim, 'cusps': list(cusps)}
	if label is not None:
		entry['label'] = label
	return entry


def gluing(gid: str, source: Sequence[str], target: Sequence[str], matrix: Any) -> Dict[str, Any]:
	rows = matrix.to_list() if isinstance(matrix, IntMatrix) else [list(r) for r in matrix]
	return {'id': gid, 'from': list(source), 'to': list(target), 'matrix': rows}


def single_piece_manifest(base_dim: int, fiber_dim: int, cusps: Sequence[str] = ('c1',), label: str = 'hyp') -> Manifest:
	"""One piece, no gluings"""
	return {'n': base_dim + fiber_dim, 'pieces': [piece('V1', base_dim, fiber_dim, cusps, label)], 'gluings': []}


def double_manifest(n: int, fiber_dim: int, matrix: Any, labels: Sequence[str] = ('a', 'a')) -> Manifest:
	"""Two pieces with one cusp each, glued once"""
	base = n - fiber_dim
	return {
		'n': n,
		'pieces': [piece('V1', base, fiber_dim, ['c'], labels[0]), piece('V2', base, fiber_dim, ['c'], labels[1])],
		'gluings': [gluing('g1', ['V1', 'c'], ['V2', 'c'], matrix)]
	}


def identity_double(n: int = 4, fiber_dim: int = 1) -> Manifest:
	return double_manifest(n, fiber_dim, IntMatrix.identity(n - 1))


def transverse_double(n: int = 4, fiber_dim: int = 1) -> Manifest:
	return double_manifest(n, fiber_dim, transverse_matrix(n - 1, fiber_dim, fiber_dim))


def notqi_manifest() -> Manifest:
	"""Two T^2-fibered pieces glued along two walls by the identity and by
	(a, c, d) -> (a, c, c + d); the fiber monodromy is [[1, 0], [1, 1]]."""
	return {
		'n': 5,
		'pieces': [piece('V1', 3, 2, ['A', "A'"], 'a'), piece('V2', 3, 2, ['A', "A'"], 'a')],
		'gluings': [
			gluing('g1', ['V1', 'A'], ['V2', 'A'], IntMatrix.identity(4)),
			gluing('g2', ['V2', "A'"], ['V1', "A'"], PHI)
		]
	}


def trivial_fiber_manifest() -> Manifest:
	"""A fiberless piece glued to a circle-fibered one"""
	return {
		'n': 4,
		'pieces': [piece('V1', 4, 0, ['c'], 'hyp'), piece('V2', 3, 1, ['c'], 'fib')],
		'gluings': [gluing('g1', ['V1', 'c'], ['V2', 'c'], transverse_matrix(3, 0, 1))]
	}


def chain_manifest(length: int = 3, n: int = 4, fiber_dim: int = 1) -> Manifest:
	"""Pieces V1 - V2 - ... glued in a line by transverse gluings"""
	base = n - fiber_dim
	pieces = []
	for i in range(1, length + 1):
		cusps = [c for c, keep in (('l', i > 1), ('r', i < length)) if keep]
		pieces.append(piece(f"V{i}", base, fiber_dim, cusps, 'a'))
	matrix = transverse_matrix(n - 1, fiber_dim, fiber_dim)
	gluings = [gluing(f"g{i}", [f"V{i}", 'r'], [f"V{i + 1}", 'l'], matrix) for i in range(1, length)]
	return {'n': n, 'pieces': pieces, 'gluings': gluings}


def classifier_manifests() -> Dict[str, Manifest]:
	"""Hand-built manifolds covering the classifier's cases"""
	return {
		'single_fiberless': single_piece_manifest(3, 0),
		'single_fibered': single_piece_manifest(3, 2),
		'transverse_double': transverse_double(),
		'trivial_fiber_piece': trivial_fiber_manifest(),
		'two_walls': chain_manifest(3),
		'notqi': notqi_manifest()
	}


def knot_complement_manifest(weight: int = 1) -> Manifest:
	"""Knot complement with one cusp: the longitude bounds a Seifert surface"""
	manifest = single_piece_manifest(3, 0, ('c',))
	manifest['homology'] = {
		'h1_boundary_rank': 2,
		'h1_interior_rank': 1,
		'i_star': [[1, 0]],
		'b': [[0, 1]],
		'weights': [weight]
	}
	return manifest


def random_unimodular(rng: random.Random, size: int, steps: int = 12) -> IntMatrix:
	"""Product of random elementary operations"""
	if size < 2:
		return IntMatrix.of([[rng.choice((1, -1))]] if size else [], size)
	rows = [list(r) for r in IntMatrix.identity(size).rows]
	for _ in range(steps):
		i, j = rng.sample(range(size), 2)
		move = rng.random()
		if move < 0.7:
			factor = rng.choice((-2, -1, 1, 2))
			rows[i] = [a + factor * b for a, b in zip(rows[i], rows[j])]
		elif move < 0.85:
			rows[i], rows[j] = rows[j], rows[i]
		else:
			rows[i] = [-a for a in rows[i]]
	return IntMatrix.of(rows, size)


def random_transverse_matrix(rng: random.Random, rank: int, source_fiber_dim: int, target_fiber_dim: int, attempts: int = 20) -> IntMatrix:
	"""Random unimodular gluing with transverse fibers, or the reference one"""
	for _ in range(attempts):
		candidate = random_unimodular(rng, rank)
		if fibers_meet(candidate, source_fiber_dim, target_fiber_dim).is_zero:
			return candidate
	return transverse_matrix(rank, source_fiber_dim, target_fiber_dim)


def random_irreducible_manifest(seed: int, max_pieces: int = 5) -> Manifest:
	"""Random connected irreducible manifold with 4 <= n <= 6"""
	rng = random.Random(seed)
	n = rng.randint(4, 6)
	rank = n - 1
	count = rng.randint(1, max_pieces)
	fibers = [rng.randint(1, rank // 2) for _ in range(count)]
	edges = [(rng.randrange(i), i) for i in range(1, count)]
	if rng.random() < 0.5:
		a = rng.randrange(count)
		edges.append((a, rng.randrange(count)))
	cusps: List[List[str]] = [[] for _ in range(count)]
	gluings = []
	for index, (a, b) in enumerate(edges, start=1):
		cusps[a].append(f"e{index}s")
		cusps[b].append(f"e{index}t")
		matrix = random_transverse_matrix(rng, rank, fibers[a], fibers[b])
		gluings.append(gluing(f"g{index}", [f"V{a + 1}", f"e{index}s"], [f"V{b + 1}", f"e{index}t"], matrix))
	pieces = []
	for i in range(count):
		own = cusps[i] or ['free']
		pieces.append(piece(f"V{i + 1}", n - fibers[i], fibers[i], own, rng.choice(('a', 'b'))))
	return {'n': n, 'pieces': pieces, 'gluings': gluings}
