"""
Labelled-graph invariants: bisimilarity and decorated isomorphism
"""
import logging
from typing import Dict, Optional, Set, Tuple

from networkx.algorithms import isomorphism

from core.errors import InputError
from model import GraphManifold, quotient_graph

logger = logging.getLogger(__name__)

Node = Tuple[int, str]

NODE_ATTRIBUTES = ('label', 'base_dim', 'fiber_dim', 'cusp_count')


def _require_labels(manifold: GraphManifold, side: str) -> None:
	missing = [p.id for p in manifold.pieces if not p.label]
	if missing:
		raise InputError(f"{side} manifold has pieces without labels: {missing}")


def _neighbours(manifold: GraphManifold, side: int) -> Dict[Node, Set[Node]]:
	adjacency = {(side, p.id): set() for p in manifold.pieces}
	for g in manifold.gluings:
		adjacency[(side, g.source.piece)].add((side, g.target.piece))
		adjacency[(side, g.target.piece)].add((side, g.source.piece))
	return adjacency


def bisimulation_classes(m1: GraphManifold, m2: GraphManifold) -> Dict[Node, int]:
	"""Coarsest bisimulation on the disjoint union of the two labelled graphs
	
	Starts from the partition by label and splits blocks by the set of
	blocks met among neighbours until nothing splits.
	
	Returns:
		(side, piece id) -> block number, side 0 for m1 and 1 for m2
	"""
	_require_labels(m1, 'first')
	_require_labels(m2, 'second')
	neighbours = {**_neighbours(m1, 0), **_neighbours(m2, 1)}
	labels = {(0, p.id): p.label for p in m1.pieces}
	labels.update({(1, p.id): p.label for p in m2.pieces})
	ordered = sorted(set(labels.values()))
	block = {node: ordered.index(label) for node, label in labels.items()}
	rounds = 0
	while True:
		rounds += 1
		signature = {
			node: (block[node], tuple(sorted({block[nb] for nb in neighbours[node]})))
			for node in neighbours
		}
		numbering = {sig: i for i, sig in enumerate(sorted(set(signature.values())))}
		refined = {node: numbering[sig] for node, sig in signature.items()}
		if len(numbering) == len(set(block.values())):
			logger.debug(f"bisimulation stable after {rounds} rounds with {len(numbering)} blocks")
			return refined
		block = refined


def qi_invariant_bisimilar(m1: GraphManifold, m2: GraphManifold) -> bool:
	"""Whether the labelled quotient graphs are bisimilar
	
	Equal answers are necessary for quasi-isometry; they are not sufficient.
	"""
	block = bisimulation_classes(m1, m2)
	first = {b for (side, _), b in block.items() if side == 0}
	second = {b for (side, _), b in block.items() if side == 1}
	return first == second


def iso_necessary(m1: GraphManifold, m2: GraphManifold) -> Tuple[bool, Optional[Dict[str, str]]]:
	"""Isomorphism of the decorated quotient multigraphs
	
	Returns:
		Tuple of (isomorphic, piece mapping from m1 to m2 or None)
	"""
	_require_labels(m1, 'first')
	_require_labels(m2, 'second')
	g1, g2 = quotient_graph(m1), quotient_graph(m2)
	if g1.number_of_nodes() != g2.number_of_nodes() or g1.number_of_edges() != g2.number_of_edges():
		return False, None
	
	def node_match(a, b):
		return all(a.get(key) == b.get(key) for key in NODE_ATTRIBUTES)
	
	matcher = isomorphism.MultiGraphMatcher(g1, g2, node_match=node_match)
	mapping = next(matcher.isomorphisms_iter(), None)
	if mapping is None:
		return False, None
	return True, dict(sorted(mapping.items()))
