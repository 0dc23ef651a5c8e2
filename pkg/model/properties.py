"""
Group-property classifier
"""
import logging
from dataclasses import dataclass, fields
from typing import Any, Dict, Optional, Tuple

from .predicates import has_transverse_pair, internal_wall_count, is_closed, is_irreducible, separating_walls
from .types import GraphManifold

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PropertyVerdict:
	value: Optional[bool]
	trail: Tuple[str, ...]
	
	def to_dict(self) -> Dict[str, Any]:
		return {'value': self.value, 'trail': list(self.trail)}


@dataclass(frozen=True)
class PropertyReport:
	"""Sufficient-condition verdicts, each with the hypotheses it was derived from.
	
	`euler_char_zero_if_even_dim` is None in odd dimension.
	"""
	simplicial_volume_zero: PropertyVerdict
	euler_char_zero_if_even_dim: PropertyVerdict
	cstar_simple: PropertyVerdict
	sq_universal_guaranteed: PropertyVerdict
	relatively_hyperbolic: PropertyVerdict
	thick_order_one: PropertyVerdict
	cohopf_hypothesis: PropertyVerdict
	uniform_exponential_growth: PropertyVerdict
	solvable_word_problem_guaranteed: PropertyVerdict
	
	def to_dict(self) -> Dict[str, Any]:
		return {f.name: getattr(self, f.name).to_dict() for f in fields(self)}
	
	def values(self) -> Dict[str, Optional[bool]]:
		return {f.name: getattr(self, f.name).value for f in fields(self)}


def _flag(value: bool) -> str:
	return 'yes' if value else 'no'


def classify_properties(manifold: GraphManifold) -> PropertyReport:
	"""Evaluate the decidable sufficient conditions for the group properties
	
	Args:
		manifold: Validated manifold
	
	Returns:
		PropertyReport with a hypothesis trail per field
	"""
	irreducible, failing = is_irreducible(manifold)
	walls = internal_wall_count(manifold)
	separating = separating_walls(manifold)
	closed = is_closed(manifold)
	transverse_pair = has_transverse_pair(manifold)
	trivial = sorted(p.id for p in manifold.pieces if p.fiber_dim == 0)
	all_fibered = not trivial
	single_fibered_piece = len(manifold.pieces) == 1 and manifold.pieces[0].fiber_dim >= 1 and walls == 0
	
	irreducible_note = f"irreducible: {_flag(irreducible)}" + (f" (non-transverse: {', '.join(failing)})" if failing else '')
	fiber_note = f"every piece has a non-trivial fiber: {_flag(all_fibered)}" + (f" (trivial fiber: {', '.join(trivial)})" if trivial else '')
	
	simplicial = PropertyVerdict(all_fibered, (
		fiber_note,
		'simplicial volume vanishes exactly when every piece carries a non-trivial torus fiber'
	))
	if manifold.n % 2 == 0:
		euler = PropertyVerdict(all_fibered, (fiber_note, f"n = {manifold.n} is even", 'a free torus action on every piece forces zero Euler characteristic'))
	else:
		euler = PropertyVerdict(None, (f"n = {manifold.n} is odd: not evaluated",))
	cstar = PropertyVerdict(irreducible and not single_fibered_piece, (
		irreducible_note,
		f"single piece with non-trivial fiber and no internal walls: {_flag(single_fibered_piece)}",
		'C*-simple when irreducible and not a single fibered piece without internal walls'
	))
	sq = PropertyVerdict((irreducible and walls >= 2) or bool(separating), (
		irreducible_note,
		f"internal walls: {walls}",
		f"separating internal walls: {', '.join(separating) if separating else 'none'}",
		'sufficient: irreducible with at least two internal walls, or some separating internal wall',
		f"single piece without internal walls: {_flag(len(manifold.pieces) == 1 and walls == 0)} (that case is not evaluated here, so false is not a negative answer)"
	))
	relhyp = PropertyVerdict(bool(trivial), (
		fiber_note,
		'relatively hyperbolic with respect to the fibered parts when some piece has trivial fiber'
	))
	thick = PropertyVerdict(all_fibered and walls >= 1, (
		fiber_note,
		f"internal walls: {walls}",
		'thick of order one when all fibers are non-trivial and there is an internal wall'
	))
	cohopf = PropertyVerdict(closed and transverse_pair, (
		f"closed: {_flag(closed)}",
		f"adjacent pieces with transverse fibers: {_flag(transverse_pair)}",
		'hypotheses of the co-Hopf criterion for closed graph manifolds'
	))
	growth = PropertyVerdict(True, (
		'holds for every graph manifold group',
	))
	solvable = PropertyVerdict(irreducible, (
		irreducible_note,
		'irreducible walls are quasi-isometrically embedded, so the composed Dehn bound is recursive'
	))
	report = PropertyReport(simplicial, euler, cstar, sq, relhyp, thick, cohopf, growth, solvable)
	logger.debug(f"property report: {report.values()}")
	return report
