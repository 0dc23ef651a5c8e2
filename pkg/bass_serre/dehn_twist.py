"""
Order of Dehn twists along internal walls
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from core.errors import InputError, InvariantViolation
from lattice import Lattice, as_vector
from model import GraphManifold

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DehnTwistWitness:
	fiber_sum: Lattice
	intersection: Lattice
	
	def to_dict(self) -> Dict[str, Any]:
		return {'fiber_sum': self.fiber_sum.to_dict(), 'intersection': self.intersection.to_dict()}


def dehn_twist_has_infinite_order(manifold: GraphManifold, wall: str, h: Sequence[int]) -> Tuple[bool, DehnTwistWitness]:
	"""Decide whether the Dehn twist along `wall` in direction h has infinite order
	
	Both fiber subgroups are expressed in the wall's source frame:
	F = F_source + matrix^-1(F_target). The twist has infinite order iff
	span{h} meets F only in zero.
	
	Args:
		manifold: Validated manifold
		wall: Gluing id of an internal wall
		h: Non-zero twist direction in the source frame
	
	Returns:
		Tuple of (infinite order, witness)
	"""
	g = manifold.gluing(wall)
	direction = as_vector(h)
	if len(direction) != manifold.torus_rank:
		raise InputError(f"twist direction has length {len(direction)}, expected {manifold.torus_rank}")
	if not any(direction):
		raise InputError("twist direction must be non-zero")
	
	source_fiber = manifold.source_piece(g).fiber_lattice()
	target_fiber = manifold.target_piece(g).fiber_lattice().image(g.matrix.inverse())
	fiber_sum = source_fiber.sum(target_fiber)
	intersection = Lattice.from_generators(manifold.torus_rank, [direction]).intersect(fiber_sum)
	infinite = intersection.is_zero
	if infinite == fiber_sum.saturate().contains(direction):
		raise InvariantViolation(f"twist order check disagrees with saturation test on wall {wall}")
	logger.debug(f"Dehn twist along {wall} by {list(direction)}: infinite order = {infinite}")
	return infinite, DehnTwistWitness(fiber_sum, intersection)
