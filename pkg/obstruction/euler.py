"""
Euler-class obstruction for circle bundles over doubles
"""
import logging
from typing import Any, Dict, Optional

from core.errors import InputError
from lattice import IntMatrix, kernel, primitive
from utils.validators import parse_integer, parse_matrix
from .certificate import EULER_CLASS, NO_OBSTRUCTION, OBSTRUCTED, Certificate

logger = logging.getLogger(__name__)

PROVENANCE = (
	'a non-injective map from boundary to interior homology gives a class whose span misses the '
	'image of the restriction in cohomology; the circle bundle over the double with that Euler '
	'class has an infinite-order Euler class and admits no locally CAT(0) metric'
)
ANOMALY_NOTE = (
	'i_star is injective; half of the boundary homology must die in the interior for a genuine '
	'truncated hyperbolic manifold, so the supplied homology data should be checked'
)


def euler_class_obstruction(h1_boundary_rank: int, i_star: IntMatrix) -> Certificate:
	"""Look for a boundary class that dies in the interior
	
	Args:
		h1_boundary_rank: Rank of the free part of H1 of the boundary
		i_star: Matrix of the map on H1 (free parts), one column per boundary generator
	
	Returns:
		Certificate of kind euler_class
	"""
	if h1_boundary_rank < 0:
		raise InputError(f"h1_boundary_rank must be non-negative, got {h1_boundary_rank}")
	if i_star.ncols != h1_boundary_rank:
		raise InputError(f"i_star has {i_star.ncols} columns but h1_boundary_rank is {h1_boundary_rank}")
	dead = kernel(i_star)
	if dead.is_zero:
		logger.warning("i_star is injective: no Euler-class obstruction")
		return Certificate(
			EULER_CLASS,
			NO_OBSTRUCTION,
			{'i_star': i_star.to_list(), 'h1_boundary_rank': h1_boundary_rank, 'kernel_rank': 0, 'kernel_vector': None},
			'Euler class search',
			(ANOMALY_NOTE,)
		)
	witness = primitive(dead.basis[0])
	logger.info(f"i_star kernel of rank {dead.rank}, witness {list(witness)}")
	return Certificate(
		EULER_CLASS,
		OBSTRUCTED,
		{
			'i_star': i_star.to_list(),
			'h1_boundary_rank': h1_boundary_rank,
			'kernel_rank': dead.rank,
			'kernel_vector': list(witness),
			'bundle': {
				'base': 'double of the truncated piece along its boundary',
				'fiber': 'S^1',
				'euler_class': 'dual to the kernel class, infinite order'
			}
		},
		PROVENANCE
	)


def homology_inputs(homology: Optional[Dict[str, Any]]):
	"""Parse (h1_boundary_rank, i_star) from a manifest homology block"""
	if not homology or 'i_star' not in homology:
		raise InputError("manifest has no homology block with i_star")
	rows = homology['i_star']
	declared = homology.get('h1_boundary_rank')
	width = parse_integer(declared, 'homology.h1_boundary_rank') if declared is not None else None
	if width is None and not rows:
		raise InputError("homology: an empty i_star needs h1_boundary_rank")
	i_star = parse_matrix(rows, 'homology.i_star', width if not rows else None)
	rank = i_star.ncols if width is None else width
	interior = homology.get('h1_interior_rank')
	if interior is not None and rows and parse_integer(interior, 'homology.h1_interior_rank') != i_star.nrows:
		raise InputError(f"homology: i_star has {i_star.nrows} rows but h1_interior_rank is {interior}")
	return rank, i_star
