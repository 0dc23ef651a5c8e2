"""
Re-checking emitted certificates from their payload
"""
import logging
from typing import Optional, Tuple

from core.errors import InputError
from lattice import kernel, primitive
from model import GraphManifold
from utils.validators import parse_integer, parse_matrix, parse_vector
from .certificate import EULER_CLASS, MONODROMY, OBSTRUCTED, Certificate
from .euler import euler_class_obstruction
from .monodromy import cycle_fiber_monodromy, detect_distorted_wall, monodromy_sub_kind
from .twisted_double import positivity_sum, twisted_double_obstruction

logger = logging.getLogger(__name__)


def _verify_monodromy(cert: Certificate, manifold: Optional[GraphManifold]) -> Tuple[bool, str]:
	witness = cert.witness
	if cert.verdict != OBSTRUCTED:
		if manifold is None:
			return True, 'nothing to re-check without the manifold'
		rerun = detect_distorted_wall(manifold, parse_integer(witness.get('max_len', 1), 'max_len'))
		if rerun.obstructed:
			return False, 'a re-run of the search finds an obstruction'
		return True, ''
	matrix = parse_matrix(witness['matrix'], 'witness.matrix')
	sub_kind = monodromy_sub_kind(matrix)
	if sub_kind is None:
		return False, 'witness matrix has finite order'
	if sub_kind != witness.get('sub_kind'):
		return False, f"witness sub-kind {witness.get('sub_kind')} but matrix is {sub_kind}"
	if manifold is not None:
		cycle = [(step['gluing'], bool(step['forward'])) for step in witness['cycle']]
		recomputed = cycle_fiber_monodromy(manifold, cycle)
		if recomputed != matrix:
			return False, 'cycle monodromy does not reproduce the witness matrix'
	return True, ''


def _verify_euler(cert: Certificate) -> Tuple[bool, str]:
	witness = cert.witness
	rank = parse_integer(witness['h1_boundary_rank'], 'h1_boundary_rank')
	rows = witness['i_star']
	i_star = parse_matrix(rows, 'witness.i_star', rank if not rows else None)
	if cert.verdict != OBSTRUCTED:
		if not kernel(i_star).is_zero:
			return False, 'i_star has a non-trivial kernel'
		return True, ''
	vector = parse_vector(witness['kernel_vector'], 'witness.kernel_vector')
	if len(vector) != rank or not any(vector):
		return False, 'kernel vector has the wrong length or is zero'
	if primitive(vector) != vector:
		return False, 'kernel vector is not primitive'
	if any(i_star @ vector):
		return False, 'kernel vector is not killed by i_star'
	return euler_class_obstruction(rank, i_star).verdict == cert.verdict, ''


def _verify_twisted_double(cert: Certificate, manifold: Optional[GraphManifold]) -> Tuple[bool, str]:
	witness = cert.witness
	base_dim = parse_integer(witness['base_dim'], 'base_dim')
	b = [parse_vector(v, 'witness.b') for v in witness['b']]
	weights = [parse_integer(w, 'witness.weights') for w in witness['weights']]
	rows = witness['i_star']
	i_star = parse_matrix(rows, 'witness.i_star', sum(len(v) for v in b) if not rows else None)
	try:
		_, rebuilt = twisted_double_obstruction(base_dim, witness['cusps'], i_star, b, weights)
	except InputError as e:
		return False, e.message
	total = positivity_sum(b, weights)
	if total <= 0 or total != witness.get('positivity_sum'):
		return False, f"positivity sum is {total}"
	if manifold is not None:
		expected = {g.id: g.matrix for g in rebuilt.gluings}
		actual = {g.id: g.matrix for g in manifold.gluings}
		if expected != actual:
			return False, 'manifold gluings differ from the rebuilt double'
	return True, ''


def verify_certificate(cert: Certificate, manifold: Optional[GraphManifold] = None) -> Tuple[bool, str]:
	"""Re-check a certificate from its witness payload
	
	Args:
		cert: Certificate to check
		manifold: Manifold the certificate refers to, when available
	
	Returns:
		Tuple of (valid, reason)
	"""
	try:
		if cert.kind == MONODROMY:
			ok, reason = _verify_monodromy(cert, manifold)
		elif cert.kind == EULER_CLASS:
			ok, reason = _verify_euler(cert)
		else:
			ok, reason = _verify_twisted_double(cert, manifold)
	except (KeyError, TypeError) as e:
		ok, reason = False, f"malformed witness: {e}"
	logger.debug(f"certificate {cert.kind}/{cert.verdict} re-check: {ok} {reason}")
	return ok, reason
