"""
Command implementations shared by the CLI and the HTTP routes
"""
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.config import ACYL_MAX_LEN, DEHN_C, DEHN_K, DEHN_LAMBDA
from core.errors import InputError, InvariantViolation
from bass_serre import check_acylindricity, dehn_twist_has_infinite_order
from equiv import (
	Pregraph,
	apply_pattern,
	bisimulation_classes,
	generate_distinct_family,
	gluing_patterns_equivalent,
	iso_necessary,
	qi_invariant_bisimilar,
	verify_equivalence_witness
)
from filling import BoundExpr, compose_dehn_bound
from model import (
	GraphManifold,
	classify_properties,
	gluing_is_transverse,
	has_transverse_pair,
	internal_wall_count,
	is_closed,
	is_irreducible,
	manifest_to_dict,
	separating_walls,
	validate
)
from obstruction import (
	MONODROMY,
	EULER_CLASS,
	TWISTED_DOUBLE,
	detect_distorted_wall,
	euler_class_obstruction,
	homology_inputs,
	twisted_double_from_manifold,
	verify_certificate
)
from utils.validators import parse_matrix

logger = logging.getLogger(__name__)

CommandResult = Tuple[Dict[str, Any], List[str]]

DEFAULT_PIECE_BOUND = 'quadratic'


def _not_irreducible_warning(manifold: GraphManifold, what: str) -> List[str]:
	irreducible, failing = is_irreducible(manifold)
	if irreducible:
		return []
	return [f"manifold is not irreducible (failing gluing: {', '.join(failing)}); {what}"]


def run_validate(manifest: Dict[str, Any]) -> CommandResult:
	manifold = validate(manifest)
	return {
		'valid': True,
		'n': manifold.n,
		'pieces': [p.id for p in manifold.pieces],
		'gluings': [g.id for g in manifold.gluings],
		'boundary_cusps': [str(c) for c in manifold.boundary_cusps()]
	}, []


def run_check(manifest: Dict[str, Any]) -> CommandResult:
	"""Irreducibility and the structural predicates"""
	manifold = validate(manifest)
	irreducible, failing = is_irreducible(manifold)
	gluings = {}
	for g in manifold.gluings:
		transverse, meet = gluing_is_transverse(manifold, g)
		direction = [1] + [0] * (manifold.torus_rank - 1)
		twist_infinite, _ = dehn_twist_has_infinite_order(manifold, g.id, direction)
		gluings[g.id] = {
			'transverse': transverse,
			'fiber_meet': meet.to_dict(),
			'twist_along_first_base_vector_infinite': twist_infinite
		}
	return {
		'irreducible': irreducible,
		'failing_gluings': failing,
		'has_transverse_pair': has_transverse_pair(manifold),
		'closed': is_closed(manifold),
		'internal_walls': internal_wall_count(manifold),
		'separating_walls': separating_walls(manifold),
		'gluings': gluings
	}, []


def run_classify(manifest: Dict[str, Any]) -> CommandResult:
	manifold = validate(manifest)
	return {'properties': classify_properties(manifold).to_dict()}, []


def run_acyl(manifest: Dict[str, Any], max_len: Optional[int] = None, workers: int = 1) -> CommandResult:
	manifold = validate(manifest)
	verdict = check_acylindricity(manifold, ACYL_MAX_LEN if max_len is None else max_len, workers)
	return {'acylindricity': verdict.to_dict()}, _not_irreducible_warning(manifold, 'a uniform bound is only guaranteed for irreducible manifolds')


def _parse_patterns(patterns: Any) -> List:
	if not isinstance(patterns, list) or len(patterns) < 2:
		raise InputError("patterns must be a JSON array of at least two matrices")
	return [parse_matrix(rows, f"patterns[{i}]") for i, rows in enumerate(patterns)]


def run_equiv(manifest: Dict[str, Any], edge: str, patterns: Any) -> CommandResult:
	"""Pairwise equivalence of candidate gluing matrices on one edge"""
	manifold = validate(manifest)
	pre = Pregraph.from_manifold(manifold)
	matrices = _parse_patterns(patterns)
	pairs = []
	for i in range(len(matrices)):
		for j in range(i + 1, len(matrices)):
			equivalent, witness = gluing_patterns_equivalent(pre, edge, matrices[i], matrices[j])
			entry = {'first': i, 'second': j, 'equivalent': equivalent, 'witness': None}
			if witness is not None:
				n1, n2 = witness
				ok, reason = verify_equivalence_witness(pre, edge, matrices[i], matrices[j], n1, n2)
				if not ok:
					raise InvariantViolation(f"equivalence witness for patterns {i}, {j} fails re-verification: {reason}")
				entry['witness'] = {'N1': n1.to_list(), 'N2': n2.to_list()}
			pairs.append(entry)
	return {'edge': edge, 'pairs': pairs}, []


def run_generate(manifest: Dict[str, Any], edge: str, count: int) -> CommandResult:
	"""Family of pairwise inequivalent patterns, with a pairwise self-check"""
	manifold = validate(manifest)
	pre = Pregraph.from_manifold(manifold)
	family = generate_distinct_family(pre, edge, count)
	for i in range(len(family)):
		for j in range(i + 1, len(family)):
			equivalent, _ = gluing_patterns_equivalent(pre, edge, family[i].matrix(edge), family[j].matrix(edge))
			if equivalent:
				raise InvariantViolation(f"generated patterns {i + 1} and {j + 1} are equivalent")
	manifests = [manifest_to_dict(apply_pattern(manifold, p)) for p in family]
	warnings = []
	for index, member in enumerate(manifests, start=1):
		irreducible, failing = is_irreducible(validate(member))
		if not irreducible:
			warnings.append(f"family member {index} is not irreducible (failing gluing: {', '.join(failing)})")
	return {
		'edge': edge,
		'count': len(family),
		'patterns': [p.to_dict() for p in family],
		'manifests': manifests
	}, warnings


def run_obstruct(manifest: Dict[str, Any], kind: str, workers: int = 1, max_len: Optional[int] = None) -> CommandResult:
	"""Run one obstruction engine and re-verify its certificate"""
	manifold = validate(manifest)
	results: Dict[str, Any] = {}
	warnings: List[str] = []
	if kind == MONODROMY:
		certificate = detect_distorted_wall(manifold, max_len, workers)
		target = manifold
	elif kind == EULER_CLASS:
		rank, i_star = homology_inputs(manifold.homology)
		certificate = euler_class_obstruction(rank, i_star)
		target = None
	elif kind == TWISTED_DOUBLE:
		certificate, target = twisted_double_from_manifold(manifold)
		results['manifest'] = manifest_to_dict(target)
	else:
		raise InputError(f"unknown obstruction kind '{kind}'")
	ok, reason = verify_certificate(certificate, target)
	if not ok:
		raise InvariantViolation(f"{kind} certificate fails re-verification: {reason}")
	warnings.extend(certificate.notes)
	results['certificate'] = certificate.to_dict()
	results['verified'] = True
	return results, warnings


def run_invariant(manifest_a: Dict[str, Any], manifest_b: Dict[str, Any]) -> CommandResult:
	"""Labelled-graph invariants of two manifolds"""
	first, second = validate(manifest_a), validate(manifest_b)
	blocks = bisimulation_classes(first, second)
	isomorphic, mapping = iso_necessary(first, second)
	return {
		'bisimilar': qi_invariant_bisimilar(first, second),
		'classes': {f"{'AB'[side]}:{pid}": block for (side, pid), block in sorted(blocks.items())},
		'isomorphic': isomorphic,
		'mapping': mapping
	}, []


def piece_bounds(manifold: GraphManifold) -> Dict[str, BoundExpr]:
	"""Per-piece filling bounds from the manifest dehn block, quadratic by default"""
	unknown = sorted(set(manifold.dehn) - {p.id for p in manifold.pieces})
	if unknown:
		raise InputError(f"dehn block names unknown pieces: {unknown}")
	return {p.id: BoundExpr.parse(manifold.dehn.get(p.id, DEFAULT_PIECE_BOUND)) for p in manifold.pieces}


def run_dehn(manifest: Dict[str, Any], lam: Optional[int] = None, c: Optional[int] = None, k: Optional[int] = None) -> CommandResult:
	manifold = validate(manifest)
	bounds = piece_bounds(manifold)
	constants = {
		'lambda': DEHN_LAMBDA if lam is None else lam,
		'C': DEHN_C if c is None else c,
		'K': DEHN_K if k is None else k
	}
	composed = compose_dehn_bound(list(bounds.values()), constants['lambda'], constants['C'], constants['K'])
	return {
		'piece_bounds': {pid: b.to_dict() for pid, b in bounds.items()},
		'constants': constants,
		'bound': composed.to_dict(),
		'expression': str(composed)
	}, _not_irreducible_warning(manifold, 'the composed bound assumes quasi-isometrically embedded walls')
