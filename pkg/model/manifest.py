"""
Manifest schema, ingestion and validation
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple

import networkx as nx
from jsonschema import Draft7Validator

from core.errors import InputError, ManifestError
from lattice import IntMatrix, Lattice
from utils.validators import parse_integer, parse_matrix, check_square, check_unimodular
from .types import CuspRef, Gluing, GraphManifold, Piece

logger = logging.getLogger(__name__)

INTEGER = {'oneOf': [{'type': 'integer'}, {'type': 'string', 'pattern': r'^-?[0-9]+$'}]}
MATRIX = {'type': 'array', 'items': {'type': 'array', 'items': INTEGER}}
ENDPOINT = {'type': 'array', 'items': {'type': 'string', 'minLength': 1}, 'minItems': 2, 'maxItems': 2}
BOUND = {
	'oneOf': [
		{'type': 'string', 'enum': ['linear', 'quadratic', 'exponential']},
		{
			'type': 'object',
			'additionalProperties': False,
			'required': ['kind'],
			'properties': {
				'kind': {'enum': ['poly', 'exp']},
				'coeffs': {
					'type': 'array',
					'items': {'oneOf': [
						{'type': 'integer', 'minimum': 0},
						{'type': 'string', 'pattern': r'^[0-9]+(/[0-9]+)?$'}
					]}
				}
			}
		}
	]
}

MANIFEST_SCHEMA = {
	'$schema': 'http://json-schema.org/draft-07/schema#',
	'title': 'graph manifold manifest',
	'type': 'object',
	'additionalProperties': False,
	'required': ['n', 'pieces', 'gluings'],
	'properties': {
		'n': INTEGER,
		'extended': {'type': 'boolean'},
		'pieces': {
			'type': 'array',
			'minItems': 1,
			'items': {
				'type': 'object',
				'additionalProperties': False,
				'required': ['id', 'base_dim', 'fiber_dim', 'cusps'],
				'properties': {
					'id': {'type': 'string', 'minLength': 1},
					'base_dim': INTEGER,
					'fiber_dim': INTEGER,
					'cusps': {'type': 'array', 'items': {'type': 'string', 'minLength': 1}},
					'label': {'type': 'string', 'minLength': 1}
				}
			}
		},
		'gluings': {
			'type': 'array',
			'items': {
				'type': 'object',
				'additionalProperties': False,
				'required': ['from', 'to', 'matrix'],
				'properties': {
					'id': {'type': 'string', 'minLength': 1},
					'from': ENDPOINT,
					'to': ENDPOINT,
					'matrix': MATRIX
				}
			}
		},
		'theta': {'type': 'object', 'additionalProperties': {'type': 'array', 'items': MATRIX}},
		'homology': {
			'type': 'object',
			'additionalProperties': False,
			'properties': {
				'h1_boundary_rank': INTEGER,
				'h1_interior_rank': INTEGER,
				'i_star': MATRIX,
				'b': {'type': 'array', 'items': {'type': 'array', 'items': INTEGER}},
				'weights': {'type': 'array', 'items': INTEGER}
			}
		},
		'dehn': {'type': 'object', 'additionalProperties': BOUND}
	}
}


def load_manifest(path: str) -> Tuple[Dict[str, Any], bytes]:
	"""Read a UTF-8 JSON manifest from disk
	
	Args:
		path: Manifest file path
	
	Returns:
		Tuple of (parsed manifest, raw bytes)
	"""
	try:
		raw = Path(path).read_bytes()
	except OSError as e:
		raise InputError(f"cannot read manifest {path}: {e.strerror}")
	try:
		data = json.loads(raw.decode('utf-8'))
	except (UnicodeDecodeError, json.JSONDecodeError) as e:
		raise InputError(f"manifest {path} is not valid UTF-8 JSON: {e}")
	return data, raw


def schema_violations(manifest: Any) -> List[str]:
	"""Structural problems reported by the manifest JSON schema"""
	validator = Draft7Validator(MANIFEST_SCHEMA)
	violations = []
	for error in sorted(validator.iter_errors(manifest), key=lambda e: [str(p) for p in e.absolute_path]):
		location = '/'.join(str(p) for p in error.absolute_path) or '<root>'
		violations.append(f"{location}: {error.message}")
	return violations


def _parse_pieces(manifest: Dict[str, Any], n: int, extended: bool, violations: List[str]) -> List[Piece]:
	pieces = []
	seen = set()
	for raw in manifest['pieces']:
		pid = raw['id']
		base = parse_integer(raw['base_dim'], f"piece {pid}: base_dim")
		fiber = parse_integer(raw['fiber_dim'], f"piece {pid}: fiber_dim")
		cusps = tuple(raw['cusps'])
		if pid in seen:
			violations.append(f"piece {pid}: duplicate piece id")
		seen.add(pid)
		if base < 2 or (base == 2 and not extended):
			violations.append(f"piece {pid}: base_dim {base} is below 3" + ('' if base < 2 else ' (surface pieces need the extended flag)'))
		if fiber < 0:
			violations.append(f"piece {pid}: negative fiber_dim {fiber}")
		if base + fiber != n:
			violations.append(f"piece {pid}: dimension inconsistency, base_dim + fiber_dim = {base + fiber} but n = {n}")
		if not cusps:
			violations.append(f"piece {pid}: no cusps")
		if len(set(cusps)) != len(cusps):
			violations.append(f"piece {pid}: duplicate cusp ids")
		pieces.append(Piece(pid, base, fiber, cusps, raw.get('label')))
	return pieces


def _parse_gluings(manifest: Dict[str, Any], pieces: List[Piece], n: int, violations: List[str]) -> List[Gluing]:
	cusps_of = {p.id: set(p.cusps) for p in pieces}
	used: Dict[CuspRef, str] = {}
	seen = set()
	gluings = []
	for position, raw in enumerate(manifest['gluings'], start=1):
		gid = raw.get('id', f"g{position}")
		if gid in seen:
			violations.append(f"gluing {gid}: duplicate gluing id")
		seen.add(gid)
		source, target = CuspRef(*raw['from']), CuspRef(*raw['to'])
		for end in (source, target):
			if end.piece not in cusps_of:
				violations.append(f"gluing {gid}: unknown piece '{end.piece}'")
			elif end.cusp not in cusps_of[end.piece]:
				violations.append(f"gluing {gid}: piece {end.piece} has no cusp '{end.cusp}'")
		if source == target:
			violations.append(f"gluing {gid}: from and to are the same cusp {source}")
		for end in (source, target):
			if end in used and used[end] != gid:
				violations.append(f"gluing {gid}: cusp {end} already used by gluing {used[end]}")
			used.setdefault(end, gid)
		
		try:
			matrix = parse_matrix(raw['matrix'], f"gluing {gid}: matrix")
		except InputError as e:
			violations.append(e.message)
			continue
		ok, message = check_square(matrix, n - 1)
		if not ok:
			violations.append(f"gluing {gid}: {message}")
			continue
		ok, message = check_unimodular(matrix)
		if not ok:
			violations.append(f"gluing {gid}: {message}")
			continue
		gluings.append(Gluing(gid, source, target, matrix))
	return gluings


def _parse_theta(manifest: Dict[str, Any], pieces: List[Piece], violations: List[str]) -> Dict[str, Tuple[IntMatrix, ...]]:
	theta = {}
	known = {p.id: p for p in pieces}
	for pid, matrices in sorted(manifest.get('theta', {}).items()):
		if pid not in known:
			violations.append(f"theta: unknown piece '{pid}'")
			continue
		size = known[pid].base_dim - 1
		parsed = []
		for i, rows in enumerate(matrices):
			try:
				matrix = parse_matrix(rows, f"theta {pid}[{i}]")
			except InputError as e:
				violations.append(e.message)
				continue
			ok, message = check_square(matrix, size)
			if not ok:
				violations.append(f"theta {pid}[{i}]: {message}")
				continue
			parsed.append(matrix)
		theta[pid] = tuple(parsed)
	return theta


def _is_connected(pieces: List[Piece], gluings: List[Gluing]) -> bool:
	graph = nx.MultiGraph()
	graph.add_nodes_from(p.id for p in pieces)
	graph.add_edges_from((g.source.piece, g.target.piece, g.id) for g in gluings)
	return nx.is_connected(graph)


def validate(manifest: Any) -> GraphManifold:
	"""Validate a parsed manifest and build the GraphManifold
	
	Every violated invariant is collected before raising, each message
	naming the offending element.
	
	Args:
		manifest: Parsed JSON manifest
	
	Returns:
		Validated GraphManifold
	
	Raises:
		ManifestError: With the full list of violations
	"""
	violations = schema_violations(manifest)
	if violations:
		raise ManifestError(f"manifest failed schema validation ({len(violations)} problems)", violations)
	
	n = parse_integer(manifest['n'], 'n')
	extended = bool(manifest.get('extended', False))
	if n < 3:
		violations.append(f"n: ambient dimension {n} is below 3")
	pieces = _parse_pieces(manifest, n, extended, violations)
	gluings = _parse_gluings(manifest, pieces, n, violations) if n >= 3 else []
	theta = _parse_theta(manifest, pieces, violations)
	if violations:
		raise ManifestError(f"invalid manifest ({len(violations)} problems)", violations)
	
	if not _is_connected(pieces, gluings):
		violations.append("graph: pieces do not form a connected graph")
	if extended:
		by_id = {p.id: p for p in pieces}
		for g in gluings:
			src, tgt = by_id[g.source.piece], by_id[g.target.piece]
			if src.is_surface and tgt.is_surface and src.fiber_lattice().image(g.matrix) == tgt.fiber_lattice():
				violations.append(f"gluing {g.id}: identifies the fibers of surface pieces {src.id} and {tgt.id}")
	if violations:
		raise ManifestError(f"invalid manifest ({len(violations)} problems)", violations)
	
	manifold = GraphManifold(
		n=n,
		pieces=tuple(pieces),
		gluings=tuple(gluings),
		extended=extended,
		theta=theta,
		homology=manifest.get('homology'),
		dehn=dict(manifest.get('dehn', {}))
	)
	logger.info(f"Validated manifest: n={n}, {len(pieces)} pieces, {len(gluings)} gluings")
	return manifold


def manifest_to_dict(manifold: GraphManifold) -> Dict[str, Any]:
	"""Serialize a GraphManifold back to manifest JSON"""
	pieces = []
	for p in manifold.pieces:
		entry = {'id': p.id, 'base_dim': p.base_dim, 'fiber_dim': p.fiber_dim, 'cusps': list(p.cusps)}
		if p.label is not None:
			entry['label'] = p.label
		pieces.append(entry)
	data = {
		'n': manifold.n,
		'extended': manifold.extended,
		'pieces': pieces,
		'gluings': [
			{'id': g.id, 'from': g.source.to_list(), 'to': g.target.to_list(), 'matrix': g.matrix.to_list()}
			for g in manifold.gluings
		]
	}
	if manifold.theta:
		data['theta'] = {pid: [m.to_list() for m in group] for pid, group in manifold.theta.items()}
	if manifold.homology is not None:
		data['homology'] = manifold.homology
	if manifold.dehn:
		data['dehn'] = manifold.dehn
	return data
