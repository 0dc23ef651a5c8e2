"""
Graph-manifold data model, manifest validation and structural predicates
"""
from .types import Piece, CuspRef, Gluing, GraphManifold
from .manifest import MANIFEST_SCHEMA, load_manifest, validate, manifest_to_dict, schema_violations
from .predicates import (
	fibers_meet,
	gluing_is_transverse,
	is_irreducible,
	has_transverse_pair,
	is_closed,
	internal_wall_count,
	quotient_graph,
	separating_walls
)
from .properties import PropertyVerdict, PropertyReport, classify_properties

__all__ = [
	'Piece',
	'CuspRef',
	'Gluing',
	'GraphManifold',
	'MANIFEST_SCHEMA',
	'load_manifest',
	'validate',
	'manifest_to_dict',
	'schema_violations',
	'fibers_meet',
	'gluing_is_transverse',
	'is_irreducible',
	'has_transverse_pair',
	'is_closed',
	'internal_wall_count',
	'quotient_graph',
	'separating_walls',
	'PropertyVerdict',
	'PropertyReport',
	'classify_properties'
]
