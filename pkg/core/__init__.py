"""
Core module for graphmf: configuration and error types
"""
from .config import *
from .errors import (
	GraphManifoldError,
	InputError,
	ManifestError,
	UnsupportedOperation,
	InvariantViolation,
	EXIT_OK,
	EXIT_INPUT,
	EXIT_INVARIANT
)

__all__ = [
	'TOOL_NAME',
	'TOOL_VERSION',
	'MAX_CYCLE_LEN',
	'ACYL_MAX_LEN',
	'FAMILY_SCAN_FACTOR',
	'WORKERS',
	'DEHN_LAMBDA',
	'DEHN_C',
	'DEHN_K',
	'FRONTEND_URL',
	'LOG_LEVEL',
	'LOG_FORMAT',
	'get_max_cycle_len',
	'get_workers',
	'GraphManifoldError',
	'InputError',
	'ManifestError',
	'UnsupportedOperation',
	'InvariantViolation',
	'EXIT_OK',
	'EXIT_INPUT',
	'EXIT_INVARIANT'
]
