"""
Error types shared by every graphmf module
"""
from typing import List, Optional

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVARIANT = 2


class GraphManifoldError(Exception):
	"""Base class for all toolkit errors"""
	exit_code = EXIT_INVARIANT
	http_status = 500
	
	def __init__(self, message: str, violations: Optional[List[str]] = None):
		super().__init__(message)
		self.message = message
		self.violations = list(violations or [])
	
	def to_dict(self) -> dict:
		payload = {'error': self.message}
		if self.violations:
			payload['violations'] = self.violations
		return payload


class InputError(GraphManifoldError):
	"""Invalid input: malformed manifest, dimension mismatch, bad vector"""
	exit_code = EXIT_INPUT
	http_status = 400


class ManifestError(InputError):
	"""Manifest failed schema or structural validation"""


class UnsupportedOperation(InputError):
	"""Operation is not defined for this input (e.g. equivalence on a loop edge)"""


class InvariantViolation(GraphManifoldError):
	"""An internal post-condition self-check failed"""
	exit_code = EXIT_INVARIANT
	http_status = 500
