"""
Deterministic JSON reports
"""
import hashlib
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from jsonschema import Draft7Validator

from core.config import TOOL_NAME, TOOL_VERSION
from core.errors import InputError, InvariantViolation

logger = logging.getLogger(__name__)

REPORT_SCHEMA = {
	'$schema': 'http://json-schema.org/draft-07/schema#',
	'title': 'graphmf report',
	'type': 'object',
	'additionalProperties': False,
	'required': ['tool', 'version', 'command', 'input_digest', 'results', 'warnings'],
	'properties': {
		'tool': {'type': 'string', 'const': TOOL_NAME},
		'version': {'type': 'string'},
		'command': {'type': 'string', 'minLength': 1},
		'input_digest': {'type': 'string', 'pattern': '^[0-9a-f]{64}$'},
		'results': {'type': 'object'},
		'warnings': {'type': 'array', 'items': {'type': 'string'}}
	}
}


def input_digest(raw_inputs: Sequence[bytes]) -> str:
	"""SHA-256 of the raw input bytes, concatenated in argument order"""
	digest = hashlib.sha256()
	for raw in raw_inputs:
		digest.update(raw)
	return digest.hexdigest()


def report_violations(data: Any) -> List[str]:
	validator = Draft7Validator(REPORT_SCHEMA)
	return [
		f"{'/'.join(str(p) for p in e.absolute_path) or '<root>'}: {e.message}"
		for e in sorted(validator.iter_errors(data), key=lambda e: [str(p) for p in e.absolute_path])
	]


@dataclass(frozen=True)
class Report:
	command: str
	input_digest: str
	results: Dict[str, Any] = field(default_factory=dict, hash=False)
	warnings: List[str] = field(default_factory=list, hash=False)
	tool: str = TOOL_NAME
	version: str = TOOL_VERSION
	
	def to_dict(self) -> Dict[str, Any]:
		return {
			'tool': self.tool,
			'version': self.version,
			'command': self.command,
			'input_digest': self.input_digest,
			'results': self.results,
			'warnings': list(self.warnings)
		}
	
	@classmethod
	def from_dict(cls, data: Dict[str, Any]) -> 'Report':
		"""Rebuild a report after checking it against REPORT_SCHEMA"""
		violations = report_violations(data)
		if violations:
			raise InputError('report failed schema validation', violations)
		return cls(data['command'], data['input_digest'], data['results'], list(data['warnings']), data['tool'], data['version'])
	
	def dumps(self) -> str:
		return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def build_report(command: str, raw_inputs: Sequence[bytes], results: Dict[str, Any], warnings: Sequence[str]) -> Report:
	"""Assemble a report and check it against its own schema"""
	report = Report(command, input_digest(raw_inputs), results, list(warnings))
	violations = report_violations(report.to_dict())
	if violations:
		logger.error(f"Report for {command} does not match its schema: {violations}")
		raise InvariantViolation('report failed schema validation', violations)
	return report
