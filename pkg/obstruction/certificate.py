"""
Obstruction certificates
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from core.errors import InputError

MONODROMY = 'monodromy'
EULER_CLASS = 'euler_class'
TWISTED_DOUBLE = 'twisted_double'
KINDS = (MONODROMY, EULER_CLASS, TWISTED_DOUBLE)

OBSTRUCTED = 'obstructed'
NO_OBSTRUCTION = 'no_obstruction_found'
VERDICTS = (OBSTRUCTED, NO_OBSTRUCTION)


@dataclass(frozen=True)
class Certificate:
	"""Outcome of one obstruction check, with a payload that can be re-checked"""
	kind: str
	verdict: str
	witness: Dict[str, Any] = field(default_factory=dict, hash=False)
	provenance: str = ''
	notes: Tuple[str, ...] = ()
	
	def __post_init__(self):
		if self.kind not in KINDS:
			raise InputError(f"unknown certificate kind '{self.kind}'")
		if self.verdict not in VERDICTS:
			raise InputError(f"unknown certificate verdict '{self.verdict}'")
	
	@property
	def obstructed(self) -> bool:
		return self.verdict == OBSTRUCTED
	
	def to_dict(self) -> Dict[str, Any]:
		return {
			'kind': self.kind,
			'verdict': self.verdict,
			'witness': self.witness,
			'provenance': self.provenance,
			'notes': list(self.notes)
		}
	
	@classmethod
	def from_dict(cls, data: Dict[str, Any]) -> 'Certificate':
		try:
			return cls(data['kind'], data['verdict'], dict(data.get('witness') or {}), data.get('provenance', ''), tuple(data.get('notes', ())))
		except (KeyError, TypeError) as e:
			raise InputError(f"malformed certificate: {e}")
