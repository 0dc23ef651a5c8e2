"""
Service functions package
"""
from .command_service import (
	run_validate,
	run_check,
	run_classify,
	run_acyl,
	run_equiv,
	run_generate,
	run_obstruct,
	run_invariant,
	run_dehn,
	piece_bounds
)
from .report_service import REPORT_SCHEMA, Report, build_report, input_digest, report_violations

__all__ = [
	'run_validate',
	'run_check',
	'run_classify',
	'run_acyl',
	'run_equiv',
	'run_generate',
	'run_obstruct',
	'run_invariant',
	'run_dehn',
	'piece_bounds',
	'REPORT_SCHEMA',
	'Report',
	'build_report',
	'input_digest',
	'report_violations'
]
