"""
Plain-text summaries of command results
"""
from typing import Any, Callable, Dict, List


def _flag(value: Any) -> str:
	if value is None:
		return 'n/a'
	return 'true' if value else 'false'


def validate_summary(results: Dict[str, Any]) -> List[str]:
	return [
		f"valid: true; n = {results['n']}",
		f"pieces: {', '.join(results['pieces'])}",
		f"gluings: {', '.join(results['gluings']) or 'none'}"
	]


def check_summary(results: Dict[str, Any]) -> List[str]:
	line = f"irreducible: {_flag(results['irreducible'])}"
	if results['failing_gluings']:
		line += f"; failing gluing: {', '.join(results['failing_gluings'])}"
	return [
		line,
		f"transverse pair: {_flag(results['has_transverse_pair'])}",
		f"closed: {_flag(results['closed'])}",
		f"internal walls: {results['internal_walls']} (separating: {', '.join(results['separating_walls']) or 'none'})"
	]


def classify_summary(results: Dict[str, Any]) -> List[str]:
	return [f"{name}: {_flag(verdict['value'])}" for name, verdict in results['properties'].items()]


def acyl_summary(results: Dict[str, Any]) -> List[str]:
	verdict = results['acylindricity']
	if verdict['bounded']:
		lines = [f"acylindrical: K = {verdict['k']} (searched up to length {verdict['max_len']})"]
	else:
		lines = [f"acylindrical: no bound found up to length {verdict['max_len']}"]
	lines.append(f"shapes checked: {verdict['shapes_checked']}")
	return lines


def equiv_summary(results: Dict[str, Any]) -> List[str]:
	return [
		f"patterns {pair['first']} and {pair['second']} on {results['edge']}: {'equivalent' if pair['equivalent'] else 'inequivalent'}"
		for pair in results['pairs']
	]


def generate_summary(results: Dict[str, Any]) -> List[str]:
	return [f"generated {results['count']} pairwise inequivalent patterns on {results['edge']}"]


def obstruct_summary(results: Dict[str, Any]) -> List[str]:
	cert = results['certificate']
	lines = [f"{cert['kind']}: {cert['verdict']}"]
	witness = cert['witness']
	if 'matrix' in witness:
		lines.append(f"monodromy: {witness['matrix']} ({witness['sub_kind']})")
	if witness.get('kernel_vector'):
		lines.append(f"kernel vector: {witness['kernel_vector']}")
	if 'positivity_sum' in witness:
		lines.append(f"positivity sum: {witness['positivity_sum']}")
	if cert['provenance']:
		lines.append(f"provenance: {cert['provenance']}")
	return lines


def invariant_summary(results: Dict[str, Any]) -> List[str]:
	return [
		f"bisimilar: {_flag(results['bisimilar'])}",
		f"isomorphic quotient graphs: {_flag(results['isomorphic'])}"
	]


def dehn_summary(results: Dict[str, Any]) -> List[str]:
	return [f"Dehn bound: {results['expression']} (degree {results['bound']['degree']})"]


SUMMARIES: Dict[str, Callable[[Dict[str, Any]], List[str]]] = {
	'validate': validate_summary,
	'check': check_summary,
	'classify': classify_summary,
	'acyl': acyl_summary,
	'equiv': equiv_summary,
	'generate': generate_summary,
	'obstruct': obstruct_summary,
	'invariant': invariant_summary,
	'dehn': dehn_summary
}


def render_summary(command: str, results: Dict[str, Any], warnings: List[str]) -> str:
	"""Human-readable text for a command's results"""
	lines = SUMMARIES[command](results)
	lines.extend(f"warning: {w}" for w in warnings)
	return '\n'.join(lines) + '\n'
