"""
Shared request handling for the command routes
"""
import logging
from typing import Any, Callable, Dict, List, Tuple

from quart import jsonify, request

from core.errors import GraphManifoldError, InputError
from utils.validators import parse_integer

logger = logging.getLogger(__name__)


async def read_body() -> Dict[str, Any]:
	data = await request.get_json(silent=True)
	if not isinstance(data, dict):
		raise InputError('request body must be a JSON object')
	return data


def require(data: Dict[str, Any], key: str) -> Any:
	if key not in data:
		raise InputError(f"'{key}' is required")
	return data[key]


def optional_integer(data: Dict[str, Any], key: str, default: Any = None) -> Any:
	if data.get(key) is None:
		return default
	return parse_integer(data[key], key)


async def respond(command: str, action: Callable[[Dict[str, Any]], Tuple[Dict[str, Any], List[str]]]):
	"""Run a service call on the request body and shape the JSON response"""
	try:
		data = await read_body()
		results, warnings = action(data)
		return jsonify({'command': command, 'results': results, 'warnings': warnings})
	except GraphManifoldError as e:
		logger.warning(f"{command} failed with {type(e).__name__}: {e.message}")
		return jsonify(e.to_dict()), e.http_status
	except Exception as e:
		logger.error(f"{command} failed: {e}")
		return jsonify({'error': f"Failed to run {command}"}), 500
