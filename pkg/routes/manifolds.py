"""
Manifold routes: validation, predicates, classification, obstructions, bounds
"""
import logging
from quart import Blueprint

from core.config import get_workers
from obstruction import TWISTED_DOUBLE
from services import run_acyl, run_check, run_classify, run_dehn, run_obstruct, run_validate
from ._handlers import optional_integer, require, respond

logger = logging.getLogger(__name__)
manifolds_bp = Blueprint('manifolds', __name__, url_prefix='/api/manifolds')


def _workers(data) -> int:
	return get_workers() if data.get('parallel') else 1


@manifolds_bp.route('/validate', methods=['POST'])
async def validate_manifest():
	"""Validate a manifest"""
	return await respond('validate', lambda data: run_validate(require(data, 'manifest')))


@manifolds_bp.route('/check', methods=['POST'])
async def check_manifold():
	"""Irreducibility and structural predicates"""
	return await respond('check', lambda data: run_check(require(data, 'manifest')))


@manifolds_bp.route('/classify', methods=['POST'])
async def classify_manifold():
	return await respond('classify', lambda data: run_classify(require(data, 'manifest')))


@manifolds_bp.route('/acyl', methods=['POST'])
async def acylindricity():
	"""Acylindricity search; optional max_len and parallel"""
	return await respond('acyl', lambda data: run_acyl(require(data, 'manifest'), optional_integer(data, 'max_len'), _workers(data)))


@manifolds_bp.route('/obstruct', methods=['POST'])
async def obstruct():
	"""Obstruction certificate of the requested kind"""
	return await respond('obstruct', lambda data: run_obstruct(require(data, 'manifest'), require(data, 'kind'), _workers(data)))


@manifolds_bp.route('/twisted-double', methods=['POST'])
async def twisted_double():
	"""Twisted double of a one-piece manifest with a homology block"""
	return await respond('obstruct', lambda data: run_obstruct(require(data, 'manifest'), TWISTED_DOUBLE))


@manifolds_bp.route('/dehn', methods=['POST'])
async def dehn_bound():
	return await respond('dehn', lambda data: run_dehn(require(data, 'manifest'), optional_integer(data, 'lambda'), optional_integer(data, 'C'), optional_integer(data, 'K')))
