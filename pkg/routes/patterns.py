"""
Gluing-pattern routes
"""
import logging
from quart import Blueprint

from services import run_equiv, run_generate
from ._handlers import optional_integer, require, respond

logger = logging.getLogger(__name__)
patterns_bp = Blueprint('patterns', __name__, url_prefix='/api/patterns')


@patterns_bp.route('/equiv', methods=['POST'])
async def equivalence():
	"""Pairwise equivalence of candidate matrices on one edge"""
	return await respond('equiv', lambda data: run_equiv(require(data, 'manifest'), require(data, 'edge'), require(data, 'patterns')))


@patterns_bp.route('/generate', methods=['POST'])
async def generate():
	"""Family of pairwise inequivalent patterns"""
	return await respond('generate', lambda data: run_generate(require(data, 'manifest'), require(data, 'edge'), optional_integer(data, 'count', 10)))
