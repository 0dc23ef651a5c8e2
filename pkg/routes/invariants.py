"""
Invariant comparison route
"""
from quart import Blueprint

from services import run_invariant
from ._handlers import require, respond

invariants_bp = Blueprint('invariants', __name__, url_prefix='/api/invariants')


@invariants_bp.route('/compare', methods=['POST'])
async def compare():
	"""Bisimilarity and quotient-graph isomorphism of two manifolds"""
	return await respond('invariant', lambda data: run_invariant(require(data, 'first'), require(data, 'second')))
