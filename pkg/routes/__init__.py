"""
Routes package for the graphmf API
"""
from .manifolds import manifolds_bp
from .patterns import patterns_bp
from .invariants import invariants_bp
from .health import health_bp

__all__ = [
	'manifolds_bp',
	'patterns_bp',
	'invariants_bp',
	'health_bp',
]
