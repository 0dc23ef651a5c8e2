"""
Text templates for command output
"""
from .summaries import SUMMARIES, render_summary

__all__ = [
	'SUMMARIES',
	'render_summary'
]
