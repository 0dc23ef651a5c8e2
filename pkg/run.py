"""
Production entry point for the graphmf API
Runs with Granian ASGI server

Usage:
  Development: python app.py
  Production:  granian --interface asgi run:app --host 0.0.0.0 --port 5000 --workers 2
  Alternative: hypercorn run:app --bind 0.0.0.0:5000
"""
from app import app

__all__ = ['app']
