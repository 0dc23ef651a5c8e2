"""
Configuration constants for the graphmf toolkit
"""
import os
from dotenv import load_dotenv

load_dotenv()

# Tool identity (reported in every JSON report)
TOOL_NAME = 'graphmf'
TOOL_VERSION = '0.3.0'

# Search bounds
MAX_CYCLE_LEN = int(os.getenv('GRAPHMF_MAX_CYCLE_LEN', '8'))  # monodromy cycle search
ACYL_MAX_LEN = int(os.getenv('GRAPHMF_ACYL_MAX_LEN', '4'))  # acylindricity path length
FAMILY_SCAN_FACTOR = int(os.getenv('GRAPHMF_FAMILY_SCAN_FACTOR', '4'))  # candidates per orbit when generating families

# Concurrency
WORKERS = int(os.getenv('GRAPHMF_WORKERS', '4'))

# Dehn bound normalisation constants
DEHN_LAMBDA = int(os.getenv('DEHN_LAMBDA', '1'))
DEHN_C = int(os.getenv('DEHN_C', '1'))
DEHN_K = int(os.getenv('DEHN_K', '1'))

# CORS Configuration
FRONTEND_URL = os.getenv('FRONTEND_URL', 'http://localhost:3000')

# Logging Configuration
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()  # DEBUG, INFO, WARNING, ERROR, CRITICAL
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'


def get_max_cycle_len() -> int:
	"""Monodromy search bound, re-read from the environment on every call
	
	Returns:
		Maximum cycle length (in gluing traversals)
	"""
	return int(os.getenv('GRAPHMF_MAX_CYCLE_LEN', str(MAX_CYCLE_LEN)))


def get_workers() -> int:
	"""Thread count used when a command is run with --parallel"""
	return max(1, int(os.getenv('GRAPHMF_WORKERS', str(WORKERS))))
