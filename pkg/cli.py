"""
graphmf command-line interface

Usage:
  python cli.py check manifest.json
  python cli.py --json report.json obstruct manifest.json --kind monodromy
  python cli.py invariant a.json b.json
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.config import LOG_FORMAT, LOG_LEVEL, TOOL_NAME, TOOL_VERSION, get_workers
from core.errors import EXIT_INVARIANT, EXIT_OK, GraphManifoldError, InputError
from model import load_manifest
from obstruction import KINDS
from services import (
	build_report,
	run_acyl,
	run_check,
	run_classify,
	run_dehn,
	run_equiv,
	run_generate,
	run_invariant,
	run_obstruct,
	run_validate
)
from templates import render_summary

logger = logging.getLogger(__name__)


class CliParser(argparse.ArgumentParser):
	"""Argument parser whose usage errors are input errors (exit code 1)"""
	
	def error(self, message: str):
		raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
	parser = CliParser(prog=TOOL_NAME, description='Combinatorial calculus for high-dimensional graph manifolds')
	parser.add_argument('--version', action='version', version=f"{TOOL_NAME} {TOOL_VERSION}")
	parser.add_argument('--json', metavar='OUT', help='Write the full JSON report to OUT')
	parser.add_argument('--parallel', action='store_true', help='Fan independent searches out over GRAPHMF_WORKERS threads')
	parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'], help='Logging level (stderr)')
	commands = parser.add_subparsers(dest='command', required=True)
	
	for name, text in (('validate', 'Validate a manifest'), ('check', 'Irreducibility and structural predicates'), ('classify', 'Group-property classifier')):
		commands.add_parser(name, help=text).add_argument('path')
	
	acyl = commands.add_parser('acyl', help='Acylindricity of the Bass-Serre tree action')
	acyl.add_argument('path')
	acyl.add_argument('--max-len', type=int, help='Longest path shape examined')
	
	equiv = commands.add_parser('equiv', help='Pairwise equivalence of gluing matrices on one edge')
	equiv.add_argument('path')
	equiv.add_argument('--edge', required=True)
	equiv.add_argument('--patterns', required=True, help='JSON file holding an array of at least two matrices')
	
	generate = commands.add_parser('generate', help='Generate pairwise inequivalent gluing patterns')
	generate.add_argument('path')
	generate.add_argument('--edge', required=True)
	generate.add_argument('--count', type=int, default=10)
	generate.add_argument('--out', metavar='DIR', help='Write one manifest per family member')
	
	obstruct = commands.add_parser('obstruct', help='Obstructions to locally CAT(0) metrics')
	obstruct.add_argument('path')
	obstruct.add_argument('--kind', required=True, choices=list(KINDS))
	obstruct.add_argument('--out', metavar='FILE', help='Write the constructed twisted double')
	
	invariant = commands.add_parser('invariant', help='Labelled-graph invariants of two manifolds')
	invariant.add_argument('path_a')
	invariant.add_argument('path_b')
	
	dehn = commands.add_parser('dehn', help='Composed Dehn-function upper bound')
	dehn.add_argument('path')
	dehn.add_argument('--lambda', dest='lam', type=int)
	dehn.add_argument('--C', dest='c', type=int)
	dehn.add_argument('--K', dest='k', type=int)
	return parser


def _load_json(path: str) -> Tuple[Any, bytes]:
	try:
		raw = Path(path).read_bytes()
	except OSError as e:
		raise InputError(f"cannot read {path}: {e.strerror}")
	try:
		return json.loads(raw.decode('utf-8')), raw
	except (UnicodeDecodeError, json.JSONDecodeError) as e:
		raise InputError(f"{path} is not valid UTF-8 JSON: {e}")


def _write_json(path: Path, data: Any) -> None:
	path.parent.mkdir(parents=True, exist_ok=True)
	path.write_text(json.dumps(data, sort_keys=True, indent=2) + '\n', encoding='utf-8')


def dispatch(args: argparse.Namespace) -> Tuple[Dict[str, Any], List[str], List[bytes]]:
	"""Run one command
	
	Returns:
		Tuple of (results, warnings, raw input bytes in argument order)
	"""
	workers = get_workers() if args.parallel else 1
	if args.command == 'invariant':
		first, raw_a = load_manifest(args.path_a)
		second, raw_b = load_manifest(args.path_b)
		results, warnings = run_invariant(first, second)
		return results, warnings, [raw_a, raw_b]
	
	manifest, raw = load_manifest(args.path)
	raws = [raw]
	if args.command == 'validate':
		results, warnings = run_validate(manifest)
	elif args.command == 'check':
		results, warnings = run_check(manifest)
	elif args.command == 'classify':
		results, warnings = run_classify(manifest)
	elif args.command == 'acyl':
		results, warnings = run_acyl(manifest, args.max_len, workers)
	elif args.command == 'equiv':
		patterns, patterns_raw = _load_json(args.patterns)
		raws.append(patterns_raw)
		results, warnings = run_equiv(manifest, args.edge, patterns)
	elif args.command == 'generate':
		results, warnings = run_generate(manifest, args.edge, args.count)
		if args.out:
			for index, member in enumerate(results['manifests'], start=1):
				_write_json(Path(args.out) / f"family_{index:02d}.json", member)
	elif args.command == 'obstruct':
		results, warnings = run_obstruct(manifest, args.kind, workers)
		if args.out:
			if 'manifest' not in results:
				raise InputError("--out is only meaningful with --kind twisted_double")
			_write_json(Path(args.out), results['manifest'])
	else:
		results, warnings = run_dehn(manifest, args.lam, args.c, args.k)
	return results, warnings, raws


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""Entry point; returns the process exit code"""
	logging.basicConfig(
		stream=sys.stderr,
		level=getattr(logging, LOG_LEVEL, logging.INFO),
		format=LOG_FORMAT
	)
	try:
		args = build_parser().parse_args(argv)
		if args.log_level:
			logging.getLogger().setLevel(args.log_level)
		results, warnings, raws = dispatch(args)
		report = build_report(args.command, raws, results, warnings)
		sys.stdout.write(render_summary(args.command, results, warnings))
		if args.json:
			Path(args.json).write_text(report.dumps(), encoding='utf-8')
		return EXIT_OK
	except GraphManifoldError as e:
		logger.error(f"{type(e).__name__}: {e.message}")
		sys.stderr.write(f"error: {e.message}\n")
		for violation in e.violations:
			sys.stderr.write(f"  - {violation}\n")
		return e.exit_code
	except Exception as e:
		logger.exception(f"Unexpected failure: {e}")
		sys.stderr.write(f"internal error: {e}\n")
		return EXIT_INVARIANT


if __name__ == '__main__':
	sys.exit(main())
