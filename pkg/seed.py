"""
graphmf - Reference manifest writer
Writes the hand-built manifolds used in the docs and tests, plus random irreducible ones.

Usage Examples:
  python seed.py --out manifests
  python seed.py --out manifests --random 20 --seed 7
  python seed.py --out manifests --overwrite
"""
import argparse
import json
import sys
from pathlib import Path

from utils.generators import (
	classifier_manifests,
	identity_double,
	knot_complement_manifest,
	random_irreducible_manifest
)


def reference_manifests() -> dict:
	"""Name -> manifest for every hand-built reference manifold"""
	manifests = dict(classifier_manifests())
	manifests['identity_double'] = identity_double()
	manifests['knot_complement'] = knot_complement_manifest()
	manifests['knot_complement_w5'] = knot_complement_manifest(5)
	euler = knot_complement_manifest()
	euler['homology'] = {'h1_boundary_rank': 2, 'h1_interior_rank': 1, 'i_star': [[1, 1]]}
	manifests['euler_kernel'] = euler
	return manifests


def write_manifest(directory: Path, name: str, manifest: dict, overwrite: bool) -> bool:
	path = directory / f"{name}.json"
	if path.exists() and not overwrite:
		print(f"  Skipped {path} (exists)")
		return False
	path.write_text(json.dumps(manifest, sort_keys=True, indent=2) + '\n', encoding='utf-8')
	print(f"  Wrote {path}")
	return True


def main():
	"""Main entry point"""
	parser = argparse.ArgumentParser(description='Write graphmf reference manifests')
	parser.add_argument('--out', required=True, help='Output directory')
	parser.add_argument('--random', type=int, default=0, help='Number of random irreducible manifolds to add')
	parser.add_argument('--seed', type=int, default=0, help='First random seed')
	parser.add_argument('--overwrite', action='store_true', help='Replace existing files')
	args = parser.parse_args()
	
	directory = Path(args.out)
	try:
		directory.mkdir(parents=True, exist_ok=True)
		written = 0
		for name, manifest in sorted(reference_manifests().items()):
			written += write_manifest(directory, name, manifest, args.overwrite)
		for offset in range(args.random):
			seed = args.seed + offset
			written += write_manifest(directory, f"random_{seed:04d}", random_irreducible_manifest(seed), args.overwrite)
		print(f"\n{written} manifest(s) written to {directory}")
	except OSError as e:
		print(f"\nFATAL ERROR: {e}")
		sys.exit(1)


if __name__ == '__main__':
	main()
