"""
Shared fixtures
"""
import json
from pathlib import Path

import pytest

from model import validate
from utils.generators import (
	chain_manifest,
	classifier_manifests,
	identity_double,
	knot_complement_manifest,
	notqi_manifest,
	single_piece_manifest,
	transverse_double
)

FIXTURES = Path(__file__).parent / 'fixtures'


def load_fixture(name: str):
	return json.loads((FIXTURES / name).read_text(encoding='utf-8'))


@pytest.fixture
def notqi():
	return validate(notqi_manifest())


@pytest.fixture
def notqi_data():
	return notqi_manifest()


@pytest.fixture
def identity_pair():
	return validate(identity_double())


@pytest.fixture
def transverse_pair():
	return validate(transverse_double())


@pytest.fixture
def chain():
	return validate(chain_manifest(3))


@pytest.fixture
def single_fibered():
	return validate(single_piece_manifest(3, 2))


@pytest.fixture
def knot_data():
	return knot_complement_manifest()


@pytest.fixture
def classifier_table():
	return load_fixture('classifier_truth_table.json')


@pytest.fixture
def classifier_inputs():
	return classifier_manifests()


@pytest.fixture
def write_json(tmp_path):
	def write(name, data):
		path = tmp_path / name
		path.write_text(json.dumps(data), encoding='utf-8')
		return str(path)
	return write
