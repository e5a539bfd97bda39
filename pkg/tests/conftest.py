# tests/conftest.py
import pytest

from services.feature_service import FeatureService
from synth.generator import SynthParams, generate_corpus
from tests.helpers import make_capture


@pytest.fixture
def capture():
    return make_capture()


@pytest.fixture(scope="session")
def synthetic_corpus():
    return generate_corpus(20, SynthParams(), master_seed=7)


@pytest.fixture(scope="session")
def synthetic_rows(synthetic_corpus):
    service = FeatureService()
    return [service.featurize_capture(c) for _, _, c in synthetic_corpus]
