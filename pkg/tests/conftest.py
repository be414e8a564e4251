import pytest

from quantum_pencils import utils
from quantum_pencils.braided import BRAIDED_PARAMS, q_lie_bracket
from quantum_pencils.sampling import SamplePoints
from quantum_pencils.scalar import ParamSet


@pytest.fixture(autouse=True)
def no_progress_bars(monkeypatch):
    monkeypatch.setattr(utils, 'SHOW_PROGRESS', False)


@pytest.fixture
def params_q():
    return ParamSet(('q',))


@pytest.fixture
def braided_params():
    return ParamSet(BRAIDED_PARAMS)


@pytest.fixture
def sampler():
    return SamplePoints(seed=7)


@pytest.fixture(scope='session')
def bracket():
    return q_lie_bracket()


@pytest.fixture(scope='session')
def classical_bracket():
    params = ParamSet(BRAIDED_PARAMS)
    return q_lie_bracket(params, params.one)
