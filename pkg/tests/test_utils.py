import pytest

from quantum_pencils import utils
from quantum_pencils.utils import (ConfigError, ParseError,
                                   QuantumPencilsError, humanize, progress)


def test_humanize():
    assert humanize(12).startswith('12')
    assert humanize(4500).endswith('K')


def test_progress_yields_every_item():
    assert list(progress(range(4), desc='words')) == [0, 1, 2, 3]


def test_progress_can_be_switched_on(monkeypatch):
    monkeypatch.setattr(utils, 'SHOW_PROGRESS', True)
    assert list(progress(iter('ab'), total=2)) == ['a', 'b']


def test_errors_share_one_root():
    with pytest.raises(QuantumPencilsError):
        raise ConfigError('bad')
    e = ParseError('unknown key', 'f.rel', 4)
    assert str(e) == 'f.rel:4: unknown key'
    assert isinstance(e, ValueError)
