import pytest

from quantum_pencils.peterpy import peter


def test_prints_and_measures(capsys):
    with peter('Computing spans') as timer:
        pass
    assert timer.elapsed >= 0
    out = capsys.readouterr().out
    assert out.startswith('Computing spans... DONE (took ')


def test_failure_is_reported_and_propagates(capsys):
    timer = peter('Computing spans')
    with pytest.raises(ZeroDivisionError):
        with timer:
            1 / 0
    assert timer.elapsed is not None
    assert 'FAILED (after ' in capsys.readouterr().out


def test_quiet(capsys):
    with peter('hidden', quiet=True) as timer:
        pass
    assert timer.elapsed is not None
    assert capsys.readouterr().out == ''
