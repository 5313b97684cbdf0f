import pytest

import dweil


def test_weil_operator():
    assert dweil.weil_operator(3, [1, 0, 1], 2) == "X1 + X2"
    assert dweil.weil_operator(2, [0, 0, 1], 3) == "X1*X2 + X1*X3 + X2*X3"
    assert dweil.weil_operator(2, [0, 0, 1], 1) == "1"
    assert "X_{1}" in dweil.weil_operator(2, [0, 0, 1], 3, latex=True)


def test_torsion_sizes():
    carlitz = dweil.torsion(2, 2, [], [[1]], [0, 1])
    assert carlitz["dimension"] == 1
    assert carlitz["basis"] == [[0, 1]]
    rank2 = dweil.torsion(2, 2, [], [[1], [1]], [0, 1])
    assert rank2["dimension"] == 2


def test_pairing():
    w = dweil.pairing(3, 2, [], [[1], [2]], [0, 1], [[1, 0], [0, 1]])
    assert any(w)
    assert not any(dweil.pairing(3, 2, [], [[1], [2]], [0, 1], [[1, 0], [1, 0]]))
    swapped = dweil.pairing(3, 2, [], [[1], [2]], [0, 1], [[0, 1], [1, 0]])
    assert [(a + b) % 3 for a, b in zip(w, swapped)] == [0] * len(w)


def test_verify():
    assert "main-theorem" in dweil.suite_names()
    rep = dweil.verify("main-theorem")
    assert rep["failures"] == []
    assert rep["guard_band"]
    assert dweil.verify("operators", seed=7, cases=5) == dweil.verify("operators", seed=7, cases=5)


def test_errors():
    with pytest.raises(dweil.DweilError):
        dweil.weil_operator(6, [0, 1], 2)
    with pytest.raises(dweil.DweilError, match="BadCharacteristic"):
        dweil.torsion(2, 2, [], [[1]], [1, 1, 1])
    with pytest.raises(ValueError):
        dweil.verify("bogus")
