import pytest

import mcomb


def test_word_info():
    info = mcomb.word_info("12341234")
    assert info["genus"] == 2
    assert info["aut_order"] == 8
    assert info["aut_parity"] == "odd"
    assert mcomb.word_info("2121")["canonical"] == "1212"


def test_bad_word_raises():
    with pytest.raises(mcomb.McombError, match="NonDoubleOccurrence"):
        mcomb.word_info("1123")


def test_genus_one_cells():
    words = [c["word"] for c in mcomb.cells(1)]
    assert words == ["1212", "123123"]


def test_genus_two_homology():
    h = mcomb.homology(2, jobs=2)
    assert h["cells"] == {3: 4, 4: 21, 5: 45, 6: 52, 7: 29, 8: 9}
    assert h["d2_zero"]
    assert h["euler"] == 4
    assert h["orbifold_euler"] == "1/120"
    assert sum((-1) ** d * b for d, b in h["betti"].items()) == 4


def test_boundary_shape():
    m = mcomb.boundary(2, 8)
    assert len(m["rows"]) == 29 and len(m["cols"]) == 9
    assert all(abs(v) <= 1 for row in m["dense"] for v in row)
