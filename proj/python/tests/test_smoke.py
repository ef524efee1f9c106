import sys

import pytest

try:
    import posetform
except ImportError:
    _core = pytest.importorskip("_core")

    class _Shim:
        pass

    posetform = sys.modules.setdefault("posetform", _Shim())
    import json

    posetform.p_value = _core.p_value
    posetform.census = _core.census
    posetform.poset_text = _core.poset_text
    posetform.relations = _core.relations
    posetform.analyze = lambda *a: json.loads(_core.analyze(*a))
    posetform.minimum = lambda *a: json.loads(_core.minimum(*a))
    posetform.classify = lambda *a: json.loads(_core.classify(*a))
    posetform.cone_witnesses = lambda *a: json.loads(_core.cone_witnesses(*a))
    posetform.campaign = lambda *a: json.loads(_core.campaign(*a))


def test_p_values():
    assert posetform.p_value("zeta(3/2)") == "12/5"
    assert posetform.p_value("chain(4) + zeta(3/2)") == "4"
    assert posetform.p_value("primitive(1,1,1,1,1)") == "5"


def test_minimum_k():
    m = posetform.minimum("zeta(3/2)")
    assert m["value"] == "5/12"
    assert m["minimizer"] == ["1/6", "1/3", "1/3", "1/6"]
    assert m["interior"] is True


def test_classify_shapes():
    assert posetform.classify("zeta(3/2)")["shape"] == "r-set"
    assert posetform.classify("wattle(2,2,3)")["shape"] == "wattle"
    assert posetform.classify("chain(5)")["shape"] == "chain"
    assert posetform.classify("crown(2)")["shape"] == "other"


def test_cone_witnesses_crown():
    w = posetform.cone_witnesses("crown(2)")
    assert w["C"] is not None
    assert w["St"]["vector"] == ["1", "1", "1", "1"]


def test_census():
    assert [posetform.census(n) for n in range(1, 6)] == [1, 2, 5, 16, 63]


def test_campaign_clean():
    res = posetform.campaign("theorem", 4)
    assert res["counterexamples"] == []


def test_poset_text():
    text = posetform.poset_text("zeta(3/2)")
    assert text.splitlines()[0] == "n 4"
    assert len(posetform.relations("zeta(3/2)")) == 3
