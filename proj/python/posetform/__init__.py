"""Exact quadratic-form analysis of finite posets."""

import json as _json

try:
    from . import _core
except ImportError:  # running against a bare build tree
    import _core

poset_text = _core.poset_text
relations = _core.relations
p_value = _core.p_value
census = _core.census


def analyze(input, cap=16, box=6):
    return _json.loads(_core.analyze(input, cap, box))


def minimum(input, cap=16):
    return _json.loads(_core.minimum(input, cap))


def classify(input, cap=16):
    return _json.loads(_core.classify(input, cap))


def cone_witnesses(input):
    return _json.loads(_core.cone_witnesses(input))


def campaign(name, n_max=5):
    return _json.loads(_core.campaign(name, n_max))
