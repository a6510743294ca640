import json
import random

import pytest

from tmcv.core import core_decompose
from tmcv.errors import GraphError
from tmcv.exact import exact_bruteforce
from tmcv.objective import evaluate
from tmcv.reductions import (
    SetCoverInstance,
    exactcover_to_tmcv,
    inapprox_gadget_to_tmcv,
    min_cover_size,
    setcover_to_tmcv,
)

EXAMPLE = SetCoverInstance(4, [{1, 2}, {1, 3, 4}, {3}], 2)


def random_instance(rng):
    n = rng.randint(1, 5)
    m = rng.choice([3, 4])
    sets = [{e for e in range(1, n + 1) if rng.random() < 0.5} or {rng.randint(1, n)} for _ in range(m)]
    return SetCoverInstance(n, sets, rng.randint(1, m))


def cubic_instance(rng):
    """Exact-cover shape: sets are nodes of a loopless cubic multigraph, elements its edges."""
    while True:
        m = rng.choice([2, 4, 6])
        stubs = [i for i in range(m) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        if all(a != b for a, b in pairs):
            break
    sets = [set() for _ in range(m)]
    for j, (a, b) in enumerate(pairs, start=1):
        sets[a].add(j)
        sets[b].add(j)
    return SetCoverInstance(len(pairs), sets, rng.randint(1, m))


def test_instance_validation():
    with pytest.raises(ValueError):
        SetCoverInstance(3, [{1}, set()], 1)
    with pytest.raises(ValueError):
        SetCoverInstance(3, [{4}], 1)


def test_instance_json_roundtrip():
    assert SetCoverInstance.from_json(json.loads(json.dumps(EXAMPLE.to_json()))) == EXAMPLE


def test_min_cover_size():
    assert min_cover_size(EXAMPLE) == 2
    assert min_cover_size(SetCoverInstance(3, [{1}, {2}], 1)) is None


def test_example_construction_shape():
    red = setcover_to_tmcv(EXAMPLE)
    g = red.graph
    assert g.n == 4 * 3 + 4 * 3 + 4 * 4
    assert red.budget == 2 and red.yes_threshold == 18
    assert [g.label(v) for v in red.candidates] == ["P[1,1]", "P[2,1]", "P[3,1]"]
    # everything starts in the 3-core
    assert set(core_decompose(g).coreness) == {3}


def test_example_instance_optimum():
    red = setcover_to_tmcv(EXAMPLE)
    res = exact_bruteforce(red.graph, red.candidates, 2)
    assert res.f == 18 and res.B == tuple(red.hubs_for([1, 2]))
    assert exact_bruteforce(red.graph, red.candidates, 1).f == 12


def test_setcover_roundtrip_certified_threshold():
    rng = random.Random(2024)
    for _ in range(20):
        inst = random_instance(rng)
        red = setcover_to_tmcv(inst)
        f = exact_bruteforce(red.graph, red.candidates, red.budget).f
        k = min_cover_size(inst)
        assert (f >= red.yes_threshold) == (k is not None and k <= inst.r)


def test_exactcover_roundtrip_certified_threshold():
    rng = random.Random(77)
    for _ in range(10):
        inst = cubic_instance(rng)
        red = exactcover_to_tmcv(inst)
        g = red.graph
        assert max(g.degree(v) for v in range(g.n)) <= 6
        f = exact_bruteforce(g, red.candidates, red.budget).f
        assert (f >= red.yes_threshold) == (min_cover_size(inst) <= inst.r)


def test_exactcover_rejects_wrong_shape():
    with pytest.raises(ValueError):
        exactcover_to_tmcv(EXAMPLE)


def test_setcover_needs_three_sets():
    with pytest.raises(ValueError):
        setcover_to_tmcv(SetCoverInstance(2, [{1}, {2}], 1))


def test_inapprox_gadget_degrees():
    red = inapprox_gadget_to_tmcv(EXAMPLE, t=6)
    g = red.graph
    gadget = [v for v in range(g.n) if g.label(v).startswith("T[")]
    assert len(gadget) == 6
    assert all(g.degree(v) == 3 for v in gadget)
    assert set(core_decompose(g).coreness) == {3}


def test_inapprox_gap():
    red = inapprox_gadget_to_tmcv(EXAMPLE, t=6)
    assert red.yes_threshold == 3 * 2 + 12 + 1 + 6
    yes = evaluate(red.graph, None, red.hubs_for([1, 2]))
    assert yes.f == 25
    # without a cover the hub keeps the gadget in the 3-core
    no = evaluate(red.graph, None, red.hubs_for([1, 3]))
    assert no.f < 3 * 2 + 12
    best_no = max(evaluate(red.graph, None, red.hubs_for(c)).f for c in ([1, 3], [2, 3]))
    assert best_no == 15


@pytest.mark.parametrize("t", [4, 7])
def test_inapprox_rejects_bad_gadget(t):
    with pytest.raises(ValueError):
        inapprox_gadget_to_tmcv(EXAMPLE, t=t)


def test_inapprox_rejects_full_sets():
    with pytest.raises(GraphError):
        inapprox_gadget_to_tmcv(SetCoverInstance(2, [{1, 2}] * 3, 1))
