"""Smoke tests for the python module: generation, solving, classification,
validation round trips."""

import json

import dmvp
import pytest


def test_parse_and_repr():
    inst = dmvp.parse_instance(json.dumps({
        "n": 2,
        "edges": [[0, 1]],
        "snapshots": [{"duration": 3, "active": [0]}],
        "start": 0,
    }))
    assert inst.n == 2
    assert inst.total_duration == 3
    assert "TvgInstance" in repr(inst)


def test_parse_rejects_disconnected():
    with pytest.raises(dmvp.ValidationError):
        dmvp.parse_instance(json.dumps({
            "n": 3,
            "edges": [[0, 1]],
            "snapshots": [{"duration": 1, "active": [0]}],
            "start": 0,
        }))


def test_solvers_agree_on_random_instances():
    for seed in range(10):
        inst = dmvp.gen_random("R", shape="general", n=6, snapshots=8,
                               density=60, seed=seed)
        exact = dmvp.solve(inst, algo="exact")
        brute = dmvp.oracle(inst)
        assert exact["status"] == brute["status"]
        if exact["status"] == "ok":
            assert exact["cost"] == brute["cost"]


def test_auto_dispatch_picks_the_path_solver():
    inst = dmvp.gen_random("R", shape="path", n=6, snapshots=24,
                           density=60, seed=4)
    out = dmvp.solve(inst)
    assert out["algorithm"] == "path"


def test_solution_journey_validates():
    inst = dmvp.gen_random("B", shape="tree", n=7, snapshots=48, delta=2,
                           density=40, seed=3)
    out = dmvp.solve(inst, algo="tree-b-approx", delta=2)
    assert out["status"] == "ok"
    report = dmvp.validate(inst, json.dumps(out["journey"]))
    assert report["valid"]
    assert report["covers_all"]
    assert report["temporal_length"] == out["cost"]


def test_classify_periodic():
    inst = dmvp.gen_random("P", shape="tree", n=6, period=2, seed=1)
    report = dmvp.classify(inst)
    assert report["is_r"]
    assert 2 in report["periods"]


def test_setcover_gadget():
    inst = dmvp.gen_setcover_star(5, [[1, 2, 4], [2, 4], [3, 4], [3, 5]], 2)
    assert inst.n == 11
    assert inst.total_duration == 31
    out = dmvp.oracle(inst)
    assert out["status"] == "ok"
    assert out["cost"] <= 31


def test_hamiltonian_gadget():
    edges = [(i, (i + 1) % 6) for i in range(6)]
    inst = dmvp.gen_hamiltonian_p2(6, edges, 0)
    assert dmvp.oracle(inst)["cost"] == 11


def test_shape_detection():
    inst = dmvp.gen_random("R", shape="cycle", n=5, snapshots=6, seed=0)
    assert dmvp.detect_shape(inst) == "cycle"


def test_json_round_trip():
    inst = dmvp.gen_random("P", shape="spider", n=8, period=3, seed=9)
    again = dmvp.parse_instance(inst.to_json())
    assert again.to_json() == inst.to_json()
