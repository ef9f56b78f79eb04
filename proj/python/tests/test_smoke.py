import os
import pathlib

import pytest

import kkmtopo

DATA = pathlib.Path(os.environ.get("KKM_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))

SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]
HEPTAGON = [SQUARE[i] for i in (0, 1, 2, 3, 2, 1, 3)]


def tetra_boundary():
    return {
        "vertices": 4,
        "maximal_simplices": [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]],
        "orientation": [1, -1, 1, -1],
    }


def test_sphere_degree_through_subdivision():
    for depth in (1, 2):
        sub = kkmtopo.subdivide(tetra_boundary(), depth)
        labels = kkmtopo.sperner_labeling(sub, 3)
        report = kkmtopo.degree(sub, labels)
        assert report["degree"] == 1
        assert all(c["degree"] == 1 for c in report["cross_checked"])


def test_heptagon_winding():
    assert kkmtopo.winding(HEPTAGON, ["3/10", "3/10"]) == 1
    assert kkmtopo.winding(HEPTAGON, ["7/10", "7/10"]) == 0
    with pytest.raises(kkmtopo.OnImage):
        kkmtopo.winding(HEPTAGON, ["1/2", "1/2"])


def test_cov_and_pebble():
    family = kkmtopo.cov(SQUARE, ["1/2", "1/2"])
    assert sorted(map(sorted, family["minimal_sets"])) == [[0, 2], [1, 3]]
    hexagon = [[2, 0], [1, 1], [-1, 1], [-2, 0], [-1, -1], [1, -1]]
    result = kkmtopo.pebble(hexagon)
    assert result["bound"] == 4 and result["certified"]


def test_errors_are_typed():
    with pytest.raises(kkmtopo.InvalidInput):
        kkmtopo.winding(HEPTAGON, ["1/0", "1"])
    mobius = {"vertices": 6, "maximal_simplices": [[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5], [0, 4, 5], [0, 1, 5]]}
    with pytest.raises(kkmtopo.HypothesisFailure):
        kkmtopo.degree(mobius, {"m": 3, "labels": [0, 1, 2, 3, 1, 2]})
    code, _, error = kkmtopo.run("build", options={"fixture": "mobius", "orient": 1})
    assert code == 2 and "orient" in error
    assert issubclass(kkmtopo.OnImage, kkmtopo.KkmError)


def test_run_matches_cli_examples():
    code, report, _ = kkmtopo.run("degree", {"complex": DATA / "sphere2.json", "labels": DATA / "sperner.json"})
    assert code == 0 and report["degree"] == 1
    code, report, _ = kkmtopo.run("pebble", {"V": DATA / "hexagon.json"})
    assert code == 0 and report["bound"] == 4
    code, report, error = kkmtopo.run("winding", {"config": DATA / "heptagon.json"}, {"p": "1/2,1/2"})
    assert code == 2 and report is None and "image" in error
    assert "verify-kkm" in kkmtopo.commands()


def test_fuzz_is_deterministic():
    a = kkmtopo.fuzz("sperner", 10, seed=4, threads=1)
    b = kkmtopo.fuzz("sperner", 10, seed=4, threads=2)
    assert a == b
    assert a["alarms"] == 0
