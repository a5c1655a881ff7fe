import io
import json
import subprocess
import sys

import pytest

from hirzebruch.cli import main, run
from hirzebruch.collection import GroupElement, apply_group_element, standard_collection
from hirzebruch.k0 import K0Class, line_bundle_class, structure_sheaf
from hirzebruch.surface import C, F

O = structure_sheaf().to_json()
OF = line_bundle_class(2, F).to_json()
STD = standard_collection(2)


def call(*argv, payload=None):
    return run(list(argv), "" if payload is None else json.dumps(payload))


def test_euler():
    assert call("euler", "--n", "2", payload={"v": O, "w": OF}) == (0, {"chi": 2})


def test_cohom():
    code, out = call("cohom", "--n", "3", payload={"divisor": {"f": 2, "c": 1}})
    assert code == 0
    assert out == {"h0": 3, "h1": 0, "h2": 0, "chi": 3}


def test_twist_both_directions():
    code, out = call("twist", payload={"a": 0, "class": O})
    assert code == 0 and K0Class.from_json(out) == K0Class(1, -C, -2)
    code, out = call("twist", payload={"a": -1, "class": O, "direction": "inverse"})
    assert K0Class.from_json(out) == structure_sheaf()
    assert call("twist", payload={"a": 0, "class": O, "direction": "sideways"})[0] == 1


@pytest.mark.parametrize("cmd", ["twist", "tower", "classify", "profile"])
def test_requires_f2(cmd):
    code, out = call(cmd, "--n", "3", payload={"a": 0, "class": O})
    assert code == 2
    assert out["error"] == "UnsupportedSurface"
    assert "requires n = 2" in out["message"]


def test_tower_and_classify():
    code, out = call("tower", "--tower-max", "3", payload={"class": O})
    assert code == 0
    assert out["header"] == {"root": O, "b0": 0, "s": 1, "R": 1}
    assert [e["i"] for e in out["entries"]] == list(range(-3, 4))
    assert all(e["total"] == O for e in out["entries"])

    code, out = call("tower", payload={"class": O, "i": -2})
    assert out["kind"] == "Complex"

    code, out = call("classify", "--tower-max", "2", payload={"class": K0Class.from_json(OF).__neg__().to_json()})
    assert code == 0
    assert out["header"]["root"] == OF
    assert out["header"]["e_minus1_iso_e0"] is True
    assert [e["i"] for e in out["entries"]] == [-1, 0, 1, 2]


def test_profile_and_domain_errors():
    assert call("profile", payload={"class": OF}) == (0, {"b0": 1, "s": 1, "R": 1})
    code, out = call("profile", payload={"class": {"rank": 0, "c1": {"f": 0, "c": 1}, "ch2_x2": 2}})
    assert code == 2 and out["error"] == "NotExceptional"
    code, out = call("euler", payload={"v": {"rank": 1, "c1": {"f": 0, "c": 0}, "ch2_x2": 1}, "w": O})
    assert code == 2 and out["error"] == "ParityViolation"


def test_ext_table():
    code, out = call("ext-table", payload={"t": 4, "f": 1})
    assert code == 0
    rows = {tuple(r["pair"]): r["ext"] for r in out["rows"]}
    assert rows[("T", "T")] == [4, 0, 4]
    assert call("ext-table", payload={"t": 0, "f": 1})[0] == 1


def test_mutate_and_orbit_search():
    g = GroupElement((0, 1, 0, 0), ((1, 1), (3, -1), (2, 1)))
    code, out = call("mutate", payload={"collection": STD.to_json(), **g.to_json()})
    assert code == 0
    moved = apply_group_element(STD, g)
    assert out == moved.to_json()

    code, cert = call("orbit-search", "--depth", "5", payload={"source": out})
    assert code == 0
    assert set(cert) == {"signs", "word"}
    back = apply_group_element(moved, GroupElement.from_json(cert))
    assert back == STD


def test_orbit_search_not_found_exit_code():
    moved = apply_group_element(STD, GroupElement(word=((1, 1), (2, 1), (3, 1))))
    code, out = call("orbit-search", "--depth", "1", payload={"source": moved.to_json(), "target": STD.to_json()})
    assert code == 2 and out["error"] == "NotFound"


def test_enumerate():
    code, out = call("enumerate", payload={"rank": [1, 1], "x": [-1, 1], "y": [-1, 1]})
    assert code == 0 and len(out) == 9
    assert call("enumerate", payload={"rank": [2, 2], "x": [-10, 10], "y": [-10, 10]}) == (0, [])


def test_malformed_input():
    assert run(["euler"], "{not json")[0] == 1
    assert call("euler", payload={"v": O})[0] == 1
    assert call("euler", payload={"v": {"rank": "x"}, "w": O})[0] == 1
    assert run(["no-such-command"], "")[0] == 1


def test_verify_all_pass():
    code, out = call("verify", "--n", "2")
    assert code == 0
    assert out["passed"]
    names = [c["name"] for c in out["checks"]]
    assert names == sorted(names)
    assert {"double-twist-trivial", "remark-Fn-negative-degree", "tower-class-invariance"} <= set(names)
    assert all(c["status"] == "pass" for c in out["checks"])
    assert out["seconds"] < 60


def test_verify_deterministic():
    strip = lambda out: [(c["name"], c["status"], c["detail"]) for c in out["checks"]]
    assert strip(call("verify", "--seed", "3")[1]) == strip(call("verify", "--seed", "3")[1])


@pytest.mark.parametrize(
    "argv, payload",
    [
        (["euler"], {"v": O, "w": OF}),
        (["tower", "--tower-max", "2"], {"class": OF}),
        (["classify"], {"class": O}),
        (["mutate"], {"collection": STD.to_json(), "word": [[1, 1]], "signs": [1, 0, 0, 0]}),
        (["ext-table"], {"t": 1, "f": 1}),
    ],
)
def test_json_canonical_round_trip(argv, payload, capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(payload)))
    assert main(argv) == 0
    text = capsys.readouterr().out.strip()
    assert json.dumps(json.loads(text), sort_keys=True) == text


def test_text_format(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"v": O, "w": OF})))
    assert main(["euler", "--format", "text"]) == 0
    assert capsys.readouterr().out.strip() == "chi: 2"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hirzebruch", "euler"],
        input=json.dumps({"v": O, "w": OF}), capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"chi": 2}
