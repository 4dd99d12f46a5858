"""End-to-end smoke tests for the Python bindings.

Everything crosses the boundary as JSON-shaped dicts, so the assertions here
mirror the CLI output schemas.
"""

import pytest

import zerok


def test_homology_of_small_complex():
    # Z <- Z: multiplication by 4 has cokernel Z/4 and trivial kernel.
    h = zerok.homology({"ranks": [1, 1], "boundaries": [[4]]})
    assert h == [{"rank": 0, "torsion": [4]}, {"rank": 0, "torsion": []}]


def test_ktheory_of_two_term_complex():
    r = zerok.ktheory({"ranks": [1, 1], "boundaries": [[4]]})
    assert r["status"] == "exact"
    assert r["K0"] == {"rank": 0, "torsion": [4]}
    assert r["K1"] == {"rank": 0, "torsion": []}


def test_graph_ktheory_two_loops():
    loop = {"src": "v", "dst": "v"}
    r = zerok.graph_ktheory({"vertices": ["v"], "edges": [loop, loop]})
    assert r["K0"] == {"rank": 0, "torsion": []}
    assert r["K1"] == {"rank": 0, "torsion": []}


def test_graph_complex_shape():
    c = zerok.graph_complex(
        {
            "vertices": ["u", "v"],
            "edges": [{"src": "u", "dst": "v"}, {"src": "v", "dst": "u"}],
        }
    )
    assert c["ranks"][0] >= len(c["labels"][0]) == c["ranks"][0]
    assert len(c["boundaries"]) == len(c["ranks"]) - 1


def test_tiling_ktheory_stabilizes():
    t = zerok.tiling_ktheory({"period": "ab"}, [3, 4], check=True)
    assert t["stabilized"] is True
    for step in t["depths"]:
        assert step["result"]["K0"] == {"rank": 1, "torsion": []}
        assert step["result"]["K1"] == {"rank": 1, "torsion": []}


def test_raam_ktheory_path():
    r = zerok.raam_ktheory(
        {"generators": ["a", "b", "c", "d"], "edges": [[0, 1], [1, 2], [2, 3]]}
    )
    assert r["K0"] == {"rank": 1, "torsion": []}
    assert r["K1"] == {"rank": 1, "torsion": []}


def test_nq_ktheory_two_primes():
    r = zerok.nq_ktheory([3, 5])
    assert r["K0"] == {"rank": 0, "torsion": [2]}
    assert r["K1"] == {"rank": 0, "torsion": [2]}


def test_nq_ktheory_three_primes_extension():
    r = zerok.nq_ktheory([3, 5, 7])
    assert r["status"] == "extension_ambiguous"
    assert r["K0"]["extension"]["sub"] == {"rank": 0, "torsion": [2]}
    assert r["K0"]["extension"]["quot"] == {"rank": 0, "torsion": [2]}
    assert r["K1"] == {"rank": 0, "torsion": [2, 2]}


def test_nq_ktheory_four_primes_refused():
    with pytest.raises(RuntimeError):
        zerok.nq_ktheory([2, 3, 5, 7])


def test_check_covers_tiling():
    rep = zerok.check_covers({"family": "tiling", "period": "ab"})
    assert rep["passed"] is True
    conditions = {rec["condition"] for rec in rep["records"]}
    assert {"i", "ii", "iii", "iv"} <= conditions


def test_input_errors_are_value_errors():
    with pytest.raises(ValueError):
        zerok.nq_ktheory([4])  # not a prime
    with pytest.raises(ValueError):
        zerok.graph_ktheory({"vertices": [], "edges": []})
    with pytest.raises(ValueError):
        zerok.homology({"ranks": [2, 2], "boundaries": [[1, 0, 0]]})
