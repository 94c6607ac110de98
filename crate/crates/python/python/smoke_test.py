"""Smoke test for the annigraph extension module.

Build and install first:
    pip install --no-build-isolation ./crates/python
then run:
    python crates/python/python/smoke_test.py
"""

import json

import annigraph


def main():
    z12 = annigraph.Ring("zn:12")
    assert z12.size == 12 and len(z12) == 12
    assert z12.mul(3, 4) == 0
    assert z12.validate() is None

    names = [i["name"] for i in z12.ideals()]
    assert names[0] == "(0)" and names[-1] == "(1)", names

    ag = z12.ag()
    assert (ag.vertex_count, ag.edge_count) == (4, 3)
    assert ag.to_dot().startswith("graph AG {")
    assert ag.is_planar()
    assert ag.genus()["status"] == "exact"

    info = annigraph.Ring("cat:f2xy_x2y2").classify()
    assert info["ideal_count"] == 7
    assert info["is_gorenstein"] and not info["is_spir"]
    assert info["vdim_profile"] == [2, 1]

    k5 = annigraph.Graph.complete(5)
    res = annigraph.genus(k5)
    assert res["status"] == "exact" and res["upper"] == 1
    assert k5.embedding_genus(res["witness"]) == 1
    assert annigraph.genus_complete(5) == 1
    assert annigraph.genus_complete_bipartite(3, 3) == 1
    assert not k5.is_planar()

    path = annigraph.Graph(3, [(0, 1), (1, 2)], ["a", "b", "c"])
    assert path.degree(1) == 2
    assert json.loads(path.to_json())["edges"] == [[0, 1], [1, 2]]

    cut = annigraph.genus(annigraph.Graph.complete(8), budget_nodes=1)
    assert cut["status"] == "budget_exhausted"

    report = annigraph.run_suite(["zn:8", "cat:f2xy_x2y2"], suite="lemmas")
    assert report["passed"], report["summary"]

    for bad in ["zn:x", "cat:nope"]:
        try:
            annigraph.Ring(bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"{bad} should be rejected")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
