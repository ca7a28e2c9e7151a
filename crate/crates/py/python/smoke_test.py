"""Quick end-to-end check of the extension module."""

import pyflagsphere as fs


def main():
    g3 = fs.build_gm(3)
    assert len(g3) == 8 and g3.edge_count() == 10
    assert g3.is_ternary() and g3.ternary_witness() is None
    assert fs.Graph.from_text(g3.to_text()).is_isomorphic(g3)

    ind = g3.independence_complex()
    assert ind.dim == 2
    assert ind.is_homology_sphere() and ind.is_gorenstein("Q")
    assert ind.vectors()["h"] == [1, 5, 5, 1]
    assert ind.complement_skeleton_graph().is_isomorphic(g3)

    r3 = fs.build_r3()
    assert not r3.is_ternary() and len(r3.ternary_witness()) == 3
    assert r3.independence_complex().vectors()["h"] == [1, 4, 1]

    h5 = fs.build_gm(5).independence_complex().vectors()["h"]
    assert h5 == fs.delannoy_row(5) == [1, 9, 25, 25, 9, 1]
    cert = fs.certify_real_roots(h5)
    assert cert["certified"] and cert["negative_roots"] == 5

    report = fs.verify_iso_h_p(4)
    assert report["passed"] and report["vertices"] == 5

    s = fs.Construction.example().step("1", "6", "21").step("7", "11", "22")
    r = s.classify()
    assert r["vertices"] == 17 and r["ternary"] and not r["planar"]
    assert r["homology"]["homology_sphere_dim"] == 5 and r["alpha"] == 6
    assert s.graph.kuratowski()["kind"] == "K33"

    try:
        s.step("1", "nope")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown vertex accepted")

    rows = fs.acceptance([1, 7])
    assert all(row["passed"] for row in rows), rows
    print("smoke test passed")


if __name__ == "__main__":
    main()
