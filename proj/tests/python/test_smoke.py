import json

import bnet

DEMO = """n = 3
f1 = x1 & x2 & x3
f2 = x1 | !x3
f3 = (x2 & !x3) | (x1 & !x2 & !x3) | (x1 & x2 & x3)
"""

NEG2 = "vertices = 2\n1 -> 2 +\n2 -> 1 -\n"
K3_NEG = "vertices = 3\n" + "".join(
    f"{a} -> {b} -\n" for a in (1, 2, 3) for b in (1, 2, 3) if a != b
)


def test_fixed_points_and_attractors():
    assert bnet.fixed_points(DEMO) == ["111"]
    atts = bnet.attractors(DEMO)
    assert len(atts) == 2
    assert sorted(map(sorted, atts)) == [
        ["000", "001", "010", "011"],
        ["111"],
    ]


def test_table_rendering_round_trips():
    table = bnet.render_table(DEMO)
    assert "111 111" in table
    assert bnet.render_table(table) == table


def test_interaction_graph_text():
    graph = bnet.interaction_graph(DEMO)
    assert graph.startswith("vertices = 3\n")
    assert "3 -> 2 -" in graph


def test_signed_graph_analysis():
    stats = bnet.graph_stats(NEG2)
    assert stats["tau"] == 1
    assert stats["tau_plus"] == 0
    assert stats["positive_girth"] is None
    assert stats["has_negative_cycle"] and not stats["has_positive_cycle"]
    assert bnet.signed_cycles(NEG2) == ["1 -[+]-> 2 -[-]-> 1"]
    assert bnet.feedback_bound(NEG2) == 1
    assert bnet.coding_bound(NEG2) == 1


def test_code_params():
    params = bnet.code_params(3, 3)
    assert params["gilbert"] == (8, 7)
    assert params["hamming"] == (2, 1)
    assert params["exact"] == 2


def test_cycle_network():
    table = bnet.cycle_network("+-")
    assert "n = 2" in table
    assert "00 10" in table


def test_exhaustive_suite_is_clean():
    report = json.loads(bnet.verify_exhaustive(1))
    assert report["networks"] == 4
    assert report["violations"] == []
    assert len(report["cases"]) == 26
    assert report["question1"]["fails"] == 0
    assert bnet.verify_exhaustive(1, workers=2) == bnet.verify_exhaustive(1)


def test_sampled_suite_is_reproducible():
    a = bnet.verify_sampled(3, 20, seed=3)
    b = bnet.verify_sampled(3, 20, seed=3, workers=2)
    assert a == b
    assert json.loads(a)["networks"] == 20


def test_phi_estimate():
    est = bnet.estimate_phi(1)
    assert est["exact"] is True
    assert est["value"] == 0.75
    assert est["hits"] == 3 and est["total"] == 4


def test_max_fixed_points():
    result = bnet.max_fixed_points(K3_NEG)
    assert result["realizable"] is True
    assert result["max_fixed_points"] == 3
    assert result["witness"].startswith("n = 3")
