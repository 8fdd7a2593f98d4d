import pytest

import pivotkit


def test_rank_and_pivot_involution():
    assert pivotkit.rank([[1, 0], [1, 1], [0, 1]]) == 2
    c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    n, once = pivotkit.pivot(5, c5, 0, 1)
    assert n == 5
    _, back = pivotkit.pivot(n, once, 0, 1)
    assert sorted(back) == sorted(c5)


def test_pivot_on_non_edge_raises():
    with pytest.raises(pivotkit.Error):
        pivotkit.pivot(3, [(0, 1)], 0, 2)


def test_cut_rank_and_separation():
    c4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
    assert pivotkit.cut_rank(4, c4, [0, 1]) == 2
    k33 = [(i, 3 + j) for i in range(3) for j in range(3)]
    assert pivotkit.find_low_rank_separation(6, k33, 2) is None
    side, order, value = pivotkit.find_low_rank_separation(6, k33, 4)
    assert value < order


def test_ktt_example():
    inst = pivotkit.gen_ktt_example(5)
    assert inst["fundamental"] == [[1] * 4] * 4
    assert inst["text"].startswith("#") or "multigraph" in inst["text"]


def test_random_instance_deterministic():
    a = pivotkit.gen_random_instance(8, 3, 42)
    b = pivotkit.gen_random_instance(8, 3, 42)
    assert a == b
    assert len(a["edges"]) == 10
    assert len(a["tree"]) == 7


def test_matroid():
    # Triangle: basis {0, 1}, one non-basis element in the cycle of both.
    circuits = pivotkit.circuits([0, 1], [2], [[1], [1]])
    assert circuits == [[0, 1, 2]]
    assert pivotkit.matroid_lambda([0, 1], [2], [[1], [1]], [0]) == 1


def test_split_tree():
    path = [(i, i + 1) for i in range(10)]
    assert pivotkit.split_tree(11, path, 2).startswith("split edge 7 8")


def test_campaign_and_cli():
    assert "fun-lemma" in pivotkit.campaign_names()
    passed, report = pivotkit.run_campaign("pivot-matroid", seed=1, trials=10)
    assert passed and report.startswith("PASS")
    code, out, _ = pivotkit.run_cli(["replay", "-"], report)
    assert code == 0
    code, out, _ = pivotkit.run_cli(["cutrank", "-", "--set", "0"], "graph 2\n0 1\n")
    assert (code, out) == (0, "1\n")
