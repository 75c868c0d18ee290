import os
from pathlib import Path

import pytest

import l2net

FIXTURES = Path(os.environ.get("L2NET_FIXTURES", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))


def load(name):
    return l2net.Network.parse((FIXTURES / name).read_text())


def test_figure3_sl_round_trip():
    net = load("figure3.net")
    m = l2net.sl_matrix(net)
    assert m.shortest("a", "b") == 4 and m.longest("a", "b") == 8
    assert m == l2net.DistanceMatrix.parse(m.format())
    r = l2net.reconstruct_sl(m)
    assert r.outcome == "Unique"
    assert l2net.is_isomorphic(r.networks[0], net)
    assert r.trace


def test_figure1_is_ambiguous_from_shortest():
    left, right = load("figure1_left.net"), load("figure1_right.net")
    m = l2net.shortest_matrix(left)
    assert m == l2net.shortest_matrix(right)
    r = l2net.reconstruct_shortest(m)
    assert r.outcome == "Ambiguous"
    assert len(r.networks) == 2
    assert l2net.detect_altpath(left) is not None
    assert not l2net.is_shortest_reconstructible(left)


def test_altpath_pair():
    n1, n2 = l2net.altpath_pair((FIXTURES / "figure7_tree.txt").read_text())
    assert l2net.shortest_matrix(n1) == l2net.shortest_matrix(n2)
    assert not l2net.sl_matrix(n1) == l2net.sl_matrix(n2)


def test_genside_and_random():
    assert l2net.reconstruct_genside(l2net.shortest_matrix(load("figure4.net"))).outcome == "Unique"
    net = l2net.random_network(seed=3, genside=True)
    assert l2net.verify_roundtrip(net, "genside")[0]
    assert l2net.verify_roundtrip(l2net.random_network(seed=3), "sl")[0]


def test_splits_and_pendant():
    net = load("figure3.net")
    m = l2net.shortest_matrix(net)
    assert l2net.all_splits(m) == l2net.cut_edge_splits(net)
    assert l2net.identify_pendant(l2net.sl_matrix(load("figure1_left.net")), ["c", "d"]) == "Level1(c,d)"
    with pytest.raises(l2net.L2NetError) as info:
        l2net.identify_pendant(l2net.sl_matrix(net), ["d1", "d2"])
    assert info.value.kind == "CherriesPresent"


def test_errors_carry_kind():
    with pytest.raises(l2net.L2NetError) as info:
        l2net.Network.parse("edge 1\n")
    assert info.value.kind == "ParseError"
