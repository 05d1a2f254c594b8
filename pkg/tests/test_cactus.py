import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismatic.cactus import (
    EvenCactus,
    PrismHamCycle,
    cactus_tree,
    path_loop,
    prism_ham_from_cactus,
    random_even_cactus,
    splice,
    staircase_cycle,
    validate_even_cactus,
    verify_prism_cycle,
)
from prismatic.errors import InvalidCertificate
from prismatic.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    path_graph,
    prism,
    product_vertex,
)
from prismatic.oracles import verify_cycle


def _prism_ok(g, cycle):
    """Second opinion through the generic cycle checker on the explicit prism graph."""
    flat = [product_vertex(v, lvl, g.n) for v, lvl in cycle.sequence]
    return verify_cycle(prism(g), flat, spanning=True)


def _vertical_edges(seq):
    k = len(seq)
    out = set()
    for i in range(k):
        (a, la), (b, lb) = seq[i], seq[(i + 1) % k]
        if a == b and la != lb:
            out.add(a)
    return out


def test_validate_examples():
    assert validate_even_cactus(cycle_graph(6), EvenCactus(cycles=[list(range(6))]))
    odd = validate_even_cactus(cycle_graph(5), EvenCactus(cycles=[list(range(5))]))
    assert not odd and odd.clause == "odd-cycle"
    extra = validate_even_cactus(complete_graph(4), EvenCactus(cycles=[[0, 1, 2, 3]], paths=[[0, 2]]))
    assert not extra and extra.clause == "extra-cycle"


@pytest.mark.parametrize(
    "g, h, clause",
    [
        (path_graph(3), EvenCactus(), "structure"),
        (path_graph(3), EvenCactus(paths=[[0, 2]]), "edge-membership"),
        (cycle_graph(4), EvenCactus(cycles=[[0, 1, 2, 3]], paths=[[0, 1]]), "edge-overlap"),
        (path_graph(4), EvenCactus(paths=[[0, 1, 2], [2, 3]]), "paths-disjoint"),
        (path_graph(4), EvenCactus(paths=[[0, 1, 2]]), "span"),
        (from_edge_list(4, [(0, 1), (2, 3)]), EvenCactus(paths=[[0, 1], [2, 3]]), "connectivity"),
        (from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)]), EvenCactus(paths=[[1, 0, 2], [3, 0], [0, 4]]), "paths-disjoint"),
        (complete_graph(4), EvenCactus(paths=[[0, 1], [1, 2], [2, 0]]), "paths-disjoint"),
    ],
)
def test_validate_reports_clause(g, h, clause):
    res = validate_even_cactus(g, h)
    assert not res
    assert res.clause == clause


def test_validate_degree_clause():
    # K_{1,3} as one path plus a pendant at the middle: degree 3 off any cycle
    g = from_edge_list(4, [(0, 1), (1, 2), (1, 3)])
    res = validate_even_cactus(g, EvenCactus(paths=[[0, 1, 2], [1, 3]]))
    assert not res
    assert res.clause in ("paths-disjoint", "degree")


def test_single_vertex_cactus():
    assert validate_even_cactus(empty_graph(1), EvenCactus(paths=[[0]]))
    assert not validate_even_cactus(path_graph(2), EvenCactus(paths=[[0], [1]]))


def test_cactus_tree_shapes():
    one = cactus_tree(EvenCactus(cycles=[[0, 1, 2, 3]]))
    assert len(one.nodes) == 1 and one.edges == ()
    pend = cactus_tree(EvenCactus(cycles=[[0, 1, 2, 3]], paths=[[0, 4]]))
    assert len(pend.nodes) == 2 and pend.edges == ((0, 1, 0),)
    # two even cycles joined by a single edge: the edge is a 2-vertex path node
    two = EvenCactus(cycles=[[0, 1, 2, 3], [4, 5, 6, 7]], paths=[[1, 4]])
    tree = cactus_tree(two)
    assert len(tree.nodes) == 3
    assert tree.nodes[2] == ("path", (1, 4))
    assert {e[1] for e in tree.edges} == {1, 2}


def test_path_certificate_loop():
    seq = path_loop([0, 1, 2])
    assert seq == [(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1)]
    g = path_graph(3)
    assert verify_prism_cycle(g, prism_ham_from_cactus(g, EvenCactus.from_path([0, 1, 2])))


def test_staircase_on_even_cycles():
    for m in (2, 3, 4, 5):
        c = list(range(2 * m))
        seq = staircase_cycle(c)
        assert len(seq) == 4 * m
        assert seq[:4] == [(0, 0), (0, 1), (1, 1), (1, 0)]
        assert _vertical_edges(seq) == set(c)
        assert verify_prism_cycle(cycle_graph(2 * m), PrismHamCycle(tuple(seq)))


def test_staircase_fails_to_close_on_odd_cycles():
    # the same pattern on an odd cycle ends on the wrong level
    seq = []
    for i in range(5):
        seq.extend([(i, 0), (i, 1)] if i % 2 == 0 else [(i, 1), (i, 0)])
    assert not verify_prism_cycle(cycle_graph(5), PrismHamCycle(tuple(seq)))
    with pytest.raises(InvalidCertificate):
        staircase_cycle([0, 1, 2])


def test_c4_with_pendant():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    h = EvenCactus(cycles=[[0, 1, 2, 3]], paths=[[0, 4]])
    c = prism_ham_from_cactus(g, h)
    assert len(c) == 10
    assert verify_prism_cycle(g, c) and _prism_ok(g, c)
    # splicing consumes the vertical edge at 0
    assert 0 not in _vertical_edges(list(c.sequence))


def test_splice_by_hand():
    big = staircase_cycle([0, 1, 2, 3])
    block = path_loop([0, 4])
    merged = splice(big, block, 0)
    assert len(merged) == 10 and len(set(merged)) == 10


def test_invalid_cactus_rejected():
    with pytest.raises(InvalidCertificate):
        prism_ham_from_cactus(cycle_graph(5), EvenCactus(cycles=[list(range(5))]))
    with pytest.raises(InvalidCertificate):
        prism_ham_from_cactus(empty_graph(1), EvenCactus(paths=[[0]]))


def test_verify_prism_cycle_rejections():
    g = cycle_graph(4)
    good = list(prism_ham_from_cactus(g, EvenCactus(cycles=[[0, 1, 2, 3]])).sequence)
    assert verify_prism_cycle(g, PrismHamCycle(tuple(good)))
    assert not verify_prism_cycle(g, PrismHamCycle(tuple(good[:-1] + [good[0]])))
    assert not verify_prism_cycle(g, PrismHamCycle(tuple(good[:-2])))
    assert not verify_prism_cycle(g, PrismHamCycle(tuple(good[:-1] + [(good[-1][0], 2)])))
    swapped = good[:]
    swapped[1], swapped[2] = swapped[2], swapped[1]
    assert not verify_prism_cycle(g, PrismHamCycle(tuple(swapped)))


def test_json_round_trips():
    h = EvenCactus(cycles=[[0, 1, 2, 3]], paths=[[0, 4]])
    assert EvenCactus.from_json(h.to_json()) == h
    c = PrismHamCycle(((0, 0), (0, 1)))
    assert PrismHamCycle.from_json(c.to_json()) == c


@given(st.integers(0, 2**32))
@settings(max_examples=200, deadline=None)
def test_random_cacti_splice_and_verify(seed):
    g, h = random_even_cactus(seed)
    assert validate_even_cactus(g, h)
    merges = []

    def check(covered, cycle):
        # every intermediate cycle spans exactly the prism over the covered blocks
        assert sorted(cycle) == sorted((v, lvl) for v in covered for lvl in (0, 1))
        merges.append(len(cycle))

    c = prism_ham_from_cactus(g, h, on_merge=check)
    assert verify_prism_cycle(g, c)
    assert _prism_ok(g, c)
    assert len(merges) == len(h.cycles) + len(h.paths) - 1


def test_block_primitives_carry_needed_vertical_edges():
    for seed in range(100):
        _, h = random_even_cactus(seed)
        for c in h.cycles:
            assert _vertical_edges(staircase_cycle(c)) == set(c)
        for p in h.paths:
            assert {p[0], p[-1]} <= _vertical_edges(path_loop(p))
