import random

import pytest

from groupvc import (
    Subset,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    translate_family,
    vc_dim,
)
from groupvc.cayley import (
    Digraph,
    cayley_digraph,
    cayley_sum_graph,
    closed_neighborhood_family,
    neighborhood_family,
)


def test_identity_generator_gives_loops():
    g = make_cyclic(5)
    d = cayley_digraph(g, Subset.from_elements(5, [g.identity]))
    assert [sorted(nb) for nb in d.adjacency] == [[v] for v in range(5)]


def test_c4_shift_cycle():
    d = cayley_digraph(make_cyclic(4), Subset.from_elements(4, [1]))
    assert [sorted(nb) for nb in d.adjacency] == [[1], [2], [3], [0]]


def test_out_neighborhood_is_right_multiplication():
    d = cayley_digraph(make_cyclic(5), Subset.from_elements(5, [1, 4]))
    assert sorted(d.out_neighborhood(0)) == [1, 4]


def test_out_degree_equals_generator_size():
    rnd = random.Random(31)
    for _ in range(15):
        g = make_dihedral(rnd.randint(3, 8))
        a = Subset(rnd.getrandbits(g.order), g.order)
        d = cayley_digraph(g, a)
        assert all(len(nb) == len(a) for nb in d.adjacency)


def test_neighborhood_family_examples():
    loops = Digraph(3, [Subset.from_elements(3, [v]) for v in range(3)])
    assert neighborhood_family(loops).member_sets() == frozenset({1, 2, 4})

    edgeless = Digraph(3, [Subset.empty(3)] * 3)
    assert neighborhood_family(edgeless).member_sets() == frozenset({0})

    cycle = cayley_digraph(make_cyclic(4), Subset.from_elements(4, [1]))
    assert neighborhood_family(cycle).member_sets() == frozenset(
        {0b0010, 0b0100, 0b1000, 0b0001}
    )


def test_closed_neighborhood_examples():
    edgeless = Digraph(3, [Subset.empty(3)] * 3)
    assert closed_neighborhood_family(edgeless).member_sets() == frozenset({1, 2, 4})

    loops = Digraph(3, [Subset.from_elements(3, [v]) for v in range(3)])
    assert closed_neighborhood_family(loops).member_sets() == frozenset({1, 2, 4})

    cycle = cayley_digraph(make_cyclic(4), Subset.from_elements(4, [1]))
    assert closed_neighborhood_family(cycle).member_sets() == frozenset(
        {0b0011, 0b0110, 0b1100, 0b1001}
    )


def test_neighborhoods_equal_translates():
    # N_Gamma = T_A as sets of member sets, on random instances
    rnd = random.Random(8)
    for _ in range(40):
        kind = rnd.choice("CDP")
        if kind == "C":
            g = make_cyclic(rnd.randint(2, 64))
        elif kind == "D":
            g = make_dihedral(rnd.randint(3, 32))
        else:
            g = make_direct_product(
                make_cyclic(rnd.randint(2, 8)), make_cyclic(rnd.randint(2, 8))
            )
        a = Subset(rnd.getrandbits(g.order), g.order)
        fam_graph = neighborhood_family(cayley_digraph(g, a))
        fam_translates = translate_family(g, a)
        assert fam_graph.member_sets() == fam_translates.member_sets()


def test_sum_graph_examples():
    c4 = make_cyclic(4)
    assert cayley_sum_graph(c4, Subset.empty(4)).adjacency == [Subset.empty(4)] * 4

    d = cayley_sum_graph(c4, Subset.from_elements(4, [0]))
    assert [sorted(nb) for nb in d.adjacency] == [[0], [3], [2], [1]]

    full = cayley_sum_graph(c4, Subset.full(4))
    assert all(len(nb) == 4 for nb in full.adjacency)


def test_sum_graph_is_symmetric():
    rnd = random.Random(12)
    for _ in range(10):
        n = rnd.randint(2, 32)
        g = make_cyclic(n)
        d = cayley_sum_graph(g, Subset(rnd.getrandbits(n), n))
        for x in range(n):
            for y in d.adjacency[x]:
                assert x in d.adjacency[y]


def test_sum_graph_rejects_non_abelian():
    g = make_dihedral(3)
    with pytest.raises(ValueError):
        cayley_sum_graph(g, Subset.from_elements(6, [0]))


def test_sum_graph_vc_dimension_matches_translates():
    rnd = random.Random(3)
    for _ in range(12):
        n = rnd.randint(2, 40)
        g = make_cyclic(n)
        a = Subset(rnd.getrandbits(n), n)
        d_sum = vc_dim(neighborhood_family(cayley_sum_graph(g, a)))
        d_tr = vc_dim(translate_family(g, a))
        assert d_sum == d_tr


def test_closed_neighborhood_vc_measured_not_asserted():
    # Open question: the translate-family theorem is only expected to carry
    # over to closed neighborhoods, so we record the measurement and check
    # nothing beyond the universal counting bound.
    rnd = random.Random(61)
    for _ in range(15):
        n = rnd.randint(2, 48)
        g = make_cyclic(n)
        a = Subset(rnd.getrandbits(n), n)
        closed = vc_dim(closed_neighborhood_family(cayley_digraph(g, a)))
        assert 0 <= closed <= n.bit_length() - 1


def test_adjacency_text_export():
    d = cayley_digraph(make_cyclic(3), Subset.from_elements(3, [1, 2]))
    assert d.to_adjacency_text() == "0: 1 2\n1: 0 2\n2: 0 1\n"
    empty = Digraph(2, [Subset.empty(2)] * 2)
    assert empty.to_adjacency_text() == "0:\n1:\n"
