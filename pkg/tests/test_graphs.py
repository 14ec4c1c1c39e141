import math

import pytest

from packing_chromatic import (
    FamilySpec,
    GraphError,
    VertexLabel,
    all_pairs_distances,
    build_graph,
    components,
    generate,
    graph_from_dict,
    graph_to_dict,
    induced_subgraph,
    stats,
    to_dot,
)

INF = math.inf


def _profile(g):
    dm = all_pairs_distances(g)
    degs = sorted(len(a) for a in g.adj)
    dists = sorted(d for row in dm.rows for d in row)
    return degs, dists


# -- construction -----------------------------------------------------------

def test_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 3 and g.edge_count == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert [lab.render() for lab in g.labels] == ["u_1", "u_2", "u_3"]


def test_single_vertex():
    g = build_graph(1, [])
    assert g.n == 1 and g.edge_count == 0


def test_duplicate_edge_rejected():
    with pytest.raises(GraphError, match="duplicate edge"):
        build_graph(4, [(0, 1), (0, 1)])
    with pytest.raises(GraphError, match="duplicate edge"):
        build_graph(4, [(0, 1), (1, 0)])


def test_loop_rejected():
    with pytest.raises(GraphError, match="loop"):
        build_graph(3, [(1, 1)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError, match="out of range"):
        build_graph(3, [(0, 3)])


def test_duplicate_label_rejected():
    labs = [VertexLabel.original(1), VertexLabel.original(1)]
    with pytest.raises(GraphError, match="duplicate label"):
        build_graph(2, [(0, 1)], labs)


def test_edge_count_is_half_degree_sum():
    g = generate(FamilySpec.petersen())[0]
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count


# -- labels -------------------------------------------------------------------

def test_label_rendering():
    assert VertexLabel.original(1).render() == "u_1"
    assert VertexLabel.subdivided_edge(2, 1, 3).render() == "u_{1,2}^3"
    assert VertexLabel.copy_vertex(1, 2).render() == "v_{1,2}"
    assert VertexLabel.copy_edge_subdivided(1, 3, 2, 1).render() == "v_{1,2,3}^1"
    assert VertexLabel.connector(2, 1, 1, 1).render() == "s_{2,1,1}^1"
    assert VertexLabel.split_copy(4).render() == "v_4"
    assert VertexLabel.split_connector(1, 2, 1).render() == "s_{1,2}^1"


def test_label_canonicalization():
    assert VertexLabel.subdivided_edge(3, 1, 2) == VertexLabel.subdivided_edge(1, 3, 2)
    with pytest.raises(GraphError):
        VertexLabel.subdivided_edge(1, 1, 1)
    with pytest.raises(GraphError):
        VertexLabel("nope", (1,))


# -- distances ----------------------------------------------------------------

def test_c6_opposite_distance():
    g = generate(FamilySpec.cycle(6))[0]
    assert all_pairs_distances(g).dist(0, 3) == 3


def test_fssd_k3_original_distance():
    g = generate(FamilySpec.fssd(FamilySpec.complete(3), 2))[0]
    assert all_pairs_distances(g).dist(0, 1) == 2


def test_disconnected_distance_is_infinite():
    g = build_graph(4, [(0, 1), (2, 3)])
    dm = all_pairs_distances(g)
    assert dm.dist(0, 2) == INF
    assert dm.dist(1, 3) == INF
    assert len(components(g)) == 2


def test_distance_matrix_symmetric_zero_diagonal():
    g = generate(FamilySpec.fssd(FamilySpec.cycle(5), 2))[0]
    dm = all_pairs_distances(g)
    for u in range(g.n):
        assert dm.dist(u, u) == 0
        for v in range(g.n):
            assert dm.dist(u, v) == dm.dist(v, u)


# -- stats --------------------------------------------------------------------

def test_stats_k5():
    st = stats(generate(FamilySpec.complete(5))[0])
    assert st.clique_number == 5
    assert st.min_degree == 4
    assert st.diameter == 1


def test_stats_c7():
    st = stats(generate(FamilySpec.cycle(7))[0])
    assert st.clique_number == 2
    assert not st.is_bipartite
    assert st.diameter == 3


def test_fssd_k3_is_a_six_cycle():
    # subdividing each K_3 edge once yields a graph indistinguishable from C_6
    g = generate(FamilySpec.fssd(FamilySpec.complete(3), 1))[0]
    st = stats(g)
    assert st.is_bipartite and st.diameter == 3
    assert _profile(g) == _profile(generate(FamilySpec.cycle(6))[0])


@pytest.mark.parametrize("n", range(1, 9))
def test_clique_number_of_completes(n):
    assert stats(generate(FamilySpec.complete(n))[0]).clique_number == n


def test_clique_number_bipartite_at_most_two():
    st = stats(generate(FamilySpec.complete_bipartite(3, 4))[0])
    assert st.is_bipartite and st.clique_number == 2


def test_stats_disconnected():
    st = stats(build_graph(3, [(0, 1)]))
    assert not st.is_connected and st.diameter == INF


# -- induced subgraphs ----------------------------------------------------------

def test_induced_k4_to_k3():
    g = generate(FamilySpec.complete(4))[0]
    sub, id_map = induced_subgraph(g, [0, 1, 3])
    assert sub.n == 3 and sub.edge_count == 3
    assert id_map == {0: 0, 1: 1, 3: 2}
    assert sub.labels[2] == VertexLabel.original(4)  # labels preserved


def test_induced_alternate_c6_is_edgeless():
    g = generate(FamilySpec.cycle(6))[0]
    sub, _ = induced_subgraph(g, [0, 2, 4])
    assert sub.n == 3 and sub.edge_count == 0


def test_induced_fssd_c5_ring_is_c10():
    g = generate(FamilySpec.fssd(FamilySpec.cycle(5), 1))[0]
    sub, _ = induced_subgraph(g, range(10))  # originals plus one vertex per edge
    assert _profile(sub) == _profile(generate(FamilySpec.cycle(10))[0])


def test_induced_empty_keep_rejected():
    with pytest.raises(GraphError):
        induced_subgraph(generate(FamilySpec.path(3))[0], [])


def test_induced_monotone_properties():
    g = generate(FamilySpec.fssd(FamilySpec.complete(4), 1))[0]
    dm = all_pairs_distances(g)
    sub, id_map = induced_subgraph(g, [0, 1, 2, 4, 5])
    sdm = all_pairs_distances(sub)
    assert stats(sub).clique_number <= stats(g).clique_number
    for old_u, new_u in id_map.items():
        for old_v, new_v in id_map.items():
            assert sdm.dist(new_u, new_v) >= dm.dist(old_u, old_v)


# -- serialization --------------------------------------------------------------

@pytest.mark.parametrize(
    "spec_text",
    ["complete:4", "cycle:7", "petersen", "fssd(corona(complete:3,path:2),m=2)"],
)
def test_json_round_trip(spec_text):
    from packing_chromatic import parse_spec

    g = generate(parse_spec(spec_text))[0]
    again = graph_from_dict(graph_to_dict(g))
    assert again == g


def test_dot_export():
    g = generate(FamilySpec.fssd(FamilySpec.complete(3), 1))[0]
    dot = to_dot(g)
    assert dot.startswith('graph "fssd(complete:3,m=1)"')
    assert 'label="u_1"' in dot
    assert 'label="u_{1,2}^1"' in dot
    assert "0 -- 3;" in dot
