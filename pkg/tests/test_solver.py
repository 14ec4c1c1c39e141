import pytest

from packing_chromatic import (
    DecideTimeout,
    GraphError,
    SolveOptions,
    all_pairs_distances,
    brute_force_chi,
    build_graph,
    decide_k,
    generate,
    induced_subgraph,
    packing_chromatic_number,
    parse_spec,
    trivial_lower_bound,
    verify,
)
from packing_chromatic.families import FamilySpec, fssd, random_connected_graph


def _graph(text):
    return generate(parse_spec(text))[0]


def _chi(g, **kw):
    res = packing_chromatic_number(g, SolveOptions(**kw))
    assert res.status == "exact"
    return res.chi


# -- decide_k ------------------------------------------------------------------

def test_triangle_k2_infeasible():
    g = _graph("cycle:3")
    assert decide_k(g, all_pairs_distances(g), 2) is None


def test_c4_k3_feasible():
    g = _graph("cycle:4")
    col = decide_k(g, all_pairs_distances(g), 3)
    assert col is not None and verify(g, col).valid and col.k <= 3


def test_fssd_k4_threshold():
    g = _graph("fssd(complete:4,m=1)")
    dm = all_pairs_distances(g)
    assert decide_k(g, dm, 4) is None
    col = decide_k(g, dm, 5)
    assert col is not None and verify(g, col, dm).valid


def test_decide_rejects_k_zero():
    g = _graph("path:2")
    with pytest.raises(GraphError):
        decide_k(g, all_pairs_distances(g), 0)


def test_decide_timeout_is_distinguished():
    g = _graph("fssd(corona(complete:4,path:2),m=1)")
    with pytest.raises(DecideTimeout):
        decide_k(g, all_pairs_distances(g), 6, SolveOptions(time_budget=1e-6))


# -- packing_chromatic_number -----------------------------------------------------

@pytest.mark.parametrize(
    "n,chi", [(3, 3), (4, 3), (5, 4), (6, 4), (7, 4), (8, 3), (9, 4), (10, 4), (12, 3)]
)
def test_cycle_values(n, chi):
    assert _chi(_graph(f"cycle:{n}")) == chi


@pytest.mark.parametrize("text,chi", [
    ("fssd(complete:3,m=2)", 4),
    ("fssd(petersen,m=1)", 5),
    ("complete:6", 6),
    ("path:1", 1),
    ("star:7", 2),
])
def test_known_values(text, chi):
    assert _chi(_graph(text)) == chi


def test_witness_always_verifies():
    g = _graph("fssd(split(cycle:5),m=1)")
    res = packing_chromatic_number(g)
    assert verify(g, res.witness).valid
    assert res.witness.k == res.chi


def test_exactness_has_infeasibility_below():
    g = _graph("fssd(cycle:7,m=1)")
    res = packing_chromatic_number(g)
    assert res.chi == 4
    assert decide_k(g, all_pairs_distances(g), 3) is None


def test_disconnected_chi_is_component_max():
    # K_3 plus an isolated vertex plus a P_2
    g = build_graph(6, [(0, 1), (1, 2), (0, 2), (4, 5)])
    res = packing_chromatic_number(g)
    assert res.status == "exact" and res.chi == 3
    assert verify(g, res.witness).valid


def test_edgeless_graph():
    g = build_graph(4, [])
    assert _chi(g) == 1


def test_empty_graph_rejected():
    with pytest.raises(GraphError):
        packing_chromatic_number(build_graph(0, []))


def test_timeout_reports_bounds_and_valid_witness():
    g = _graph("fssd(corona(complete:4,path:2),m=1)")
    res = packing_chromatic_number(g, SolveOptions(time_budget=0.01))
    assert res.status == "timeout-with-bounds"
    lo, hi = res.bounds
    assert lo <= hi and res.chi is None
    assert verify(g, res.witness).valid and res.witness.k == hi


def test_k_upper_cap_limits_probing():
    g = _graph("fssd(complete:5,m=1)")  # chi = 6
    res = packing_chromatic_number(g, SolveOptions(k_upper_cap=4))
    assert res.status == "timeout-with-bounds"
    assert res.bounds[0] == 5  # 1..4 certified infeasible


def test_determinism_sequential():
    g = _graph("fssd(split(cycle:4),m=2)")
    r1 = packing_chromatic_number(g)
    r2 = packing_chromatic_number(g)
    assert r1.chi == r2.chi and r1.witness == r2.witness


@pytest.mark.parametrize("strategy", ["degree-desc", "eccentricity-asc", "input"])
def test_order_strategies_agree_on_chi(strategy):
    g = _graph("fssd(cycle:5,m=2)")
    assert _chi(g, order_strategy=strategy) == 4


def test_parallel_mode_same_chi():
    g = _graph("fssd(complete:4,m=1)")
    seq = packing_chromatic_number(g)
    par = packing_chromatic_number(g, SolveOptions(parallel=True))
    assert par.status == "exact" and par.chi == seq.chi
    assert verify(g, par.witness).valid


def test_trivial_lower_bound_cases():
    assert trivial_lower_bound(build_graph(3, [])) == 1
    assert trivial_lower_bound(_graph("path:3")) == 2  # chi(P_3) = 2: no triangle rule
    assert trivial_lower_bound(_graph("cycle:3")) == 3


# -- brute force oracle ------------------------------------------------------------

@pytest.mark.parametrize("text,chi", [
    ("path:2", 2),
    ("path:4", 3),
    ("fssd(complete:2,m=1)", 2),
    ("cycle:6", 4),
])
def test_brute_force_values(text, chi):
    assert brute_force_chi(_graph(text)) == chi


def test_brute_force_size_guard():
    with pytest.raises(GraphError, match="12"):
        brute_force_chi(_graph("fssd(cycle:5,m=2)"))


def test_brute_force_cap_too_small():
    with pytest.raises(GraphError, match="at most 3 colors"):
        brute_force_chi(_graph("complete:4"), cap=3)


def test_brute_force_handles_disconnected():
    g = build_graph(5, [(0, 1), (1, 2), (0, 2)])
    assert brute_force_chi(g) == 3


# -- solver vs oracle ---------------------------------------------------------------

def test_oracle_agreement_on_families():
    for text in ["path:5", "cycle:7", "complete:6", "star:5",
                 "fssd(complete:2,m=2)", "split(cycle:4)"]:
        g = _graph(text)
        assert _chi(g) == brute_force_chi(g), text


def test_oracle_agreement_on_random_sample():
    for seed in range(8):
        g = random_connected_graph(7, 0.35, seed)
        assert _chi(g) == brute_force_chi(g), g.name


def test_hereditary_on_induced_subgraphs():
    g = _graph("fssd(complete:3,m=2)")
    whole = _chi(g)
    for keep in ([0, 1, 2, 3, 4], [0, 3, 4, 5, 6, 7], list(range(7))):
        sub, _ = induced_subgraph(g, keep)
        assert _chi(sub) <= whole


@pytest.mark.parametrize("base", ["complete:2", "path:4", "cycle:5", "complete:3"])
def test_monotone_in_multiplicity(base):
    g = _graph(base)
    values = [_chi(fssd(g, m)) for m in (1, 2, 3)]
    assert values == sorted(values)
