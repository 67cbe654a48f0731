import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jrainbow.colouring import Colouring, canonical_relabel, is_j_feasible, is_j_star_feasible
from jrainbow.errors import BudgetExceeded, ConnectivityError, ValidationError
from jrainbow.graph import (
    CompleteGraph,
    CompleteMultipartiteGraph,
    CycleGraph,
    Graph,
    PathGraph,
    StarGraph,
    WheelGraph,
    min_degree,
)
from jrainbow.solver import (
    Mode,
    brute_force,
    cross_check,
    find_colouring,
    j_number,
    upper_bound,
)

from .corpus import fig1, naive_per_k, random_connected_graph


def test_find_colouring_examples():
    assert find_colouring(CycleGraph(5).generate(), 3, Mode.J) is None
    assert find_colouring(CycleGraph(6).generate(), 3, Mode.J).colors == (1, 2, 3, 1, 2, 3)
    assert find_colouring(CycleGraph(9).generate(), 2, Mode.J) is None


def test_c9_per_k_not_monotone():
    g = CycleGraph(9).generate()
    expected = naive_per_k(g, max_k=3)
    assert expected == {1: False, 2: False, 3: True}
    out = j_number(g, Mode.J, per_k=True)
    assert out.per_k == expected
    assert out.k == 3


def test_find_colouring_errors():
    with pytest.raises(ConnectivityError):
        find_colouring(Graph.from_edges(4, [(0, 1), (2, 3)]), 2)
    with pytest.raises(ValidationError, match="1..3"):
        find_colouring(CycleGraph(3).generate(), 4)
    with pytest.raises(ValidationError):
        find_colouring(CycleGraph(3).generate(), 0)


def test_j_number_examples():
    out = j_number(WheelGraph(9).generate(), Mode.J)
    assert out.k == 4
    pattern = (1, 2, 3) * 3 + (4,)
    assert canonical_relabel(out.certificate.colors) == canonical_relabel(pattern)

    assert not j_number(CycleGraph(7).generate(), Mode.J).colourable

    out = j_number(PathGraph(6).generate(), Mode.JSTAR)
    assert out.k == 3
    assert canonical_relabel(out.certificate.colors) == (1, 2, 3, 1, 2, 3)


def test_j_number_rejects_disconnected():
    with pytest.raises(ConnectivityError):
        j_number(Graph.from_edges(3, [(0, 1)]))


def test_brute_force_examples():
    assert brute_force(CompleteGraph(3).generate(), 3, Mode.J).colors == (1, 2, 3)
    c5 = CycleGraph(5).generate()
    for k in (1, 2, 3):
        assert brute_force(c5, k, Mode.J) is None
    k222 = CompleteMultipartiteGraph((2, 2, 2)).generate()
    assert brute_force(k222, 4, Mode.J) is None
    hit = brute_force(k222, 3, Mode.J)
    assert hit.colors[0] == hit.colors[1] and hit.colors[2] == hit.colors[3] and hit.colors[4] == hit.colors[5]


def test_brute_force_budget():
    g = CycleGraph(12).generate()
    with pytest.raises(BudgetExceeded, match=r"3\^12 = 531441"):
        brute_force(g, 3, Mode.J, budget=1000)
    with pytest.raises(BudgetExceeded):
        cross_check(g, Mode.J, budget=1000)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("JRAINBOW_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        brute_force(CycleGraph(4).generate(), 2)


def test_cross_check_examples():
    report = cross_check(CycleGraph(9).generate(), Mode.J)
    assert report.match
    assert report.oracle_per_k == {1: False, 2: False, 3: True}

    report = cross_check(fig1(), Mode.J)
    assert report.match
    assert report.solver.k == report.oracle_k == 4 == min_degree(fig1()) + 1

    report = cross_check(CompleteGraph(5).generate(), Mode.J)
    assert report.match and report.solver.k == 5


def test_boundary_graphs():
    k1 = Graph.from_edges(1, [])
    assert j_number(k1, Mode.J).k == 1
    assert j_number(k1, Mode.JSTAR).k == 1
    k2 = CompleteGraph(2).generate()
    assert j_number(k2, Mode.J).k == 2
    assert j_number(k2, Mode.JSTAR).k == 2


@pytest.mark.parametrize("n", range(2, 9))
def test_star_j_star_is_n(n):
    g = StarGraph(n).generate()
    assert j_number(g, Mode.JSTAR).k == n
    assert j_number(g, Mode.J).k == 2


def test_jstar_bound_uses_internal_vertices():
    assert upper_bound(PathGraph(6).generate(), Mode.JSTAR) == 3
    assert upper_bound(PathGraph(6).generate(), Mode.J) == 2
    assert upper_bound(StarGraph(5).generate(), Mode.JSTAR) == 5


def test_workers_do_not_change_outcome():
    for g in (WheelGraph(9).generate(), fig1(), CycleGraph(10).generate()):
        assert j_number(g, workers=3) == j_number(g, per_k=False)


def test_outcome_json_schema():
    data = j_number(CycleGraph(9).generate(), Mode.J, per_k=True).to_json()
    assert data["mode"] == "J"
    assert data["status"] == "colourable"
    assert data["k"] == 3
    assert data["certificate"] == [1, 2, 3] * 3
    assert data["per_k"] == [{"k": 1, "feasible": False}, {"k": 2, "feasible": False}, {"k": 3, "feasible": True}]
    assert data["delta_plus_one"] == 3
    data = j_number(CycleGraph(7).generate(), Mode.JSTAR).to_json()
    assert data["mode"] == "Jstar" and data["status"] == "not_colourable" and data["k"] is None


def test_mode_parse():
    assert Mode.parse("J") is Mode.J
    assert Mode.parse("Jstar") is Mode.JSTAR
    assert Mode.parse("J*") is Mode.JSTAR
    with pytest.raises(ValidationError):
        Mode.parse("K")


@st.composite
def connected_graphs(draw, max_n=7):
    import numpy as np

    seed = draw(st.integers(0, 2 ** 32 - 1))
    rng = np.random.default_rng(seed)
    n = draw(st.integers(1, max_n))
    return random_connected_graph(rng, n, draw(st.floats(0.0, 1.0)))


@settings(max_examples=120, deadline=None)
@given(g=connected_graphs(max_n=6), mode=st.sampled_from(list(Mode)))
def test_solver_matches_itertools_oracle(g, mode):
    out = j_number(g, mode, per_k=True)
    truth = naive_per_k(g, jstar=mode is Mode.JSTAR)
    best = max((k for k, ok in truth.items() if ok), default=None)
    assert out.k == best
    assert out.per_k == {k: truth[k] for k in out.per_k}
    # nothing feasible above the reported bound
    assert not any(ok for k, ok in truth.items() if k > out.bound)


@settings(max_examples=150, deadline=None)
@given(g=connected_graphs())
def test_solver_invariants(g):
    j = j_number(g, Mode.J)
    js = j_number(g, Mode.JSTAR)
    if j.colourable:
        assert j.k <= min_degree(g) + 1
        assert is_j_feasible(g, j.certificate)
        assert j.certificate.k == j.k
        if any(d == 1 for d in g.degrees):
            assert j.k <= 2
    if js.colourable:
        assert is_j_star_feasible(g, js.certificate)
    if j.colourable and js.colourable:
        assert j.k <= js.k
    assert j_number(g, Mode.J) == j


def test_connected_bipartite_graphs_have_j_at_least_two():
    for g in (PathGraph(7).generate(), CycleGraph(8).generate(), StarGraph(6).generate(),
              CompleteMultipartiteGraph((3, 4)).generate()):
        assert j_number(g).k >= 2
