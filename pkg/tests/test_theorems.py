import pytest

from chromstab.families import complete, complete_multipartite, cycle, graph_x, path, petersen
from chromstab.graph import Graph, add_edges, complement, disjoint_union
from chromstab.graph6 import parse_graph6
from chromstab.theorems import (
    G12_LABELS,
    PreconditionError,
    build_g14,
    check_disconnected_sum2,
    check_es1_equivalence,
    check_extremal_necessary,
    check_ng3_conditions,
    check_prop1_claims,
    check_regular_characterization,
    check_sufficiency_r3,
    check_upper_bound,
    run_check,
    upper_bound,
    verify_g14_claims,
)

from fixtures import g12_candidate
from oracles import es_by_definition


def c5_pendant():
    return add_edges(disjoint_union(cycle(5), Graph.empty(1)), [(0, 5)])


@pytest.mark.parametrize(
    "n, r, bound",
    [(5, 3, 2), (6, 3, 4), (6, 2, 9), (8, 3, 6), (14, 5, 6), (7, 2, 12), (4, 4, 1)],
)
def test_upper_bound_formula(n, r, bound):
    assert upper_bound(n, r) == bound


def test_es1_equivalence_examples():
    for g, truth in [(cycle(5), True), (graph_x(), False), (complete_multipartite(3, 3), False)]:
        rep = check_es1_equivalence(g)
        assert rep.crosscheck is True
        assert [c.holds for c in rep.conditions][:3] == [truth] * 3
    with pytest.raises(Exception):
        check_es1_equivalence(Graph.empty(3))


def test_regular_characterization_examples():
    c7 = check_regular_characterization(cycle(7))
    assert c7.condition("es=1").holds and c7.overall and c7.crosscheck
    c6 = check_regular_characterization(cycle(6))
    assert c6.condition("es=1").witness["es"] == 6
    assert c6.overall is False and c6.crosscheck
    pet = check_regular_characterization(petersen())
    assert pet.overall is False and pet.condition("es=1").holds is False and pet.crosscheck
    assert check_regular_characterization(complete(2)).overall
    assert not check_regular_characterization(path(3)).applicable
    assert not check_regular_characterization(graph_x()).applicable  # degree 6


def test_prop1():
    rep = check_prop1_claims()
    assert rep.status == "pass"
    assert all(c.holds for c in rep.conditions)
    assert rep.condition("es=2").witness["deleted_edges"] == [["w", "v1"], ["w", "u6"]]


@pytest.mark.parametrize(
    "g, cond_i, total",
    [
        (disjoint_union(cycle(5), complete(2)), True, 2),
        (disjoint_union(complete(3), complete(3)), False, 11),
        (disjoint_union(complete(2), complete(2)), False, 6),
    ],
)
def test_disconnected_examples(g, cond_i, total):
    rep = check_disconnected_sum2(g)
    assert rep.conditions[0].holds is cond_i
    assert es_by_definition(g) + es_by_definition(complement(g)) == total
    assert rep.condition("direct: es(G)+es(complement)=2").witness["sum"] == total
    assert rep.crosscheck


def test_disconnected_rejects_connected():
    with pytest.raises(PreconditionError):
        check_disconnected_sum2(cycle(5))
    assert run_check("disconnected", cycle(5)).status == "not-applicable"


@pytest.mark.parametrize(
    "g, es_pair",
    [(cycle(5), (1, 1)), (c5_pendant(), (1, 2)), (complete_multipartite(1, 1, 3), (1, 1))],
)
def test_ng3_examples(g, es_pair):
    assert (es_by_definition(g), es_by_definition(complement(g))) == es_pair
    rep = check_ng3_conditions(g)
    direct = rep.condition("direct: es(G)+es(complement)=2")
    assert direct.witness == {"es": es_pair[0], "es_complement": es_pair[1]}
    assert rep.crosscheck
    assert rep.overall == (sum(es_pair) == 2)


def test_ng3_preconditions():
    with pytest.raises(PreconditionError):
        check_ng3_conditions(complete(4))
    with pytest.raises(PreconditionError):
        check_ng3_conditions(disjoint_union(cycle(5), complete(1)))
    with pytest.raises(ValueError):
        check_ng3_conditions(cycle(5), clause_iv="sometimes")


def test_ng3_literal_clause_iv_counterexample():
    # 6 vertices, edges 03 04 05 14 15 25 34 35: es(G)=es(complement)=1, yet the
    # complement colouring {0,3,5},{1,4},{2} has neighbour 2 of degree 1.
    g = parse_graph6("ECvo")
    assert g.edges() == [(0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 5), (3, 4), (3, 5)]
    assert es_by_definition(g) == 1 and es_by_definition(complement(g)) == 1
    literal = check_ng3_conditions(g, clause_iv="forall")
    iv = literal.condition("(iv) even-order clause")
    assert iv.holds is False
    assert iv.witness["class"] == [0, 3, 5] and iv.witness["vertex"] == 2 and iv.witness["degree"] == 1
    assert literal.crosscheck is False
    relaxed = check_ng3_conditions(g, clause_iv="exists")
    assert relaxed.overall and relaxed.crosscheck


def test_extremal_examples():
    for n in (3, 5, 7):
        g = complete_multipartite(n // 2, n - n // 2)
        assert es_by_definition(g) == upper_bound(n, 2)
        rep = check_extremal_necessary(g)
        assert [c.label for c in rep.conditions] == ["(i)(1)", "(i)(2)", "(i)(3)"]
        assert rep.overall
    k222 = check_extremal_necessary(complete_multipartite(2, 2, 2))
    assert [c.label for c in k222.conditions] == ["(ii)(1)", "(ii)(2)"] and k222.overall
    c5 = check_extremal_necessary(cycle(5))
    assert not c5.applicable


def test_sufficiency_examples():
    k122 = check_sufficiency_r3(complete_multipartite(1, 2, 2))
    assert k122.overall and k122.condition("es equals the bound").witness == {"es": 2, "bound": 2}
    c5 = check_sufficiency_r3(cycle(5))
    assert c5.overall is False and c5.crosscheck
    assert "(2)" in c5.conditions[0].witness["counterexample"]
    k233 = check_sufficiency_r3(complete_multipartite(2, 3, 3))
    assert k233.overall and k233.condition("es equals the bound").witness == {"es": 6, "bound": 6}
    with pytest.raises(PreconditionError):
        check_sufficiency_r3(complete_multipartite(2, 2, 2))
    with pytest.raises(PreconditionError):
        check_sufficiency_r3(complete_multipartite(2, 3))


def test_upper_bound_examples():
    c5 = check_upper_bound(cycle(5)).conditions[0].witness
    assert (c5["bound"], c5["es"], c5["tight"]) == (2, 1, False)
    for g, bound in [(complete_multipartite(2, 2, 2), 4), (complete_multipartite(3, 3), 9)]:
        w = check_upper_bound(g).conditions[0].witness
        assert (w["bound"], w["es"], w["tight"]) == (bound, bound, True)
    assert not check_upper_bound(Graph.empty(2)).applicable


def test_g14_candidate_passes_everything():
    rep = verify_g14_claims(g12_candidate(), exact=True)
    assert [c.holds for c in rep.conditions] == [True] * 5
    assert rep.condition("(e) es <= 4 < bound").witness == {
        "es": 4,
        "bound": 6,
        "deleted_edges": [["a", "w"], ["c", "v"], ["2", "x"], ["3", "y"]],
    }
    five = rep.condition("(b) chi=5 with the unique stated 5-coloring").witness["five_colorings"]
    assert five == [[["a", "b", "c"], ["u", "v", "w"], ["1", "2", "3"], ["x", "y", "z"], ["u0", "v0"]]]


def test_g14_relabelled_candidate():
    g = g12_candidate()
    order = list(reversed(range(12)))
    relabelled = Graph.from_edges(12, [(order[u], order[v]) for u, v in g.edges()])
    labeling = {name: order[i] for i, name in enumerate(G12_LABELS)}
    assert verify_g14_claims(relabelled, labeling).overall


def test_g14_rejects_complete_graph():
    rep = verify_g14_claims(complete(12))
    a = rep.condition("(a) independent sets of size >= 3")
    assert a.holds is False
    assert ["a", "b", "c"] in a.witness["missing"] and a.witness["unexpected"] == []
    assert rep.condition("(b) chi=5 with the unique stated 5-coloring").witness["chi"] == 13
    assert rep.status == "fail"


def test_g14_rejects_empty_graph():
    rep = verify_g14_claims(Graph.empty(12))
    b = rep.condition("(b) chi=5 with the unique stated 5-coloring")
    assert b.holds is False and b.witness["chi"] == 2
    assert rep.condition("(a) independent sets of size >= 3").holds is False


def test_g14_preconditions():
    with pytest.raises(PreconditionError):
        build_g14(complete(11), {s: i for i, s in enumerate(G12_LABELS[:11])})
    with pytest.raises(PreconditionError):
        build_g14(complete(12), {s: 0 for s in G12_LABELS})


def test_run_check_dispatch():
    assert run_check("prop1", None).status == "pass"
    assert run_check("ng3", complete(4)).status == "not-applicable"
    with pytest.raises(KeyError):
        run_check("nope", cycle(5))
    rep = run_check("upper-bound", cycle(5)).as_dict()
    assert set(rep) == {"theorem", "status", "applicable", "conditions", "overall", "crosscheck", "notes"}
