"""
Свидетели удаляемости, чередующие автоморфизмы, операции над свидетелями и кручение
"""
import pytest

from src.core import CoordSet, Finite, normalize, spec_disjoint, vertex
from src.core.constraints import AnyValue, InFiniteSet
from src.families.clique_chain import position_spec
from src.families.extended_star import ROOT, column_spec, column_transposition
from src.morphisms import Beta, Identity, Named, VertexMap, verify_iso_window
from src.selfcontain import (
    RemovableWitness,
    TwistVerdict,
    WellManneredWitness,
    compose_removable,
    disjoint_copies,
    is_twisted_vertex,
    reverse_witness,
    sewing_isomorphism,
    split_removable,
    standard_isomorphism,
    standard_isomorphism_fixing_first,
    torsion,
    transport_witness,
    verify_alternating,
    verify_family,
    verify_removable,
)
from src.services.errors import (
    FamilyMismatchError,
    NotInDomainError,
    PowerLimitError,
    WitnessVerificationError,
)
from tests.blueprints import torsion_fixture


@pytest.mark.parametrize("name", ["star", "chain"])
def test_alternating_families_verify(request, name):
    bundle = request.getfixturevalue(name)
    report = verify_family(bundle.alt, 6, 200)
    assert report.passed, report.summary()


def test_standard_isomorphism_realizes_star_removal(star):
    std = standard_isomorphism(star.alt)
    report = verify_iso_window(std, star.graph, std.target, 500)
    assert report.passed
    assert std(vertex("a", 1, 2)) == vertex("a", 1, 3)
    assert std(vertex("a", 2, 9)) == vertex("a", 2, 25)
    assert std(vertex("a", 1, 6)) == vertex("a", 1, 6)
    with pytest.raises(NotInDomainError):
        std.backward(vertex("a", 1, 2))


def test_fixed_first_isomorphism_fixes_f_of_h(star, chain):
    for bundle in (star, chain):
        fstar = standard_isomorphism_fixing_first(bundle.alt)
        first = bundle.alt.copy(1)
        moved = [v for v in bundle.graph.vertices(300) if first.contains(v) and fstar.forward(v) != v]
        assert moved == []
        assert verify_iso_window(fstar, bundle.graph, fstar.target, 200).passed
    assert standard_isomorphism_fixing_first(star.alt)(vertex("a", 1, 2)) == vertex("a", 1, 5)
    assert standard_isomorphism_fixing_first(chain.alt)(vertex("k", 4, 1)) == vertex("k", 4, 3)


@pytest.mark.parametrize("name", ["star", "chain"])
def test_disjoint_copies_are_exactly_disjoint(request, name):
    bundle = request.getfixturevalue(name)
    copies = disjoint_copies(bundle.witness("H"), 8)
    assert len(copies) == 8
    for a in range(8):
        for b in range(a + 1, 8):
            assert spec_disjoint(copies[a], copies[b]).kind == "disjoint"


def test_disjoint_copies_limit(star):
    with pytest.raises(PowerLimitError):
        disjoint_copies(star.witness("H"), 65)


def test_star_copies_are_prime_columns(star):
    copies = disjoint_copies(star.witness("H"), 3)
    assert copies == [column_spec(2), column_spec(3), column_spec(5)]


def test_compose_removable_on_the_star(star):
    w_H = star.witness("H")
    w_Q = transport_witness(w_H, w_H)
    assert w_Q.H == column_spec(3)
    union = compose_removable(w_H, w_Q, n=500)
    assert normalize(union.H).boxes == (column_spec(2), column_spec(3))
    assert union.f(vertex("a", 1, 2)) == vertex("a", 1, 5)
    assert verify_removable(union, 500).passed


def test_compose_requires_witness_over_the_remainder(star):
    w_H = star.witness("H")
    with pytest.raises(FamilyMismatchError):
        compose_removable(w_H, w_H)


def test_compose_with_empty_q_returns_p(star):
    w_H = star.witness("H")
    empty = RemovableWitness("empty", w_H.remainder, Finite(frozenset()), Identity(), star.env)
    assert compose_removable(w_H, empty) is w_H


def test_split_removable_recovers_q(star):
    w_H = star.witness("H")
    union = compose_removable(w_H, transport_witness(w_H, w_H))
    split = split_removable(union, w_H, n=300)
    assert normalize(split.H).boxes == (column_spec(3),)
    assert split.f(vertex("a", 1, 3)) == vertex("a", 1, 5)


@pytest.mark.parametrize("name", ["star", "chain"])
def test_shipped_witnesses_are_well_mannered(request, name):
    bundle = request.getfixturevalue(name)
    report = verify_alternating(bundle.well_mannered_witness("H"), 200)
    assert report.passed, report.summary()


def test_wrong_alternating_automorphism_fails(chain):
    wrong = WellManneredWitness(chain.witness("H"), Beta(0, 2))
    report = verify_alternating(wrong, 100)
    assert not report.passed
    assert report.violation_counts["alternation"] > 0
    with pytest.raises(WitnessVerificationError):
        reverse_witness(wrong, 100)


def test_reverse_witness_removes_f_of_h(chain):
    reverse = reverse_witness(chain.well_mannered_witness("H"), 150)
    assert reverse.H == position_spec(2)
    assert reverse.f(vertex("k", 2, 2)) == vertex("k", 2, 1)
    assert reverse.f(vertex("k", 2, 1)) == vertex("k", 2, 3)
    assert verify_removable(reverse, 200).passed


def test_reversing_twice_gives_back_the_shift(chain):
    once = reverse_witness(chain.well_mannered_witness("H"), 150)
    twice = reverse_witness(WellManneredWitness(once, Beta(0, 1)), 150)
    f = chain.env.names["f"]
    H = position_spec(1)
    for v in chain.graph.vertices(1000):
        assert twice.f.forward(v) == f.forward(v)
        assert twice.H.contains(v) == H.contains(v)
    assert verify_removable(twice, 200).passed


def _clique_swap(graph):
    """Перестановка первых двух клик: k(1,m) <-> k(2,m)"""
    def swap(v):
        if v.tag == "k" and v.coords[0] in (1, 2):
            return vertex("k", 3 - v.coords[0], v.coords[1])
        return v

    support = CoordSet("k", (InFiniteSet(frozenset({1, 2})), AnyValue()))
    return VertexMap(swap, swap, graph, graph, support, "swap")


def test_swapping_first_two_cliques_is_not_alternating(chain):
    env = chain.env.with_names(swap=_clique_swap(chain.graph))
    witness = RemovableWitness("H", chain.graph, position_spec(1), Named("f"), env)
    report = verify_alternating(WellManneredWitness(witness, Named("swap")), 100)
    assert not report.passed
    assert report.violation_counts["adjacency"] > 0
    assert report.violation_counts["alternation"] > 0
    with pytest.raises(WitnessVerificationError):
        reverse_witness(WellManneredWitness(witness, Named("swap")), 100)


def test_sewing_isomorphism(star):
    w_H = star.witness("H")
    alpha = column_transposition(6, 10, w_H.remainder)
    sewing = sewing_isomorphism(w_H, alpha, 200)
    assert sewing.forward(vertex("a", 1, 3)) == vertex("a", 1, 2)
    assert sewing.forward(vertex("a", 2, 10)) == vertex("a", 2, 6)
    assert sewing.target is star.graph


@pytest.mark.parametrize("name", ["star", "chain"])
def test_torsion_of_shipped_witnesses_is_empty(request, name):
    bundle = request.getfixturevalue(name)
    H = bundle.witness("H")
    assert torsion(H, bundle.catalogue, 200) == Finite(frozenset())


def test_catalogue_entries_verify(chain):
    reports = chain.catalogue.verify(150)
    assert len(reports) == 4
    assert all(report.passed for report in reports)


def test_twisted_vertex_verdicts(star):
    H = star.witness("H")
    assert is_twisted_vertex(vertex("a", 1, 4), H, star.catalogue) is TwistVerdict.NOT_TWISTED
    assert is_twisted_vertex(ROOT, H, star.catalogue) is TwistVerdict.UNKNOWN


def test_empty_catalogue_for_the_remainder_twists_vertices():
    H, catalogue = torsion_fixture()
    assert torsion(H, catalogue, 10) == Finite(frozenset({vertex("r", 1)}))
    assert torsion(H, catalogue, 0) == Finite(frozenset())


def test_torsion_rejects_foreign_catalogue(star, chain):
    with pytest.raises(FamilyMismatchError):
        torsion(star.witness("H"), chain.catalogue, 10)
