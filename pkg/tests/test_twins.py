"""
Близнецы: построение G_i, вложения, сертификаты, изоморфизм схлопывания и обзор связности
"""
import pytest

from src.core import Connectivity, normalize, vertex
from src.core.constraints import AtLeast
from src.families import collapse_iso_extended_star
from src.families.clique_chain import position_spec
from src.families.extended_star import column_spec
from src.morphisms import verify_embedding_window, verify_iso_window
from src.services.errors import (
    CertificateInapplicableError,
    ContainmentError,
    PowerLimitError,
    WorkbenchError,
)
from src.twins import (
    CopyState,
    TwinWitness,
    certify_pairwise_distinct,
    connectivity_survey,
    deficiency_count,
    mutual_embeddings,
    ordinary_twin_witness,
    strong_twin,
    twin_family,
)
from tests.blueprints import two_rays_twin


def test_clique_chain_q_is_ordinary(chain):
    tw = chain.twin
    assert tw.ordinary is not None
    assert tw.ordinary.points == frozenset({vertex("k", 1, 1)})
    assert tw.q_status() == "Q finite"


def test_extended_star_q_is_infinite(star):
    tw = star.twin
    assert tw.ordinary is None
    assert tw.q_status() == "Q infinite"
    with pytest.raises(CertificateInapplicableError) as error:
        tw.require_ordinary()
    assert str(error.value) == "certificate inapplicable: Q infinite"


def test_twin_member_removes_shifted_copies(chain):
    entry = twin_family(chain.twin, 3)
    assert set(normalize(entry.removed).boxes) == {position_spec(m, AtLeast(2)) for m in (1, 2, 3)}
    assert not entry.graph.contains(vertex("k", 2, 3))
    assert entry.graph.contains(vertex("k", 1, 1))
    assert entry.graph.contains(vertex("k", 2, 4))
    assert entry.graph.family_id == "clique-chain/G3"


def test_twin_index_bounds(chain):
    with pytest.raises(WorkbenchError):
        twin_family(chain.twin, 0)
    with pytest.raises(PowerLimitError):
        twin_family(chain.twin, 65)


def test_p_must_lie_in_h(star):
    with pytest.raises(ContainmentError):
        TwinWitness(base=star.witness("H"), P=column_spec(3))


@pytest.mark.parametrize("i", range(1, 9))
def test_deficiency_count_equals_index(chain, i):
    count = deficiency_count(twin_family(chain.twin, i), chain.twin, 12)
    assert count.count == i
    assert count.mixed == []
    assert count.states[:i] == [CopyState.DEFICIENT] * i
    assert count.states[i:] == [CopyState.INTACT] * (12 - i)


def test_certificates_separate_the_first_five(chain):
    certificates = certify_pairwise_distinct(chain.twin, 5, 12)
    assert len(certificates) == 10
    assert all(c.verdict == "distinct" for c in certificates)
    assert all(c.counts == c.pair for c in certificates)


def test_small_scan_bound_is_inconclusive(chain):
    certificates = {c.pair: c for c in certify_pairwise_distinct(chain.twin, 3, 3)}
    assert certificates[(1, 2)].verdict == "distinct"
    assert certificates[(1, 3)].verdict == "inconclusive"
    assert certificates[(2, 3)].diagnostics == ["scan bound 3 does not exceed index 3"]


def test_certificate_refuses_infinite_q(star):
    with pytest.raises(CertificateInapplicableError):
        certify_pairwise_distinct(star.twin, 3, 12)


@pytest.mark.slow
def test_strong_twin_embeddings(chain):
    G1, up, down = strong_twin(chain.twin)
    assert verify_embedding_window(up, G1, chain.graph, 300).passed
    report = verify_embedding_window(down, chain.graph, G1, 300)
    assert report.passed
    assert report.proper_witness is not None


def test_ordinary_twin_witness(chain, star):
    m = ordinary_twin_witness(chain.twin)
    assert verify_iso_window(m, chain.graph, m.target, 200).passed
    with pytest.raises(CertificateInapplicableError):
        ordinary_twin_witness(star.twin)


@pytest.mark.slow
def test_mutual_embeddings(chain, star):
    for bundle in (chain, star):
        embeddings = mutual_embeddings(bundle.twin, 1, 3, 300)
        assert embeddings.there_report.passed
        assert embeddings.back_report.passed
        assert embeddings.there_report.proper_witness is not None
        assert embeddings.back_report.proper_witness is not None


def test_mutual_embeddings_need_distinct_indices(chain):
    with pytest.raises(WorkbenchError):
        mutual_embeddings(chain.twin, 2, 2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_extended_star_members_collapse_onto_the_first(star, k):
    m = collapse_iso_extended_star(k, star)
    report = verify_iso_window(m, m.source, m.target, 400)
    assert report.passed, report.summary()


def test_collapse_index_range(star):
    with pytest.raises(WorkbenchError):
        collapse_iso_extended_star(1, star)


def test_clique_chain_survey_is_connected(chain):
    entries = connectivity_survey(chain.twin, 8, 100)
    assert [e.index for e in entries] == list(range(1, 9))
    assert all(e.verdict is Connectivity.CONNECTED for e in entries)


def test_extended_star_survey_is_connected(star):
    entries = connectivity_survey(star.twin, 3, 60)
    assert all(e.verdict is Connectivity.CONNECTED for e in entries)


@pytest.mark.parametrize("name", ["star", "chain"])
def test_twin_members_are_nested(request, name):
    tw = request.getfixturevalue(name).twin
    parent = tw.graph.vertices(400)
    previous = None
    for i in range(1, 6):
        entry = twin_family(tw, i)
        if previous is not None:
            assert all(previous.graph.contains(v) for v in entry.graph.vertices(200))
            before = {v for v in parent if previous.removed.contains(v)}
            after = {v for v in parent if entry.removed.contains(v)}
            assert before < after
        previous = entry


def test_survey_of_disconnected_members():
    tw = two_rays_twin()
    entries = connectivity_survey(tw, 3, 40)
    assert [e.index for e in entries] == [1, 2, 3]
    assert all(e.verdict is Connectivity.DISCONNECTED for e in entries)
    assert not twin_family(tw, 3).graph.contains(vertex("r", 5))


def test_empty_survey(chain):
    assert connectivity_survey(chain.twin, 0, 50) == []
