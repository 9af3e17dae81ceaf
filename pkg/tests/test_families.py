"""
Встроенные семейства, реестр и теория чисел
"""
import pytest

from service_factory import ServiceFactory, get_family_registry
from src.config import get_config
from src.core import Finite, vertex
from src.families import get_registry, nth_prime, prime_power_decompose
from src.families.extended_star import column_spec, column_transposition
from src.morphisms import Beta, verify_iso_window
from src.selfcontain import verify_removable
from src.services.errors import CoordinateLimitError, UnknownNameError
from src.services.number_theory import (
    PRIME_TABLE_LIMIT,
    count_powers_upto,
    is_prime,
    next_prime,
    perfect_power_root,
    previous_prime,
    prime_index,
)


def test_prime_helpers():
    assert nth_prime(1) == 2
    assert nth_prime(10) == 29
    assert prime_index(29) == 10
    assert prime_power_decompose(49) == (7, 2)
    assert prime_power_decompose(12) is None
    assert prime_power_decompose(1) is None
    assert perfect_power_root(64) == (2, 6)
    assert perfect_power_root(72) == (72, 1)
    assert count_powers_upto(3, 81) == 4
    assert is_prime(97) and not is_prime(91)
    with pytest.raises(ValueError):
        prime_index(91)


def test_registry_lists_families():
    registry = get_registry()
    assert registry.names() == ["clique-chain", "extended-star", "ray"]
    described = {item["family"]: item["axioms"] for item in registry.describe()}
    assert any("not removable" in axiom for axiom in described["extended-star"])


def test_registry_caches_bundles():
    registry = get_registry()
    assert registry.get("ray") is registry.get("ray")


def test_unknown_family():
    with pytest.raises(UnknownNameError) as error:
        get_registry().get("hypercube")
    assert error.value.kind == "family"
    assert "extended-star" in error.value.available


def test_service_factory_shares_registry_and_config():
    factory = ServiceFactory()
    assert factory.get_family_registry() is get_registry()
    assert factory.get_config() is get_config()
    assert get_family_registry() is get_registry()


@pytest.mark.slow
@pytest.mark.parametrize("name", ["star", "chain", "ray_family"])
def test_every_shipped_witness_verifies(request, name):
    bundle = request.getfixturevalue(name)
    for witness in bundle.rem:
        assert verify_removable(witness, 500).passed, witness.name


def test_bundle_lookups(star, chain):
    assert star.spec("fH") == column_spec(3)
    assert star.spec("Q") == star.twin.Q
    assert chain.spec("o") == Finite(frozenset({vertex("o")}))
    assert star.well_mannered_witness("H").alpha == Beta(0, 1)

def test_unknown_bundle_names(star):
    with pytest.raises(UnknownNameError):
        star.witness("nope")
    with pytest.raises(UnknownNameError):
        star.spec("nope")
    with pytest.raises(UnknownNameError):
        star.well_mannered_witness("nope")


def test_column_transposition_is_an_automorphism(star):
    col = column_transposition(6, 10, star.graph)
    assert col(vertex("a", 2, 6)) == vertex("a", 2, 10)
    assert verify_iso_window(col, star.graph, star.graph, 200).passed


def _trial_division_primes(bound):
    return [p for p in range(2, bound) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


@pytest.mark.parametrize("p", _trial_division_primes(100))
def test_prime_power_decomposition_matches_trial_division(p):
    for j in range(1, 6):
        assert prime_power_decompose(p ** j) == (p, j)
    assert prime_power_decompose(p * next_prime(p)) is None
    assert prime_power_decompose(p ** 2 * next_prime(p)) is None


def test_prime_steps_around_small_primes():
    assert next_prime(1) == 2
    assert next_prime(13) == 17
    assert previous_prime(17) == 13
    assert previous_prime(2) is None
    assert nth_prime(prime_index(7919)) == 7919


def test_large_prime_column_shifts_without_prime_table(star):
    p = 10 ** 12 + 39
    assert is_prime(p)
    assert not is_prime(10 ** 12 + 1)
    f = star.env.names["f"]
    source = vertex("a", 1, p)
    assert star.graph.contains(source)
    image = f(source)
    q = image.coords[1]
    assert q > p and is_prime(q)
    assert previous_prime(q) == p
    assert f.backward(image) == source
    assert f.target.contains(image)
    assert f(vertex("a", 2, p ** 2)) == vertex("a", 2, q ** 2)
    assert prime_power_decompose(p ** 3) == (p, 3)


def test_copy_index_beyond_the_prime_table_is_reported(star):
    p = 10 ** 12 + 39
    with pytest.raises(CoordinateLimitError) as error:
        prime_index(p)
    assert error.value.limit == PRIME_TABLE_LIMIT
    with pytest.raises(CoordinateLimitError):
        star.env.evaluate(Beta(0, 1)).forward(vertex("a", 1, p))
