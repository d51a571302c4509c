import pytest

from fibonacci_qgauss.errors import DomainError, NotPrimeError
from fibonacci_qgauss.galois import (
    PrimeField,
    check_chain_factorization,
    check_duality,
    check_rref_uniqueness,
    count_maximal_chains,
    count_subspaces,
    is_prime,
    rref_matrices,
    verify_lattice_counts,
)


def test_is_prime():
    assert [p for p in range(12) if is_prime(p)] == [2, 3, 5, 7, 11]


@pytest.mark.parametrize("p", [0, 1, 4, 6])
def test_field_needs_prime(p):
    with pytest.raises(NotPrimeError):
        PrimeField(p)


def test_not_prime_is_a_domain_error():
    with pytest.raises(DomainError):
        count_subspaces(2, 1, 4)


def test_field_arithmetic():
    field = PrimeField(3)
    assert field.add(2, 2) == 1
    assert field.mul(2, 2) == 1
    assert list(field.elements) == [0, 1, 2]


def test_rref_listing():
    assert list(rref_matrices(PrimeField(2), 2, 1)) == [((1, 0),), ((1, 1),), ((0, 1),)]


@pytest.mark.parametrize(
    ("n", "k", "p", "expected"),
    [(3, 0, 2, 1), (2, 1, 2, 3), (4, 2, 2, 35), (4, 2, 3, 130), (3, 3, 5, 1)],
)
def test_subspace_counts(n, k, p, expected):
    assert count_subspaces(n, k, p) == expected


@pytest.mark.parametrize(
    ("n", "p", "expected"),
    [(0, 2, 1), (1, 3, 1), (2, 2, 3), (3, 2, 21), (3, 3, 52)],
)
def test_flag_counts(n, p, expected):
    assert count_maximal_chains(n, p) == expected


@pytest.mark.parametrize(
    "call",
    [
        lambda: count_subspaces(5, 2, 2),
        lambda: count_subspaces(2, 3, 2),
        lambda: count_subspaces(2, 1, 7),
        lambda: count_maximal_chains(4, 2),
    ],
)
def test_enumeration_caps(call):
    with pytest.raises(DomainError):
        call()


def test_lattice_counts_match_gaussian_values():
    report = verify_lattice_counts(4, [2, 3])
    assert report.holds
    assert report.checked == 2 * 15 + 2 * 4


def test_structural_checks():
    assert check_rref_uniqueness(3, [2, 3]).holds
    assert check_duality(4, [2]).holds
    assert check_chain_factorization(3, [2, 3]).holds


def test_small_lattice_sweep_and_whole_space():
    assert verify_lattice_counts(2, [2]).holds
    for n in range(5):
        assert count_subspaces(n, n, 3) == 1
