from math import prod

import pytest

from divtop.primes import (
    factorint,
    is_prime,
    next_prime,
    partitions,
    primes_upto,
    smallest_prime_factors,
)


@pytest.mark.parametrize(
    "n,expected",
    [(0, False), (1, False), (2, True), (3, True), (4, False), (25, False),
     (97, True), (991, True), (1001, False)],
)
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_factorint_reconstructs():
    for n in range(1, 600):
        fac = factorint(n)
        assert prod(p**e for p, e in fac.items()) == n
        assert all(is_prime(p) for p in fac)


def test_primes_upto_matches_is_prime():
    assert primes_upto(50) == [n for n in range(2, 51) if is_prime(n)]


def test_smallest_prime_factors():
    spf = smallest_prime_factors(100)
    for n in range(2, 101):
        assert n % spf[n] == 0 and is_prime(spf[n])


def test_next_prime():
    assert next_prime(2) == 3
    assert next_prime(15) == 17
    assert next_prime(-5) == 2


def test_partitions_counts():
    # partition numbers p(0)..p(9)
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    for n, count in enumerate(expected):
        parts = list(partitions(n))
        assert len(parts) == count
        assert len(set(parts)) == count
        assert all(sum(p) == n for p in parts)
