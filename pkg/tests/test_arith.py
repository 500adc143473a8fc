"""Integer-helper tests.

Expected values come from independent naive recomputations (loops and trial
division) rather than from the functions under test.
"""

import math
import random

import pytest
import sympy

from sl4witness import arith


def naive_two_part(n):
    n = abs(n)
    v = 1
    while n % 2 == 0:
        n //= 2
        v *= 2
    return v


def naive_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def gcd_strip_ppd(a, n, eps):
    """Oracle: remove every prime shared with an earlier term of the
    sequence a^i - eps^i, then report the smallest prime left over."""
    value = a**n - eps**n
    for i in range(1, n):
        earlier = a**i - eps**i
        g = math.gcd(value, earlier)
        while g > 1:
            value //= g
            g = math.gcd(value, earlier)
    if value == 1:
        return None
    return min(sympy.primefactors(value))


def test_two_part_known():
    assert arith.two_part(1) == 1
    assert arith.two_part(2) == 2
    assert arith.two_part(12) == 4
    assert arith.two_part(-40) == 8
    assert arith.two_part(1 << 64) == 1 << 64
    with pytest.raises(ValueError):
        arith.two_part(0)


def test_two_part_matches_naive():
    rnd = random.Random(1001)
    for _ in range(2000):
        n = rnd.randint(-(1 << 64), 1 << 64)
        if n == 0:
            continue
        assert arith.two_part(n) == naive_two_part(n)


def test_two_part_sum_behavior():
    # the property the case-D solvability argument leans on
    rnd = random.Random(1002)
    for _ in range(2000):
        a = rnd.randint(-(1 << 40), 1 << 40)
        b = rnd.randint(-(1 << 40), 1 << 40)
        if a == 0 or b == 0 or a + b == 0:
            continue
        va, vb = arith.two_part(a), arith.two_part(b)
        if va == vb:
            assert arith.two_part(a + b) > va
        elif va > vb:
            assert arith.two_part(a + b) == vb


def test_is_prime_small_exhaustive():
    for n in range(0, 3000):
        assert arith.is_prime(n) == naive_is_prime(n), n


def test_is_prime_known_values():
    assert arith.is_prime(2**31 - 1)
    assert arith.is_prime(2**61 - 1)
    assert arith.is_prime(18446744073709551557)  # largest prime below 2^64
    assert not arith.is_prime(561)               # Carmichael number
    assert not arith.is_prime(3215031751)        # strong pseudoprime base 2,3,5,7
    assert not arith.is_prime(2**64 - 1)
    with pytest.raises(ValueError):
        arith.is_prime(arith.SIZE_LIMIT + 1)


def test_factorize_known():
    assert [(f.prime, f.exponent) for f in arith.factorize(720)] == [
        (2, 4), (3, 2), (5, 1)]
    assert [(f.prime, f.exponent) for f in arith.factorize(1 << 16)] == [(2, 16)]
    assert [(f.prime, f.exponent) for f in arith.factorize(97)] == [(97, 1)]
    # semiprime beyond the trial-division bound exercises the rho stage
    p, q = 1000003, 1000033
    assert [(f.prime, f.exponent) for f in arith.factorize(p * q)] == [
        (p, 1), (q, 1)]
    with pytest.raises(ValueError):
        arith.factorize(1)
    with pytest.raises(ValueError):
        arith.factorize(0)


def test_factorize_random_roundtrip():
    rnd = random.Random(2002)
    for _ in range(250):
        n = rnd.randint(2, 10**12)
        factors = arith.factorize(n)
        product = 1
        for f in factors:
            assert arith.is_prime(f.prime)
            assert f.exponent >= 1
            product *= f.prime**f.exponent
        assert product == n
        primes = [f.prime for f in factors]
        assert primes == sorted(set(primes))


def test_prime_divisors():
    assert arith.prime_divisors(360) == [2, 3, 5]
    assert arith.prime_divisors(41) == [41]


def test_primitive_prime_divisor_known():
    assert arith.primitive_prime_divisor(3, 4, 1) == 5
    assert arith.primitive_prime_divisor(9, 2, 1) == 5
    assert arith.primitive_prime_divisor(9, 4, 1) == 41
    assert arith.primitive_prime_divisor(3, 3, 1) == 13
    assert arith.primitive_prime_divisor(9, 3, 1) == 7
    assert arith.primitive_prime_divisor(3, 4, -1) == 5
    assert arith.primitive_prime_divisor(3, 3, -1) == 7
    # classical exception patterns
    assert arith.primitive_prime_divisor(2, 6, 1) is None
    assert arith.primitive_prime_divisor(7, 2, 1) is None
    assert arith.primitive_prime_divisor(3, 2, -1) is None
    assert arith.primitive_prime_divisor(2, 3, -1) is None


def test_primitive_prime_divisor_validation():
    with pytest.raises(ValueError):
        arith.primitive_prime_divisor(1, 2, 1)
    with pytest.raises(ValueError):
        arith.primitive_prime_divisor(3, 1, 1)
    with pytest.raises(ValueError):
        arith.primitive_prime_divisor(3, 2, 0)
    with pytest.raises(ValueError):
        arith.primitive_prime_divisor(2, 200, 1)


def test_primitive_prime_divisor_matches_oracle_small():
    for eps in (1, -1):
        for a in range(2, 13):
            for n in range(2, 9):
                assert arith.primitive_prime_divisor(a, n, eps) == \
                    gcd_strip_ppd(a, n, eps), (a, n, eps)


def test_order_in_cyclic():
    assert arith.order_in_cyclic(40, 1) == 40
    assert arith.order_in_cyclic(40, 10) == 4
    assert arith.order_in_cyclic(40, 0) == 1
    assert arith.order_in_cyclic(40, 41) == 40
    with pytest.raises(ValueError):
        arith.order_in_cyclic(0, 1)


def test_inverse_mod_2pow():
    rnd = random.Random(3003)
    for _ in range(300):
        s = rnd.randint(1, 24)
        x = rnd.randint(0, 1 << 30) * 2 + 1
        inv = arith.inverse_mod_2pow(x, s)
        assert (x * inv) % (1 << s) == 1
    with pytest.raises(ValueError):
        arith.inverse_mod_2pow(4, 3)
    with pytest.raises(ValueError):
        arith.inverse_mod_2pow(3, 0)
