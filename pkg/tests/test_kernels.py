"""Parity and correctness of the integer kernels, both backends."""

import random

import pytest

from qgenocchi import _kernel_py

BACKENDS = [_kernel_py]
try:
    from qgenocchi import _kernel_c

    BACKENDS.append(_kernel_c)
except ImportError:
    _kernel_c = None

backend = pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)(lambda request: request.param)


def rand_poly(rng, max_deg, lo=-20, hi=20, nonzero=False):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randint(lo, hi) for _ in range(deg + 1)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if nonzero and not coeffs:
        coeffs = [1]
    return coeffs


def naive_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


class TestPolyOps:
    def test_mul_known(self, backend):
        assert backend.poly_mul([1, 1], [1, 1]) == [1, 2, 1]
        assert backend.poly_mul([], [1, 2]) == []

    def test_mul_matches_naive(self, backend):
        rng = random.Random(7)
        for _ in range(50):
            a, b = rand_poly(rng, 6), rand_poly(rng, 6)
            assert backend.poly_mul(a, b) == naive_mul(a, b)

    def test_content_primitive(self, backend):
        content, prim = backend.poly_primitive([-6, 0, -9])
        assert content == -3 and prim == [2, 0, 3]
        assert backend.poly_primitive([]) == (0, [])
        assert backend.poly_content([4, 6]) == 2

    def test_divexact(self, backend):
        prod = naive_mul([1, 2, 1], [3, -1, 5])
        assert backend.poly_divexact(prod, [1, 2, 1]) == [3, -1, 5]
        with pytest.raises(ArithmeticError):
            backend.poly_divexact([1, 1, 1], [1, 1])

    def test_gcd_known(self, backend):
        one_plus_q = [1, 1]
        cube = naive_mul(naive_mul(one_plus_q, one_plus_q), one_plus_q)
        got = backend.poly_gcd(naive_mul(cube, [2, 3]), naive_mul(one_plus_q, [5, 0, 7]))
        assert got == one_plus_q

    def test_gcd_of_coprime(self, backend):
        assert backend.poly_gcd([1, 1], [1, -1]) == [1]
        assert backend.poly_gcd([3], [0, 5]) == [1]

    def test_gcd_with_zero(self, backend):
        assert backend.poly_gcd([], [-2, 4]) == [-1, 2]
        assert backend.poly_gcd([6, 2], []) == [3, 1]

    def test_gcd_common_factor_property(self, backend):
        rng = random.Random(11)
        for _ in range(30):
            a = rand_poly(rng, 4, nonzero=True)
            b = rand_poly(rng, 4, nonzero=True)
            c = rand_poly(rng, 3, nonzero=True)
            g = backend.poly_gcd(naive_mul(a, c), naive_mul(b, c))
            _, cp = backend.poly_primitive(c)
            # the gcd divides both products and is divisible by the common factor
            assert backend.poly_divexact(naive_mul(a, c), g) is not None
            assert backend.poly_divexact(naive_mul(b, c), g) is not None
            assert backend.poly_divexact(g, backend.poly_gcd(g, cp)) is not None

    def test_pseudo_rem_degree_drops(self, backend):
        rng = random.Random(13)
        for _ in range(30):
            a = rand_poly(rng, 6, nonzero=True)
            b = rand_poly(rng, 3, nonzero=True)
            r = backend.poly_pseudo_rem(a, b)
            assert len(r) < len(b) or not r


class TestWeightedSums:
    def test_int_sum_matches_naive(self, backend):
        rng = random.Random(17)
        for _ in range(20):
            a, b = rng.randint(1, 9), rng.randint(1, 4)
            count = rng.randint(1, 40)
            g = rand_poly(rng, 4)
            expect = sum((-1) ** xi * a ** xi * b ** (count - 1 - xi) *
                         sum(c * xi ** i for i, c in enumerate(g))
                         for xi in range(count))
            assert backend.alt_weighted_int_sum(a, b, count, g) == expect

    def test_mod_sum_matches_int_sum(self, backend):
        rng = random.Random(19)
        for _ in range(20):
            u = rng.randint(1, 50)
            count = rng.randint(1, 40)
            g = rand_poly(rng, 4)
            mod = 3 ** 12
            expect = backend.alt_weighted_int_sum(u, 1, count, g) % mod
            assert backend.alt_weighted_mod_sum(u, count, g, mod) == expect


@pytest.mark.skipif(_kernel_c is None, reason="compiled kernel not built")
class TestBackendParity:
    def test_randomized_parity(self):
        rng = random.Random(23)
        for _ in range(200):
            a = rand_poly(rng, 8, -99, 99)
            b = rand_poly(rng, 8, -99, 99, nonzero=True)
            assert _kernel_py.poly_mul(a, b) == _kernel_c.poly_mul(a, b)
            assert _kernel_py.poly_gcd(a, b) == _kernel_c.poly_gcd(a, b)
            assert _kernel_py.poly_pseudo_rem(a, b) == _kernel_c.poly_pseudo_rem(a, b)
            assert _kernel_py.poly_primitive(a) == _kernel_c.poly_primitive(a)

    def test_sum_parity(self):
        rng = random.Random(29)
        for _ in range(30):
            g = rand_poly(rng, 5)
            count = rng.randint(1, 60)
            assert (_kernel_py.alt_weighted_int_sum(4, 3, count, g)
                    == _kernel_c.alt_weighted_int_sum(4, 3, count, g))
            assert (_kernel_py.alt_weighted_mod_sum(7, count, g, 5 ** 10)
                    == _kernel_c.alt_weighted_mod_sum(7, count, g, 5 ** 10))
