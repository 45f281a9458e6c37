"""
Unit tests for the Smith normal form used by the monodromy oracle
"""

import numpy as np
import pytest

from linkhom_core import LinkHomologyError, SnfResult, smith_normal_form


class TestSmithNormalForm:
    """Invariant factors over arbitrary-precision integers"""

    def test_identity(self):
        assert smith_normal_form(np.eye(3, dtype=np.int64)).invariant_factors == (1, 1, 1)

    def test_two_by_two(self):
        assert smith_normal_form([[4, 6], [2, 8]]).invariant_factors == (2, 10)

    def test_zero_matrix(self):
        result = smith_normal_form(np.zeros((2, 2), dtype=np.int64))
        assert result.invariant_factors == (0, 0)
        assert result.corank == 2
        assert result.rank == 0

    def test_non_divisible_diagonal(self):
        # diag(2, 3) is equivalent to diag(1, 6)
        assert smith_normal_form([[2, 0], [0, 3]]).invariant_factors == (1, 6)

    def test_three_by_three(self):
        m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        assert smith_normal_form(m).invariant_factors == (2, 6, 12)

    def test_rectangular(self):
        assert smith_normal_form([[1, 2, 3]]).invariant_factors == (1,)
        assert smith_normal_form([[2], [4]]).invariant_factors == (2,)

    def test_large_entries_stay_exact(self):
        big = 10 ** 30
        assert smith_normal_form([[big, 0], [0, big]]).invariant_factors == (big, big)

    def test_widens_past_int64_safe_range(self):
        # Both primes fit in int64, but elimination reaches their product.
        p, q = 2 ** 31 - 1, 2 ** 31 - 3
        assert smith_normal_form([[p, 0], [0, q]]).invariant_factors == (1, p * q)

    def test_int64_and_object_input_agree(self):
        m = np.array([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], dtype=np.int64)
        assert smith_normal_form(m) == smith_normal_form(m.astype(object))

    def test_divisibility_and_determinant(self):
        m = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
        factors = smith_normal_form(m).invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert abs(round(np.linalg.det(np.array(m, dtype=float)))) == np.prod(factors)

    def test_rejects_vectors(self):
        with pytest.raises(LinkHomologyError):
            smith_normal_form([1, 2, 3])


class TestSnfResult:

    def test_properties(self):
        result = SnfResult(invariant_factors=(1, 1, 3, 6, 0, 0))
        assert result.rank == 4
        assert result.corank == 2
        assert result.nonunit_factors == (3, 6)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
