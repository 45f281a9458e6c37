# linkhom_core/oracle.py
"""Brute-force cross-check for Brieskorn-Pham links.

For f = z_0^a_0 + ... + z_n^a_n the Milnor fiber has the Pham basis, on
which the monodromy is the Kronecker product of the companion matrices of
1 + t + ... + t^(a_i - 1). The middle homology of the link is then
coker(I - h), read off from a Smith normal form. Independently, the number
of eigenvalue-1 tuples gives the Betti number.

None of this shares code with homology.py beyond the weight conversion, so
agreement between the two is a real check.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .constants import DEFAULT_ORACLE_CAP
from .errors import (
    CapExceededError,
    InvalidWeightsError,
    LinkHomologyError,
    OracleMismatchError,
    UnsupportedLinkError,
)
from .homology import HomologyResult, homology_summary
from .utils import format_group_label, format_int_tuple, lcm_of, product
from .weights import link_descriptor, weights_from_exponents

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MonodromyMatrix:
    """Integral monodromy h_* on the Pham basis."""
    exponents: Tuple[int, ...]
    blocks: Tuple[np.ndarray, ...]
    entries: np.ndarray

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @property
    def order(self) -> int:
        """lcm(a_i); h_* raised to this power is the identity."""
        return lcm_of(self.exponents)

    def power(self, k: int) -> np.ndarray:
        # Powers of h stay in {0, 1, -1}, so int64 is exact.
        return np.linalg.matrix_power(self.entries, k)

    def has_finite_order(self) -> bool:
        # (C_0 (x) ... (x) C_n)^k = C_0^k (x) ... (x) C_n^k, so the blocks decide.
        return all(
            np.array_equal(np.linalg.matrix_power(block, self.order), np.eye(block.shape[0], dtype=np.int64))
            for block in self.blocks
        )


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors s_1 | s_2 | ... ; zeros come last and count the free rank."""
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for s in self.invariant_factors if s != 0)

    @property
    def corank(self) -> int:
        return sum(1 for s in self.invariant_factors if s == 0)

    @property
    def nonunit_factors(self) -> Tuple[int, ...]:
        return tuple(s for s in self.invariant_factors if s > 1)


@dataclass(frozen=True)
class OracleComparison:
    """Oracle and algorithm side by side for one exponent tuple."""
    exponents: Tuple[int, ...]
    weights: Tuple[int, ...]
    degree: int
    milnor_number: int
    oracle: HomologyResult
    algorithm: HomologyResult
    eigen1: int
    finite_order: bool

    @property
    def match(self) -> bool:
        return (
            self.oracle.betti == self.algorithm.betti
            and self.oracle.torsion == self.algorithm.torsion
            and self.eigen1 == self.algorithm.betti
            and self.finite_order
        )


def _checked_exponents(exponents: Iterable[int], cap: int) -> Tuple[Tuple[int, ...], int]:
    a = tuple(exponents)
    if not a or any(isinstance(ai, bool) or not isinstance(ai, int) or ai < 2 for ai in a):
        raise InvalidWeightsError(f"Brieskorn-Pham exponents must be integers >= 2: {list(a)}")
    mu = product(ai - 1 for ai in a)
    if mu > cap:
        raise CapExceededError(f"Milnor number {mu} of {format_int_tuple(a)} exceeds the cap {cap}")
    return a, mu


def eigen1_count(exponents: Sequence[int], cap: int = DEFAULT_ORACLE_CAP) -> int:
    """
    Count tuples 1 <= j_i <= a_i - 1 with sum(j_i / a_i) an integer.

    This is the multiplicity of eigenvalue 1 of the monodromy, i.e. the
    middle Betti number of the link. Tested in integers modulo lcm(a).
    """
    a, _ = _checked_exponents(exponents, cap)
    modulus = lcm_of(a)
    scale = [modulus // ai for ai in a]
    count = 0
    for js in itertools.product(*(range(1, ai) for ai in a)):
        if sum(j * s for j, s in zip(js, scale)) % modulus == 0:
            count += 1
    return count


def companion_block(a: int) -> np.ndarray:
    """
    Companion matrix of 1 + t + ... + t^(a-1): multiplication by t on
    Z[t]/(1 + t + ... + t^(a-1)) in the basis 1, t, ..., t^(a-2).

    Examples:
        companion_block(2) -> [[-1]]
        companion_block(3) -> [[0, -1], [1, -1]]
    """
    size = a - 1
    block = np.zeros((size, size), dtype=np.int64)
    for i in range(size - 1):
        block[i + 1, i] = 1
    block[:, -1] = -1
    return block


def pham_monodromy(exponents: Sequence[int], cap: int = DEFAULT_ORACLE_CAP) -> MonodromyMatrix:
    """Kronecker product C_0 (x) ... (x) C_n of the companion blocks."""
    a, mu = _checked_exponents(exponents, cap)
    blocks = tuple(companion_block(ai) for ai in a)
    entries = reduce(np.kron, blocks)
    logger.debug("monodromy for %s: %dx%d", format_int_tuple(a), mu, mu)
    return MonodromyMatrix(exponents=a, blocks=blocks, entries=entries)


# ----- Smith normal form -----

# Entries below this bound keep every elimination product inside int64.
_INT64_SAFE = 2 ** 31


def _as_integer_matrix(m) -> np.ndarray:
    array = np.asarray(m)
    if array.ndim != 2:
        raise LinkHomologyError(f"expected a 2-dimensional integer matrix, got shape {array.shape}")
    rows, cols = array.shape
    # tolist() yields Python ints, which never overflow
    values = [int(x) for row in array.tolist() for x in row]
    if all(abs(x) < _INT64_SAFE for x in values):
        return np.array(values, dtype=np.int64).reshape(rows, cols)
    out = np.empty((rows, cols), dtype=object)
    out.flat[:] = values
    return out


def _widen_if_needed(a: np.ndarray, touched: np.ndarray) -> np.ndarray:
    """Switch to Python ints once an int64 entry leaves the safe range."""
    if a.dtype != object and touched.size and int(np.abs(touched).max()) >= _INT64_SAFE:
        logger.debug("SNF entries reached %d, continuing with Python ints", _INT64_SAFE)
        return a.astype(object)
    return a


def _min_abs_position(a: np.ndarray, t: int) -> Optional[Tuple[int, int]]:
    """Nonzero entry of least absolute value in a[t:, t:], first in row-major order."""
    sub = a[t:, t:]
    nonzero = np.flatnonzero(sub != 0)
    if nonzero.size == 0:
        return None
    k = int(nonzero[int(np.argmin(np.abs(sub.ravel()[nonzero])))])
    i, j = divmod(k, sub.shape[1])
    return t + i, t + j


def _move_to_pivot(a: np.ndarray, t: int, position: Tuple[int, int]):
    i, j = position
    if i != t:
        a[[t, i], :] = a[[i, t], :]
    if j != t:
        a[:, [t, j]] = a[:, [j, t]]


def _eliminate(a: np.ndarray, t: int) -> Tuple[np.ndarray, bool]:
    """
    Reduce row t and column t modulo the pivot a[t, t].

    Updates are restricted to the nonzero pattern of the pivot row and
    column. Returns the (possibly widened) matrix and whether nonzero
    remainders are left, i.e. whether a smaller pivot exists.
    """
    pivot = a[t, t]
    rows = t + 1 + np.flatnonzero(a[t + 1:, t] != 0)
    if rows.size:
        pivot_cols = t + np.flatnonzero(a[t, t:] != 0)
        block = np.ix_(rows, pivot_cols)
        a[block] -= np.outer(a[rows, t] // pivot, a[t, pivot_cols])
        a = _widen_if_needed(a, a[block])
    cols = t + 1 + np.flatnonzero(a[t, t + 1:] != 0)
    if cols.size:
        pivot_rows = t + np.flatnonzero(a[t:, t] != 0)
        block = np.ix_(pivot_rows, cols)
        a[block] -= np.outer(a[pivot_rows, t], a[t, cols] // pivot)
        a = _widen_if_needed(a, a[block])
    return a, bool((a[t + 1:, t] != 0).any() or (a[t, t + 1:] != 0).any())


def smith_normal_form(m) -> SnfResult:
    """
    Invariant factors of an integer matrix.

    Elimination runs in int64 while every entry stays below 2^31 and in
    Python ints after that, so the result is exact. The pivot is always the
    nonzero entry of least absolute value (ties go to the smallest
    (row, col)), and an entry the pivot does not divide is folded into the
    pivot row before reducing again.

    Examples:
        >>> smith_normal_form([[4, 6], [2, 8]]).invariant_factors
        (2, 10)
    """
    a = _as_integer_matrix(m)
    rows, cols = a.shape
    limit = min(rows, cols)
    factors = []
    for t in range(limit):
        while True:
            position = _min_abs_position(a, t)
            if position is None:
                break
            _move_to_pivot(a, t, position)
            a, remainders = _eliminate(a, t)
            if remainders:
                continue
            pivot = a[t, t]
            if abs(pivot) == 1:
                break
            stray = np.flatnonzero(a[t + 1:, t + 1:] % pivot != 0)
            if stray.size == 0:
                break
            a[t, :] += a[t + 1 + int(stray[0]) // (cols - t - 1), :]
            a = _widen_if_needed(a, a[t, :])
        if position is None:
            break
        factors.append(abs(int(a[t, t])))
    factors.extend([0] * (limit - len(factors)))
    return SnfResult(invariant_factors=tuple(factors))


# ----- Homology from the monodromy -----

def _cokernel_homology(h: MonodromyMatrix) -> HomologyResult:
    identity = np.eye(h.size, dtype=np.int64)
    snf = smith_normal_form(identity - h.entries)
    b = snf.corank
    torsion = tuple(sorted(snf.nonunit_factors, reverse=True))
    return HomologyResult(
        betti=b,
        torsion=torsion,
        group_label=format_group_label(b, torsion),
        degree=len(h.exponents) - 2,
    )


def _require_middle_dimension(a: Sequence[int]):
    if len(a) < 3:
        raise UnsupportedLinkError(
            f"the cokernel description needs at least 3 variables, got {len(a)}"
        )


def oracle_homology(exponents: Sequence[int], cap: int = DEFAULT_ORACLE_CAP) -> HomologyResult:
    """
    H_{n-1}(L) = coker(I - h_*) for a Brieskorn-Pham link.

    Raises:
        OracleMismatchError: The SNF rank disagrees with eigen1_count
    """
    _require_middle_dimension(list(exponents))
    h = pham_monodromy(exponents, cap)
    result = _cokernel_homology(h)
    count = eigen1_count(h.exponents, cap)
    if count != result.betti:
        raise OracleMismatchError(
            f"{format_int_tuple(h.exponents)}: coker(I - h) has free rank {result.betti} "
            f"but {count} eigenvalue-1 tuples"
        )
    return result


def compare_with_algorithm(exponents: Sequence[int], cap: int = DEFAULT_ORACLE_CAP) -> OracleComparison:
    """Oracle result next to homology_summary of the same link."""
    _require_middle_dimension(list(exponents))
    h = pham_monodromy(exponents, cap)
    weights, degree = weights_from_exponents(h.exponents)
    algorithm = homology_summary(link_descriptor(weights, degree))
    comparison = OracleComparison(
        exponents=h.exponents,
        weights=weights.weights,
        degree=degree,
        milnor_number=h.size,
        oracle=_cokernel_homology(h),
        algorithm=algorithm,
        eigen1=eigen1_count(h.exponents, cap),
        finite_order=h.has_finite_order(),
    )
    if not comparison.match:
        logger.warning("oracle disagrees with the algorithm for %s", format_int_tuple(h.exponents))
    return comparison
