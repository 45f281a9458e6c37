# linkhom_core/weights.py
"""Weight vectors, degrees and the two representable polynomial shapes.

A weight vector w = (w_0, ..., w_n) together with a degree d describes the
weighted C* action of a weighted homogeneous polynomial. Everything the
homology engine consumes is derived here:

- the reduced pairs u_i = d/gcd(d, w_i), v_i = w_i/gcd(d, w_i)
- Brieskorn-Pham exponents a_i = d/w_i
- Orlik chain exponents with a_0 w_0 = d and w_{i-1} + a_i w_i = d

All values are Python ints, so nothing overflows for large catalogs.
"""
import logging
import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, List, Optional, Tuple

from .constants import BRIESKORN_PHAM, ORLIK_CHAIN
from .errors import (
    InvalidDegreeError,
    InvalidWeightsError,
    NonPositiveWeightError,
    NonPrimitiveError,
    TooFewWeightsError,
    WeightExceedsDegreeError,
    WrongVariantError,
)
from .utils import format_int_tuple, gcd_of, lcm_of, product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    """Weights of the C* action; the link has dimension 2n - 1."""
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) < 2:
            raise TooFewWeightsError(f"need at least 2 weights, got {len(self.weights)}")
        for w in self.weights:
            if w <= 0:
                raise NonPositiveWeightError(f"weights must be positive: {format_int_tuple(self.weights)}")
        g = gcd_of(self.weights)
        if g != 1:
            raise NonPrimitiveError(f"gcd of weights {format_int_tuple(self.weights)} is {g}, expected 1")

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, index):
        return self.weights[index]

    def __str__(self):
        return format_int_tuple(self.weights)


@dataclass(frozen=True)
class LinkDescriptor:
    """Weights plus degree, with the derived (u_i, v_i) pairs."""
    weights: WeightVector
    degree: int
    u: Tuple[int, ...]
    v: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.weights.n

    @property
    def link_dimension(self) -> int:
        return 2 * self.n - 1


@dataclass(frozen=True)
class PolynomialForm:
    """
    Exponent data of a Brieskorn-Pham or Orlik chain polynomial.

    `ordering[i]` is the index (into the original weight vector) of the
    variable z_i of the polynomial. For Brieskorn-Pham forms it is the
    identity. `unit_exponents` lists chain positions i with a_i = 1.
    """
    variant: str
    exponents: Tuple[int, ...]
    ordering: Tuple[int, ...]
    unit_exponents: Tuple[int, ...] = field(default=())

    @property
    def has_unit_exponent(self) -> bool:
        return bool(self.unit_exponents)

    def chained_weights(self, weights: Iterable[int]) -> Tuple[int, ...]:
        """Weights re-indexed into the polynomial's variable order."""
        w = tuple(weights)
        return tuple(w[i] for i in self.ordering)

    def satisfies(self, weights: Iterable[int], degree: int) -> bool:
        """Re-check the defining identities exactly against (w, d)."""
        w = self.chained_weights(weights)
        a = self.exponents
        if sorted(self.ordering) != list(range(len(w))) or len(a) != len(w):
            return False
        if self.variant == BRIESKORN_PHAM:
            return all(ai >= 2 and ai * wi == degree for ai, wi in zip(a, w))
        if self.variant == ORLIK_CHAIN:
            if any(ai < 1 for ai in a) or a[0] * w[0] != degree:
                return False
            return all(w[i - 1] + a[i] * w[i] == degree for i in range(1, len(w)))
        return False

    def render(self) -> str:
        """
        Polynomial text in the variable order of the form.

        Examples:
            BP (15,10,6)         -> 'z0^15 + z1^10 + z2^6'
            chain (11,75,5,2,2)  -> 'z0^11 + z0*z1^75 + z1*z2^5 + z2*z3^2 + z3*z4^2'
        """
        def power(i, a):
            return f"z{i}" if a == 1 else f"z{i}^{a}"

        terms = []
        for i, a in enumerate(self.exponents):
            if self.variant == ORLIK_CHAIN and i > 0:
                terms.append(f"z{i - 1}*{power(i, a)}")
            else:
                terms.append(power(i, a))
        return " + ".join(terms)


# ----- Construction -----

def validate_weights(raw: Iterable[int]) -> WeightVector:
    """
    Build a WeightVector from raw integers, preserving their order.

    Raises:
        NonPositiveWeightError: Some w_i <= 0
        NonPrimitiveError: gcd(w) > 1
        TooFewWeightsError: Fewer than two weights
        InvalidWeightsError: Non-integer entries

    Examples:
        >>> validate_weights([75, 10, 163, 331, 247]).n
        4
    """
    values = list(raw)
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidWeightsError(f"weights must be integers, got {value!r}")
    return WeightVector(tuple(values))


def link_descriptor(w: WeightVector, d: int) -> LinkDescriptor:
    """
    Derive u_i = d/gcd(d, w_i) and v_i = w_i/gcd(d, w_i).

    Raises:
        InvalidDegreeError: d is not a positive integer
        WeightExceedsDegreeError: Some w_i >= d
    """
    if isinstance(d, bool) or not isinstance(d, int) or d <= 0:
        raise InvalidDegreeError(f"degree must be a positive integer, got {d!r}")
    for wi in w:
        if wi >= d:
            raise WeightExceedsDegreeError(f"weight {wi} of {w} is not below degree {d}")
    gcds = [math.gcd(d, wi) for wi in w]
    u = tuple(d // g for g in gcds)
    v = tuple(wi // g for wi, g in zip(w, gcds))
    return LinkDescriptor(weights=w, degree=d, u=u, v=v)


def fano_degree(w: WeightVector) -> int:
    """Degree of a Fano hypersurface in a catalog: d = sum(w) - 1."""
    total = sum(w)
    if total < 2:
        raise InvalidDegreeError(f"sum of weights {w} is below 2")
    return total - 1


def weights_from_exponents(exponents: Iterable[int]) -> Tuple[WeightVector, int]:
    """
    Weight vector and degree of the Brieskorn-Pham polynomial with the given
    exponents: d = lcm(a), w_i = d/a_i, reduced by the common gcd.

    Examples:
        (2,3,5) -> ((15,10,6), 30)
        (2,2,2) -> ((1,1,1), 2)
    """
    a = list(exponents)
    if any(isinstance(ai, bool) or not isinstance(ai, int) or ai < 2 for ai in a):
        raise InvalidWeightsError(f"Brieskorn-Pham exponents must be integers >= 2: {a}")
    d = lcm_of(a)
    raw = [d // ai for ai in a]
    g = gcd_of(raw)
    return validate_weights(wi // g for wi in raw), d // g


# ----- Representability -----

def bp_exponents(w: WeightVector, d: int) -> Optional[PolynomialForm]:
    """Brieskorn-Pham exponents a_i = d/w_i, or None when any is not an integer >= 2."""
    link_descriptor(w, d)
    exponents = []
    for wi in w:
        a, remainder = divmod(d, wi)
        if remainder or a < 2:
            return None
        exponents.append(a)
    return PolynomialForm(
        variant=BRIESKORN_PHAM,
        exponents=tuple(exponents),
        ordering=tuple(range(len(w))),
    )


def _chain_solution(ordered: Tuple[int, ...], d: int) -> Optional[Tuple[int, ...]]:
    a0, remainder = divmod(d, ordered[0])
    if remainder:
        return None
    exponents = [a0]
    for previous, wi in zip(ordered, ordered[1:]):
        ai, remainder = divmod(d - previous, wi)
        if remainder or ai < 1:
            return None
        exponents.append(ai)
    return tuple(exponents)


def _chain_form(ordered: Tuple[int, ...], ordering: Tuple[int, ...], d: int) -> Optional[PolynomialForm]:
    exponents = _chain_solution(ordered, d)
    if exponents is None:
        return None
    units = tuple(i for i, a in enumerate(exponents) if a == 1)
    if units:
        # The link may fail to be smooth here; nothing checks it.
        logger.warning("chain %s of degree %d has unit exponent(s) at %s",
                       format_int_tuple(ordered), d, list(units))
    return PolynomialForm(
        variant=ORLIK_CHAIN,
        exponents=exponents,
        ordering=ordering,
        unit_exponents=units,
    )


def chain_exponents(w: WeightVector, d: int) -> Optional[PolynomialForm]:
    """
    Orlik chain exponents for the weights in the order given.

    Solves a_0 w_0 = d and w_{i-1} + a_i w_i = d in positive integers.

    Examples:
        (75,10,163,331,247), 825 -> (11,75,5,2,2)
        (10,75,163,247,331), 825 -> None
    """
    link_descriptor(w, d)
    return _chain_form(tuple(w), tuple(range(len(w))), d)


def find_chain_orderings(w: WeightVector, d: int) -> List[PolynomialForm]:
    """
    Every variable order in which the weights satisfy the chain constraints.

    All (n+1)! permutations are tried in lexicographic order of the index
    permutation. Permutations producing the same ordered weights (repeated
    weights) describe the same polynomial and are kept once, under the
    smallest index permutation.
    """
    link_descriptor(w, d)
    forms = []
    seen = set()
    for ordering in permutations(range(len(w))):
        ordered = tuple(w[i] for i in ordering)
        if ordered in seen:
            continue
        seen.add(ordered)
        form = _chain_form(ordered, ordering, d)
        if form is not None:
            forms.append(form)
    logger.debug("%s, d=%d: %d chain ordering(s)", w, d, len(forms))
    return forms


def milnor_number(form: PolynomialForm) -> int:
    """Milnor number prod(a_i - 1) of a Brieskorn-Pham form."""
    if form.variant != BRIESKORN_PHAM:
        raise WrongVariantError(f"Milnor number needs a Brieskorn-Pham form, got {form.variant}")
    return product(a - 1 for a in form.exponents)
