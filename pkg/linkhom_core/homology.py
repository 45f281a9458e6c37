# linkhom_core/homology.py
"""Middle homology H_{n-1} of a link from its (u, v) data.

- betti: the Milnor-Orlik alternating subset sum.
- orlik_c_coefficients / orlik_k_values / orlik_torsion: Orlik's recipe for
  the torsion coefficients d_1, d_2, ... with d_{j+1} | d_j.

Subsets of {0..n} are bit masks throughout. Every quantity is an exact int
or Fraction; nothing is ever rounded except the floor bounding the number of
torsion coefficients.
"""
import logging
import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .constants import MAX_VARIABLES
from .errors import InexactDivisionError, NonIntegerBettiError, SubsetLimitError
from .utils import (
    format_group_label,
    format_int_tuple,
    gcd_of,
    mask_members,
    product,
    subset_mobius,
    subsets_by_cardinality,
)
from .weights import LinkDescriptor

logger = logging.getLogger(__name__)


@dataclass
class SubsetTable:
    """Per-subset Orlik data, keyed by bit mask over {0..n}."""
    n: int
    c: Dict[int, int] = field(default_factory=dict)
    kappa: Dict[int, Fraction] = field(default_factory=dict)
    k: Dict[int, Fraction] = field(default_factory=dict)

    @property
    def width(self) -> int:
        return self.n + 1

    @property
    def full_mask(self) -> int:
        return (1 << self.width) - 1

    @property
    def order(self) -> List[int]:
        """Masks by increasing cardinality, lexicographic within one."""
        return list(subsets_by_cardinality(self.width))

    @staticmethod
    def members(mask: int) -> Tuple[int, ...]:
        return mask_members(mask)


@dataclass(frozen=True)
class HomologyResult:
    """H_{n-1}(L) = Z^betti + Z/d_1 + ... + Z/d_r."""
    betti: int
    torsion: Tuple[int, ...]
    group_label: str
    degree: int = 0

    @property
    def torsion_order(self) -> int:
        return product(self.torsion)

    @property
    def is_rational_homology_sphere(self) -> bool:
        return self.betti == 0

    def describe(self) -> str:
        return f"H_{self.degree} = {self.group_label}"


def _check_size(link: LinkDescriptor, max_variables: int):
    if len(link.u) > max_variables:
        raise SubsetLimitError(
            f"{len(link.u)} variables exceed the subset-table limit of {max_variables}"
        )


def _subset_terms(link: LinkDescriptor) -> List[Fraction]:
    """
    term(S) = prod(u_S) / (prod(v_S) * lcm(u_S)), with term(empty) = 1.

    Built incrementally from the mask with its lowest member removed.
    """
    width = len(link.u)
    prod_u = [1] * (1 << width)
    prod_v = [1] * (1 << width)
    lcm_u = [1] * (1 << width)
    terms = [Fraction(1)] * (1 << width)
    for mask in range(1, 1 << width):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        prod_u[mask] = prod_u[rest] * link.u[low]
        prod_v[mask] = prod_v[rest] * link.v[low]
        lcm_u[mask] = lcm_u[rest] * link.u[low] // math.gcd(lcm_u[rest], link.u[low])
        terms[mask] = Fraction(prod_u[mask], prod_v[mask] * lcm_u[mask])
    return terms


def betti(link: LinkDescriptor, max_variables: int = MAX_VARIABLES) -> int:
    """
    b_{n-1}(L) = sum over all subsets S of {0..n} of
                 (-1)^(n+1-|S|) * prod(u_S) / (prod(v_S) * lcm(u_S)).

    Raises:
        NonIntegerBettiError: The exact sum is not a nonnegative integer
    """
    _check_size(link, max_variables)
    width = len(link.u)
    total = Fraction(0)
    for mask, term in enumerate(_subset_terms(link)):
        sign = -1 if (width - bin(mask).count("1")) % 2 else 1
        total += sign * term
    if total.denominator != 1 or total < 0:
        raise NonIntegerBettiError(
            f"Betti sum for {link.weights}, d={link.degree} is {total}, not a nonnegative integer"
        )
    return int(total)


def orlik_c_coefficients(link: LinkDescriptor, max_variables: int = MAX_VARIABLES) -> SubsetTable:
    """
    c(S) = gcd(u_j : j not in S) / prod of c(J) over proper subsets J of S.

    The defining recursion says the product of c(J) over all J contained in S
    equals the complementary gcd, so the table is its multiplicative Moebius
    inversion. The full index set gets c = 1 and never enters a product.

    Raises:
        InexactDivisionError: Some c(S) is not an integer
    """
    _check_size(link, max_variables)
    width = len(link.u)
    full = (1 << width) - 1
    gcds = [Fraction(1)] * (1 << width)
    for mask in range(full):
        gcds[mask] = Fraction(gcd_of(link.u[j] for j in range(width) if not mask >> j & 1))
    ratios = subset_mobius(gcds, width, inverse=operator.truediv)

    table = SubsetTable(n=link.n)
    for mask in table.order:
        if mask == full:
            table.c[mask] = 1
            continue
        value = ratios[mask]
        if value.denominator != 1 or value <= 0:
            raise InexactDivisionError(
                f"c{format_int_tuple(mask_members(mask))} = {value} is not a positive integer "
                f"for {link.weights}, d={link.degree}"
            )
        table.c[mask] = int(value)
    return table


def orlik_k_values(link: LinkDescriptor, max_variables: int = MAX_VARIABLES) -> SubsetTable:
    """
    kappa(S) = sum over T subset of S of (-1)^(|S|-|T|) * term(T);
    k(S) = kappa(S) when n - |S| + 1 is odd, else 0.
    """
    _check_size(link, max_variables)
    width = len(link.u)
    kappas = subset_mobius(_subset_terms(link), width)
    table = SubsetTable(n=link.n)
    for mask in table.order:
        table.kappa[mask] = kappas[mask]
        odd = (link.n - bin(mask).count("1") + 1) % 2 == 1
        table.k[mask] = kappas[mask] if odd else Fraction(0)
    return table


def subset_table(link: LinkDescriptor, max_variables: int = MAX_VARIABLES) -> SubsetTable:
    """c, kappa and k for every subset in one table."""
    table = orlik_c_coefficients(link, max_variables)
    values = orlik_k_values(link, max_variables)
    table.kappa = values.kappa
    table.k = values.k
    return table


def orlik_torsion(link: LinkDescriptor, max_variables: int = MAX_VARIABLES) -> Tuple[int, ...]:
    """
    Torsion coefficients d_j = prod of c(S) over subsets with k(S) >= j,
    for 1 <= j <= floor(max k). Coefficients equal to 1 are dropped.
    """
    table = subset_table(link, max_variables)
    full = table.full_mask
    order = table.order
    top = max(table.k.values())
    r = math.floor(top) if top >= 1 else 0
    torsion = []
    for j in range(1, r + 1):
        d_j = product(table.c[mask] for mask in order
                      if mask != full and table.k[mask] >= j)
        if d_j == 1:
            # d_{j+1} divides d_j, so every later coefficient is 1 as well
            break
        if torsion:
            assert torsion[-1] % d_j == 0, "torsion coefficients must form a divisibility chain"
        torsion.append(d_j)
    logger.debug("%s, d=%d: r=%d torsion=%s", link.weights, link.degree, r, torsion)
    return tuple(torsion)


def homology_summary(link: LinkDescriptor, max_variables: int = MAX_VARIABLES) -> HomologyResult:
    """Betti number, torsion and the printed group of H_{n-1}(L)."""
    b = betti(link, max_variables)
    torsion = orlik_torsion(link, max_variables)
    return HomologyResult(
        betti=b,
        torsion=torsion,
        group_label=format_group_label(b, torsion),
        degree=link.n - 1,
    )
