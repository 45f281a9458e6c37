# linkhom_core/utils.py

import math
import operator
import os
from functools import reduce
from itertools import combinations, groupby
from typing import Callable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .constants import DEFAULT_ORACLE_CAP, ORACLE_CAP_ENV
from .errors import CapExceededError, InvalidWeightsError


def gcd_of(values: Iterable[int]) -> int:
    """gcd of a sequence; gcd of nothing is 0."""
    return reduce(math.gcd, values, 0)


def lcm_of(values: Iterable[int]) -> int:
    """lcm of a sequence; lcm of nothing is 1."""
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def product(values: Iterable[int]) -> int:
    return reduce(operator.mul, values, 1)


# ----- Subsets as bit masks -----

def mask_members(mask: int) -> Tuple[int, ...]:
    """
    Indices set in a bit mask, ascending.

    Examples:
        >>> mask_members(0b10110)
        (1, 2, 4)
        >>> mask_members(0)
        ()
    """
    members = []
    index = 0
    while mask:
        if mask & 1:
            members.append(index)
        mask >>= 1
        index += 1
    return tuple(members)


def members_mask(members: Iterable[int]) -> int:
    return sum(1 << i for i in set(members))


def subsets_by_cardinality(width: int) -> Iterator[int]:
    """
    Yield every subset of {0..width-1} as a mask, by increasing cardinality
    and lexicographically within a cardinality.

    Example:
        >>> list(subsets_by_cardinality(3))
        [0, 1, 2, 4, 3, 5, 6, 7]
    """
    for size in range(width + 1):
        for members in combinations(range(width), size):
            yield members_mask(members)


def subset_mobius(values: Sequence, width: int,
                  inverse: Callable = operator.sub) -> List:
    """
    Moebius inversion over the subset lattice.

    With the default `inverse` the result is
        g(S) = sum over T subset of S of (-1)^(|S|-|T|) f(T);
    with `operator.truediv` it is the multiplicative analogue, i.e. the g
    for which the product of g(T) over T subset of S gives back f(S).

    Args:
        values: f indexed by mask, length 2^width
        width: number of ground elements
        inverse: group operation undoing one accumulation step

    Returns:
        New list g indexed by mask
    """
    out = list(values)
    for bit in range(width):
        step = 1 << bit
        for mask in range(1 << width):
            if mask & step:
                out[mask] = inverse(out[mask], out[mask ^ step])
    return out


# ----- Presentation -----

def format_int_tuple(values: Iterable[int]) -> str:
    """
    Compact tuple rendering used in all text output.

    Example:
        >>> format_int_tuple([75, 10, 163])
        '(75,10,163)'
    """
    return "(" + ",".join(str(v) for v in values) + ")"


def format_group_label(betti: int, torsion: Sequence[int]) -> str:
    """
    Render a finitely generated abelian group the way link tables print it.

    Repeated torsion factors are grouped with an exponent.

    Examples:
        >>> format_group_label(12, [14, 2, 2])
        'Z^12 ⊕ Z/14 ⊕ (Z/2)^2'
        >>> format_group_label(0, [])
        '0'
    """
    parts = []
    if betti == 1:
        parts.append("Z")
    elif betti > 1:
        parts.append(f"Z^{betti}")
    for value, run in groupby(torsion):
        count = len(list(run))
        parts.append(f"Z/{value}" if count == 1 else f"(Z/{value})^{count}")
    return " ⊕ ".join(parts) if parts else "0"


def parse_int_list(text: str) -> List[int]:
    """
    Parse a comma-separated list of integers (CLI weight and exponent lists).

    Raises:
        InvalidWeightsError: If any item is empty or not an integer
    """
    items = [item.strip() for item in text.split(",")]
    if not all(items):
        raise InvalidWeightsError(f"empty item in {text!r}")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise InvalidWeightsError(f"not a comma-separated integer list: {text!r}") from None


# ----- Configuration -----

def oracle_cap_from_env(environ: Optional[Mapping[str, str]] = None) -> int:
    """
    Default oracle cap, overridable through LINKHOM_ORACLE_CAP.

    Raises:
        CapExceededError: If the variable is set but not a positive integer
    """
    env = os.environ if environ is None else environ
    raw = env.get(ORACLE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap <= 0:
        raise CapExceededError(f"{ORACLE_CAP_ENV} must be a positive integer, got {raw!r}")
    return cap
