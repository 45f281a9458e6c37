# reference_table.py
"""
Ten published Fano weight vectors with Orlik chain polynomials, together with
the Betti number and torsion of their links. Weights are listed in chain
order; the bundled sample catalog holds the same vectors sorted ascending.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from linkhom_core import (
    HomologyResult,
    PolynomialForm,
    chain_exponents,
    find_chain_orderings,
    format_group_label,
    homology_summary,
    link_descriptor,
    validate_weights,
)

from .catalog import CatalogEntry, parse_catalog

SAMPLE_CATALOG_PATH = Path(__file__).parent / "data" / "sample_catalog.csv"


@dataclass(frozen=True)
class ReferenceRow:
    weights: Tuple[int, ...]
    degree: int
    exponents: Tuple[int, ...]
    betti: int
    torsion: Tuple[int, ...]

    @property
    def sorted_weights(self) -> Tuple[int, ...]:
        return tuple(sorted(self.weights))

    @property
    def label(self) -> str:
        return format_group_label(self.betti, self.torsion)


REFERENCE_ROWS: Tuple[ReferenceRow, ...] = (
    ReferenceRow((75, 10, 163, 331, 247), 825, (11, 75, 5, 2, 2), 10, (55, 5, 5, 5, 5)),
    ReferenceRow((62, 124, 155, 9, 85), 434, (7, 3, 2, 31, 5), 12, (14, 2, 2)),
    ReferenceRow((9, 174, 467, 277, 649), 1575, (175, 9, 3, 4, 2), 12, (525, 3, 3)),
    ReferenceRow((87, 348, 145, 11, 193), 783, (9, 2, 3, 58, 4), 12, (27, 3)),
    ReferenceRow((100, 350, 9, 113, 229), 800, (8, 2, 50, 7, 3), 14, (400,)),
    ReferenceRow((9, 291, 488, 181, 787), 1755, (195, 6, 3, 7, 2), 14, (585, 3)),
    ReferenceRow((10, 164, 333, 71, 253), 830, (83, 5, 2, 7, 3), 14, (166,)),
    ReferenceRow((10, 540, 275, 163, 103), 1090, (109, 2, 2, 5, 9), 16, (218, 2)),
    ReferenceRow((32, 144, 11, 103, 31), 320, (10, 2, 16, 3, 7), 18, (160,)),
    ReferenceRow((45, 36, 27, 11, 107), 225, (5, 5, 7, 18, 2), 20, (5,)),
)


@dataclass(frozen=True)
class ReferenceCheck:
    """Recomputed data for one reference row."""
    row: ReferenceRow
    result: HomologyResult
    chain: Optional[PolynomialForm]
    recovered: bool

    @property
    def match(self) -> bool:
        return (
            self.chain is not None
            and self.chain.exponents == self.row.exponents
            and self.recovered
            and self.result.betti == self.row.betti
            and self.result.torsion == self.row.torsion
        )


def check_reference_row(row: ReferenceRow) -> ReferenceCheck:
    """Recompute the chain exponents, the ordering search and the homology of a row."""
    w = validate_weights(row.weights)
    chain = chain_exponents(w, row.degree)
    ascending = validate_weights(row.sorted_weights)
    recovered = any(
        form.chained_weights(ascending) == row.weights and form.exponents == row.exponents
        for form in find_chain_orderings(ascending, row.degree)
    )
    result = homology_summary(link_descriptor(w, row.degree))
    return ReferenceCheck(row=row, result=result, chain=chain, recovered=recovered)


def check_reference_rows() -> List[ReferenceCheck]:
    return [check_reference_row(row) for row in REFERENCE_ROWS]


def load_sample_catalog() -> List[CatalogEntry]:
    return parse_catalog(SAMPLE_CATALOG_PATH.read_text(encoding="utf-8"))
