# display.py
"""Terminal rendering for the CLI - plain text with termcolor status words."""
import sys
from typing import Sequence

from termcolor import colored

from linkhom_core import (
    MATCH_COLOR,
    MISMATCH_COLOR,
    WARNING_COLOR,
    HomologyResult,
    OracleComparison,
    PolynomialForm,
    format_int_tuple,
)


class LinkDisplay:
    """Static printers; every line goes to stdout except errors and warnings."""

    @staticmethod
    def torsion_text(torsion: Sequence[int]) -> str:
        return format_int_tuple(torsion) if torsion else "none"

    @staticmethod
    def status(match: bool) -> str:
        return colored("MATCH", MATCH_COLOR) if match else colored("MISMATCH", MISMATCH_COLOR)

    @staticmethod
    def betti_line(b: int):
        print(f"b={b}")

    @staticmethod
    def torsion_line(torsion: Sequence[int]):
        print(f"torsion {LinkDisplay.torsion_text(torsion)}")

    @staticmethod
    def homology(result: HomologyResult):
        LinkDisplay.betti_line(result.betti)
        LinkDisplay.torsion_line(result.torsion)
        print(result.describe())

    @staticmethod
    def form(form: PolynomialForm, weights: Sequence[int]):
        """One representable form: variable order, exponents and the polynomial."""
        print(f"ordering {format_int_tuple(form.chained_weights(weights))} "
              f"exponents {format_int_tuple(form.exponents)}")
        print(f"  {form.render()}")
        if form.has_unit_exponent:
            LinkDisplay.warning(f"unit exponent at position(s) {list(form.unit_exponents)}")

    @staticmethod
    def comparison(comparison: OracleComparison):
        print(f"exponents {format_int_tuple(comparison.exponents)}  "
              f"weights {format_int_tuple(comparison.weights)}  d={comparison.degree}  "
              f"mu={comparison.milnor_number}")
        print(colored("oracle", "blue"))
        LinkDisplay.homology(comparison.oracle)
        print(colored("algorithm", "blue"))
        LinkDisplay.homology(comparison.algorithm)
        print(f"eigenvalue-1 count {comparison.eigen1}")
        print(LinkDisplay.status(comparison.match))

    @staticmethod
    def reference_row(index: int, check):
        row = check.row
        print(f"row {index:>2} {format_int_tuple(row.weights)} d={row.degree} "
              f"b={check.result.betti} torsion {LinkDisplay.torsion_text(check.result.torsion)} "
              f"{LinkDisplay.status(check.match)}")

    @staticmethod
    def sweep_summary(stats: dict):
        print(colored("Oracle sweep", "blue"))
        print(colored("=" * 40, "blue"))
        print(f"cases             {stats['cases']}")
        print(f"matches           {stats['matches']}")
        print(f"mismatches        {stats['mismatches']}")
        print(f"rational spheres  {stats['rational_spheres']}")
        print(f"largest mu        {stats['largest_milnor']}")
        print(LinkDisplay.status(stats['mismatches'] == 0))

    @staticmethod
    def warning(message: str):
        print(colored(f"warning: {message}", WARNING_COLOR), file=sys.stderr)

    @staticmethod
    def error(message: str):
        print(colored(f"error: {message}", MISMATCH_COLOR), file=sys.stderr)
