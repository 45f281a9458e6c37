# oracle_sweep.py
"""
Sweep Brieskorn-Pham exponent tuples and compare the monodromy oracle with
the subset-sum algorithm on every one of them.
"""
import json
import logging
from collections import Counter
from datetime import datetime
from itertools import combinations_with_replacement
from typing import Iterable, List, Tuple

from tqdm import tqdm

from linkhom_core import (
    DEFAULT_SWEEP_CAP,
    InvalidWeightsError,
    OracleComparison,
    UnsupportedLinkError,
    compare_with_algorithm,
    format_int_tuple,
)
from linkhom_core.utils import product

logger = logging.getLogger(__name__)


def sweep_cases(min_vars: int = 3, max_vars: int = 5, max_exponent: int = 6,
                max_milnor: int = DEFAULT_SWEEP_CAP) -> List[Tuple[int, ...]]:
    """
    Sorted exponent tuples a_0 <= ... <= a_n with 2 <= a_i <= max_exponent
    and Milnor number prod(a_i - 1) at most max_milnor.

    Args:
        min_vars: Fewest variables (at least 3, the oracle's lower bound)
        max_vars: Most variables
        max_exponent: Largest exponent tried
        max_milnor: Cap on the monodromy size

    Returns:
        Tuples by number of variables, then lexicographically
    """
    if min_vars < 3:
        raise UnsupportedLinkError(f"the oracle needs at least 3 variables, got min_vars={min_vars}")
    if max_exponent < 2:
        raise InvalidWeightsError(f"max_exponent must be at least 2, got {max_exponent}")
    cases = []
    for size in range(min_vars, max_vars + 1):
        for exponents in combinations_with_replacement(range(2, max_exponent + 1), size):
            if product(a - 1 for a in exponents) <= max_milnor:
                cases.append(exponents)
    return cases


class OracleSweep:
    """Runs compare_with_algorithm over a list of cases and tallies the outcome."""

    def __init__(self, cases: Iterable[Tuple[int, ...]], cap: int = DEFAULT_SWEEP_CAP):
        self.cases = [tuple(a) for a in cases]
        self.cap = cap
        self.comparisons: List[OracleComparison] = []
        self.stats = self._init_stats()

    def _init_stats(self):
        return {
            'cases': 0, 'matches': 0, 'mismatches': 0,
            'eigen1_agreements': 0, 'rational_spheres': 0,
            'largest_milnor': 0, 'torsion_seen': Counter(),
            'mismatched': [],
        }

    @property
    def all_match(self) -> bool:
        return self.stats['mismatches'] == 0

    def run(self, progress: bool = True):
        """Compare every case; returns the stats dict."""
        logger.info("sweeping %d exponent tuples (cap %d)", len(self.cases), self.cap)
        for exponents in tqdm(self.cases, desc="Sweeping oracle", unit="case", disable=not progress):
            self._record(compare_with_algorithm(exponents, self.cap))
        logger.info("sweep done: %d/%d match", self.stats['matches'], self.stats['cases'])
        return self.stats

    def _record(self, comparison: OracleComparison):
        self.comparisons.append(comparison)
        stats = self.stats
        stats['cases'] += 1
        if comparison.match:
            stats['matches'] += 1
        else:
            stats['mismatches'] += 1
            stats['mismatched'].append(comparison.exponents)
        if comparison.eigen1 == comparison.oracle.betti:
            stats['eigen1_agreements'] += 1
        if comparison.oracle.is_rational_homology_sphere:
            stats['rational_spheres'] += 1
        stats['largest_milnor'] = max(stats['largest_milnor'], comparison.milnor_number)
        for factor in comparison.oracle.torsion:
            stats['torsion_seen'][factor] += 1

    def to_dict(self) -> dict:
        stats = dict(self.stats)
        stats['torsion_seen'] = {str(k): v for k, v in sorted(self.stats['torsion_seen'].items())}
        stats['mismatched'] = [list(a) for a in self.stats['mismatched']]
        return {
            'cap': self.cap,
            'stats': stats,
            'cases': [
                {
                    'exponents': list(c.exponents),
                    'weights': list(c.weights),
                    'degree': c.degree,
                    'milnor': c.milnor_number,
                    'oracle': {'betti': c.oracle.betti, 'torsion': list(c.oracle.torsion)},
                    'algorithm': {'betti': c.algorithm.betti, 'torsion': list(c.algorithm.torsion)},
                    'eigen1': c.eigen1,
                    'match': c.match,
                }
                for c in self.comparisons
            ],
        }

    def save_raw_data(self, path):
        payload = self.to_dict()
        payload['generated'] = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(payload, f, indent=2)
        logger.info("wrote %d sweep results to %s", len(self.comparisons), path)

    def describe_mismatches(self) -> List[str]:
        return [format_int_tuple(a) for a in self.stats['mismatched']]
