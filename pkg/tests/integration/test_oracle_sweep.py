"""
Integration tests: the monodromy oracle against the subset-sum algorithm on
every small Brieskorn-Pham exponent tuple
"""

import json
import time

import pytest

from linkhom_core import (
    DEFAULT_SWEEP_CAP,
    InvalidWeightsError,
    UnsupportedLinkError,
    compare_with_algorithm,
    eigen1_count,
)
from linkhom_core.utils import product
from src.analysis.oracle_sweep import OracleSweep, sweep_cases

SWEEP_MILNOR_CAP = 64


@pytest.fixture(scope="module")
def sweep():
    runner = OracleSweep(sweep_cases(3, 5, 6, SWEEP_MILNOR_CAP), cap=SWEEP_MILNOR_CAP)
    runner.run(progress=False)
    return runner


class TestSweepCases:

    def test_enough_cases(self):
        assert len(sweep_cases(3, 5, 6, SWEEP_MILNOR_CAP)) >= 100

    def test_cases_are_sorted_and_capped(self):
        for exponents in sweep_cases(3, 5, 6, SWEEP_MILNOR_CAP):
            assert list(exponents) == sorted(exponents)
            assert 2 <= exponents[0] and exponents[-1] <= 6
            assert product(a - 1 for a in exponents) <= SWEEP_MILNOR_CAP
            assert 3 <= len(exponents) <= 5

    def test_smallest_case_first(self):
        assert sweep_cases(3, 3, 3, 8)[0] == (2, 2, 2)

    def test_too_few_variables(self):
        with pytest.raises(UnsupportedLinkError):
            sweep_cases(min_vars=2)

    def test_exponent_bound(self):
        with pytest.raises(InvalidWeightsError):
            sweep_cases(max_exponent=1)


class TestOracleSweep:
    """Every case agrees: Betti number, torsion, eigenvalue-1 count, finite order"""

    def test_all_cases_match(self, sweep):
        assert sweep.all_match, f"mismatches at {sweep.describe_mismatches()}"
        assert sweep.stats['matches'] == sweep.stats['cases'] == len(sweep.cases)

    def test_eigen1_equals_betti(self, sweep):
        assert sweep.stats['eigen1_agreements'] == sweep.stats['cases']
        for comparison in sweep.comparisons:
            assert eigen1_count(comparison.exponents) == comparison.algorithm.betti

    def test_invariants_on_every_case(self, sweep):
        for comparison in sweep.comparisons:
            torsion = comparison.algorithm.torsion
            assert all(t > 1 for t in torsion)
            assert all(a % b == 0 for a, b in zip(torsion, torsion[1:]))
            assert comparison.finite_order

    def test_stats(self, sweep):
        assert sweep.stats['largest_milnor'] <= SWEEP_MILNOR_CAP
        assert sweep.stats['rational_spheres'] > 0
        assert sweep.stats['torsion_seen'][2] > 0

    def test_save_raw_data(self, sweep, tmp_path):
        path = tmp_path / "raw.json"
        sweep.save_raw_data(path)
        payload = json.loads(path.read_text())
        assert payload['cap'] == SWEEP_MILNOR_CAP
        assert len(payload['cases']) == len(sweep.cases)
        assert all(case['match'] for case in payload['cases'])


class TestSmallManifolds:
    """(2,2,2), (2,3,5) and (3,3,3) agree both ways"""

    @pytest.mark.parametrize("exponents,betti,torsion", [
        ((2, 2, 2), 0, (2,)),
        ((2, 3, 5), 0, ()),
        ((3, 3, 3), 2, (3,)),
    ])
    def test_agree(self, exponents, betti, torsion):
        runner = OracleSweep([exponents])
        runner.run(progress=False)
        [comparison] = runner.comparisons
        assert (comparison.oracle.betti, comparison.oracle.torsion) == (betti, torsion)
        assert (comparison.algorithm.betti, comparison.algorithm.torsion) == (betti, torsion)


class TestDefaultCapTiming:
    """The largest cases of the default sweep (mu up to 1000) stay fast"""

    def test_milnor_1000_case(self):
        start = time.perf_counter()
        comparison = compare_with_algorithm((3, 5, 6, 6, 6), DEFAULT_SWEEP_CAP)
        elapsed = time.perf_counter() - start
        assert comparison.milnor_number == DEFAULT_SWEEP_CAP
        assert comparison.match
        assert elapsed < 30, f"mu=1000 comparison took {elapsed:.1f}s"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
