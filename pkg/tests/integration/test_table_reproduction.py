"""
Integration tests: the ten reference Fano links, recomputed end to end
from chain-ordered weights and from the bundled ascending catalog
"""

import pytest

from linkhom_core import (
    chain_exponents,
    fano_degree,
    find_chain_orderings,
    homology_summary,
    link_descriptor,
    subset_table,
    validate_weights,
)
from src.catalog import (
    REFERENCE_ROWS,
    ScanOptions,
    check_reference_row,
    emit_report,
    load_sample_catalog,
    scan,
)

ROW_IDS = [f"row{i}" for i in range(1, len(REFERENCE_ROWS) + 1)]


@pytest.mark.parametrize("row", REFERENCE_ROWS, ids=ROW_IDS)
class TestReferenceRows:
    """Betti number, torsion and chain exponents match the published table"""

    def test_homology(self, row):
        result = homology_summary(link_descriptor(validate_weights(row.weights), row.degree))
        assert result.betti == row.betti
        assert result.torsion == row.torsion
        assert result.group_label == row.label

    def test_chain_exponents(self, row):
        form = chain_exponents(validate_weights(row.weights), row.degree)
        assert form is not None
        assert form.exponents == row.exponents
        assert form.satisfies(row.weights, row.degree)

    def test_ordering_recovered_from_ascending_weights(self, row):
        ascending = validate_weights(row.sorted_weights)
        forms = find_chain_orderings(ascending, row.degree)
        chained = [form.chained_weights(ascending) for form in forms]
        assert row.weights in chained
        assert all(form.satisfies(ascending, row.degree) for form in forms)

    def test_fano_degree(self, row):
        assert fano_degree(validate_weights(row.sorted_weights)) == row.degree

    def test_structural_invariants(self, row):
        link = link_descriptor(validate_weights(row.weights), row.degree)
        table = subset_table(link)
        assert table.kappa[table.full_mask] == row.betti
        assert all(c >= 1 for c in table.c.values())
        torsion = homology_summary(link).torsion
        assert all(a % b == 0 for a, b in zip(torsion, torsion[1:]))

    def test_reference_check(self, row):
        assert check_reference_row(row).match


class TestSampleCatalog:
    """The bundled catalog holds the same ten vectors in ascending order"""

    def test_matches_reference_rows(self):
        entries = load_sample_catalog()
        assert [e.weights.weights for e in entries] == [r.sorted_weights for r in REFERENCE_ROWS]
        assert [e.degree for e in entries] == [r.degree for r in REFERENCE_ROWS]
        assert all(e.ke_flag for e in entries)

    def test_scan_finds_ten_chains_and_no_bp(self):
        report = scan(load_sample_catalog(), ScanOptions())
        assert report.summary["chain"] == 10
        assert report.summary["bp"] == 0
        for row, reference in zip(report.rows, REFERENCE_ROWS):
            assert row.homology.betti == reference.betti
            assert row.homology.torsion == reference.torsion

    def test_table_report_first_row(self):
        text = emit_report(scan(load_sample_catalog()), "table")
        lines = text.splitlines()
        assert lines[0] == "weights | deg | b | H_{n-1} | link"
        assert lines[1] == (
            "(75,10,163,331,247) | 825 | 10 | Z^10 ⊕ Z/55 ⊕ (Z/5)^4 | "
            "z0^11 + z0*z1^75 + z1*z2^5 + z2*z3^2 + z3*z4^2"
        )
        assert lines[-1] == "# total=10 chain=10 homology=10"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
