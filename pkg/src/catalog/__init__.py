from .catalog import (
    CatalogEntry, ScanOptions, ScanRow, ScanReport,
    parse_catalog, format_catalog_csv, scan,
)
from .report import (
    emit_report, load_report_json, load_report_csv,
    row_to_dict, form_to_dict, homology_to_dict, visible_summary,
)
from .reference_table import (
    ReferenceRow, ReferenceCheck, REFERENCE_ROWS, SAMPLE_CATALOG_PATH,
    check_reference_row, check_reference_rows, load_sample_catalog,
)

__all__ = [
    'CatalogEntry', 'ScanOptions', 'ScanRow', 'ScanReport',
    'parse_catalog', 'format_catalog_csv', 'scan',
    'emit_report', 'load_report_json', 'load_report_csv',
    'row_to_dict', 'form_to_dict', 'homology_to_dict', 'visible_summary',
    'ReferenceRow', 'ReferenceCheck', 'REFERENCE_ROWS', 'SAMPLE_CATALOG_PATH',
    'check_reference_row', 'check_reference_rows', 'load_sample_catalog',
]
