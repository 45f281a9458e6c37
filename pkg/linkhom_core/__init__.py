# linkhom_core/__init__.py

from .constants import *
from .errors import (
    LinkHomologyError, InvalidWeightsError, NonPositiveWeightError, NonPrimitiveError,
    TooFewWeightsError, InvalidDegreeError, WeightExceedsDegreeError, WrongVariantError,
    CapExceededError, SubsetLimitError, UnsupportedLinkError, CatalogParseError,
    EmptyInputError, UnknownFormatError, InexactDivisionError, NonIntegerBettiError,
    OracleMismatchError,
)
from .utils import format_group_label, format_int_tuple, oracle_cap_from_env, parse_int_list
from .weights import (
    WeightVector, LinkDescriptor, PolynomialForm,
    validate_weights, link_descriptor, fano_degree, weights_from_exponents,
    bp_exponents, chain_exponents, find_chain_orderings, milnor_number,
)
from .homology import (
    SubsetTable, HomologyResult,
    betti, orlik_c_coefficients, orlik_k_values, orlik_torsion, subset_table, homology_summary,
)
from .oracle import (
    MonodromyMatrix, SnfResult, OracleComparison,
    eigen1_count, companion_block, pham_monodromy, smith_normal_form,
    oracle_homology, compare_with_algorithm,
)

__all__ = [
    # Constants
    'VERSION', 'DEFAULT_ORACLE_CAP', 'DEFAULT_SWEEP_CAP', 'ORACLE_CAP_ENV', 'MAX_VARIABLES',
    'DEFAULT_WEIGHTS_PER_ROW', 'COMMENT_PREFIX', 'BRIESKORN_PHAM', 'ORLIK_CHAIN',
    'FORM_BP', 'FORM_CHAIN', 'ALL_FORMS',
    'FORMAT_TEXT', 'FORMAT_TABLE', 'FORMAT_JSON', 'FORMAT_CSV', 'REPORT_FORMATS', 'CSV_REPORT_COLUMNS',
    'EXIT_OK', 'EXIT_INVALID_INPUT', 'EXIT_NOT_FOUND', 'EXIT_CONVENTION', 'EXIT_MISMATCH',
    'LOG_FORMAT', 'MATCH_COLOR', 'MISMATCH_COLOR', 'WARNING_COLOR',
    # Errors
    'LinkHomologyError', 'InvalidWeightsError', 'NonPositiveWeightError', 'NonPrimitiveError',
    'TooFewWeightsError', 'InvalidDegreeError', 'WeightExceedsDegreeError', 'WrongVariantError',
    'CapExceededError', 'SubsetLimitError', 'UnsupportedLinkError', 'CatalogParseError',
    'EmptyInputError', 'UnknownFormatError', 'InexactDivisionError', 'NonIntegerBettiError',
    'OracleMismatchError',
    # Functions
    'format_group_label', 'format_int_tuple', 'oracle_cap_from_env', 'parse_int_list',
    'validate_weights', 'link_descriptor', 'fano_degree', 'weights_from_exponents',
    'bp_exponents', 'chain_exponents', 'find_chain_orderings', 'milnor_number',
    'betti', 'orlik_c_coefficients', 'orlik_k_values', 'orlik_torsion', 'subset_table',
    'homology_summary',
    'eigen1_count', 'companion_block', 'pham_monodromy', 'smith_normal_form',
    'oracle_homology', 'compare_with_algorithm',
    # Classes
    'WeightVector', 'LinkDescriptor', 'PolynomialForm', 'SubsetTable', 'HomologyResult',
    'MonodromyMatrix', 'SnfResult', 'OracleComparison',
]
