# linkhom_core/constants.py

VERSION = "0.3.0"

# Oracle size caps (Milnor number mu = prod(a_i - 1))
DEFAULT_ORACLE_CAP = 4096
DEFAULT_SWEEP_CAP = 1000
ORACLE_CAP_ENV = "LINKHOM_ORACLE_CAP"

# Subset tables hold 2^(n+1) entries; n <= 20
MAX_VARIABLES = 21

# Catalog layout: w0..w4,ke[,degree]
DEFAULT_WEIGHTS_PER_ROW = 5
COMMENT_PREFIX = "#"

# Polynomial variants
BRIESKORN_PHAM = "BrieskornPham"
ORLIK_CHAIN = "OrlikChain"

# Scan form selectors
FORM_BP = "bp"
FORM_CHAIN = "chain"
ALL_FORMS = frozenset({FORM_BP, FORM_CHAIN})

# Output formats (single computations print text or json)
FORMAT_TEXT = "text"
FORMAT_TABLE = "table"
FORMAT_JSON = "json"
FORMAT_CSV = "csv"
REPORT_FORMATS = (FORMAT_TABLE, FORMAT_JSON, FORMAT_CSV)

CSV_REPORT_COLUMNS = [
    "id", "weights", "degree", "ke", "bp", "chain",
    "betti", "torsion", "label", "error",
]

# Process exit codes
EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_NOT_FOUND = 2
EXIT_CONVENTION = 3
EXIT_MISMATCH = 4

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# Display colors
MATCH_COLOR = "green"
MISMATCH_COLOR = "red"
WARNING_COLOR = "yellow"
