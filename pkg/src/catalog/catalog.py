# catalog.py
"""
Catalog rows of weighted projective hypersurfaces and the scan over them.

A catalog row is `w0,...,w_{N-1},ke[,degree]`: ascending weights, a 0/1
Kähler-Einstein flag and an optional degree override. Without the override
the degree follows the Fano rule d = sum(w) - 1.
"""
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from tqdm import tqdm

from linkhom_core import (
    ALL_FORMS,
    COMMENT_PREFIX,
    DEFAULT_WEIGHTS_PER_ROW,
    FORM_BP,
    FORM_CHAIN,
    CatalogParseError,
    EmptyInputError,
    HomologyResult,
    LinkHomologyError,
    PolynomialForm,
    UnknownFormatError,
    WeightVector,
    bp_exponents,
    fano_degree,
    find_chain_orderings,
    homology_summary,
    link_descriptor,
    validate_weights,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog row. Malformed rows keep only `error` and `line`."""
    weights: Optional[WeightVector]
    ke_flag: bool
    degree: Optional[int]
    id: Optional[str] = None
    error: Optional[str] = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ScanOptions:
    """Which forms to look for and which entries to look at."""
    forms: FrozenSet[str] = ALL_FORMS
    ke_only: bool = False
    homology: bool = True
    min_w0: Optional[int] = None
    max_w0: Optional[int] = None

    def __post_init__(self):
        unknown = set(self.forms) - ALL_FORMS
        if unknown:
            raise UnknownFormatError(
                f"unknown form(s) {sorted(unknown)}, expected a subset of {sorted(ALL_FORMS)}"
            )

    def selects(self, entry: CatalogEntry) -> bool:
        if self.ke_only and not entry.ke_flag:
            return False
        w0 = entry.weights[0]
        if self.min_w0 is not None and w0 < self.min_w0:
            return False
        if self.max_w0 is not None and w0 > self.max_w0:
            return False
        return True


@dataclass(frozen=True)
class ScanRow:
    entry: CatalogEntry
    bp: Optional[PolynomialForm] = None
    chain: Tuple[PolynomialForm, ...] = ()
    homology: Optional[HomologyResult] = None
    error: Optional[str] = None

    @property
    def representable(self) -> bool:
        return self.bp is not None or bool(self.chain)

    @property
    def canonical_form(self) -> Optional[PolynomialForm]:
        """First chain ordering, else the BP form."""
        if self.chain:
            return self.chain[0]
        return self.bp


@dataclass
class ScanReport:
    rows: List[ScanRow] = field(default_factory=list)
    skipped: int = 0

    @property
    def summary(self) -> dict:
        return {
            "total": len(self.rows),
            "bp": sum(1 for row in self.rows if row.bp is not None),
            "chain": sum(1 for row in self.rows if row.chain),
            "homology": sum(1 for row in self.rows if row.homology is not None),
            "errors": sum(1 for row in self.rows if row.error is not None),
            "skipped": self.skipped,
        }


# ----- Parsing -----

def _strip_comment(raw: str) -> str:
    return raw.split(COMMENT_PREFIX, 1)[0].strip()


def _parse_row(text: str, lineno: int, weights_per_row: int) -> CatalogEntry:
    fields = [item.strip() for item in text.split(",")]
    if len(fields) not in (weights_per_row + 1, weights_per_row + 2):
        raise CatalogParseError(
            lineno,
            f"expected {weights_per_row} weights, ke and an optional degree, got {len(fields)} fields",
        )
    try:
        values = [int(item) for item in fields]
    except ValueError:
        raise CatalogParseError(lineno, f"non-integer field in {text!r}") from None

    try:
        weights = validate_weights(values[:weights_per_row])
    except LinkHomologyError as exc:
        raise CatalogParseError(lineno, str(exc)) from None
    if list(weights) != sorted(weights):
        raise CatalogParseError(lineno, f"weights {weights} are not ascending")

    ke = values[weights_per_row]
    if ke not in (0, 1):
        raise CatalogParseError(lineno, f"ke flag must be 0 or 1, got {ke}")

    if len(values) == weights_per_row + 2:
        degree = values[-1]
        if degree <= 0:
            raise CatalogParseError(lineno, f"degree must be positive, got {degree}")
    else:
        degree = fano_degree(weights)
    return CatalogEntry(weights=weights, ke_flag=bool(ke), degree=degree, line=lineno)


def parse_catalog(source: Union[str, Iterable[str]],
                  weights_per_row: int = DEFAULT_WEIGHTS_PER_ROW) -> List[CatalogEntry]:
    """
    Parse catalog text (or an iterable of lines) into entries.

    Blank lines and `#` comments are skipped. A malformed row does not stop
    the parse; it becomes an entry carrying the error and its line number.

    Raises:
        EmptyInputError: No data rows at all
        CatalogParseError: weights_per_row below 2
    """
    if weights_per_row < 2:
        raise CatalogParseError(0, f"weights_per_row must be at least 2, got {weights_per_row}")
    lines = source.splitlines() if isinstance(source, str) else source

    entries = []
    for lineno, raw in enumerate(lines, start=1):
        text = _strip_comment(raw)
        if not text:
            continue
        try:
            entries.append(_parse_row(text, lineno, weights_per_row))
        except CatalogParseError as exc:
            logger.debug("skipping malformed row: %s", exc)
            entries.append(CatalogEntry(weights=None, ke_flag=False, degree=None,
                                        error=str(exc), line=lineno))
    if not entries:
        raise EmptyInputError("catalog has no data rows")
    logger.debug("parsed %d catalog row(s)", len(entries))
    return entries


def format_catalog_csv(entries: Iterable[CatalogEntry]) -> str:
    """
    Catalog text with an explicit degree on every row.

    Rows with a parse error have nothing to write and are left out.
    """
    lines = []
    for entry in entries:
        if entry.error is not None:
            continue
        fields = [str(w) for w in entry.weights] + [str(int(entry.ke_flag)), str(entry.degree)]
        lines.append(",".join(fields))
    return "\n".join(lines) + ("\n" if lines else "")


# ----- Scanning -----

def _scan_entry(entry: CatalogEntry, options: ScanOptions) -> ScanRow:
    try:
        link = link_descriptor(entry.weights, entry.degree)
        bp = bp_exponents(entry.weights, entry.degree) if FORM_BP in options.forms else None
        chain = ()
        if FORM_CHAIN in options.forms:
            chain = tuple(find_chain_orderings(entry.weights, entry.degree))
        homology = None
        if options.homology and (bp is not None or chain):
            homology = homology_summary(link)
    except LinkHomologyError as exc:
        logger.debug("%s, d=%s: %s", entry.weights, entry.degree, exc)
        return ScanRow(entry=entry, error=str(exc))
    return ScanRow(entry=entry, bp=bp, chain=chain, homology=homology)


def scan(entries: Iterable[CatalogEntry], options: Optional[ScanOptions] = None,
         progress: bool = False) -> ScanReport:
    """
    Look for BP and chain forms on every entry, in input order.

    Rows that failed to parse are carried into the report with their error.
    Entries rejected by the options only increase `skipped`.
    """
    options = options or ScanOptions()
    entries = list(entries)
    report = ScanReport()
    for entry in tqdm(entries, desc="Scanning catalog", unit="entry", disable=not progress):
        if entry.error is not None:
            report.rows.append(ScanRow(entry=entry, error=entry.error))
            continue
        if not options.selects(entry):
            report.skipped += 1
            continue
        report.rows.append(_scan_entry(entry, options))
    logger.info("scanned %d entries: %s", len(entries), report.summary)
    return report
