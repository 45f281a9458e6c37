# main.py
"""
Command-line entry point.

Every subcommand parses its options, calls the library and prints the result;
no homology arithmetic happens here. Library errors become exit codes through
their `exit_code` attribute.
"""
import json
import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import typer

from linkhom_core import (
    DEFAULT_ORACLE_CAP,
    DEFAULT_SWEEP_CAP,
    DEFAULT_WEIGHTS_PER_ROW,
    EXIT_INVALID_INPUT,
    EXIT_MISMATCH,
    EXIT_NOT_FOUND,
    EXIT_OK,
    FORMAT_JSON,
    FORMAT_TABLE,
    FORMAT_TEXT,
    LOG_FORMAT,
    InvalidDegreeError,
    InvalidWeightsError,
    LinkDescriptor,
    LinkHomologyError,
    UnknownFormatError,
    bp_exponents,
    chain_exponents,
    fano_degree,
    find_chain_orderings,
    homology_summary,
    link_descriptor,
    milnor_number,
    oracle_cap_from_env,
    parse_int_list,
    validate_weights,
    weights_from_exponents,
    compare_with_algorithm,
    orlik_torsion,
    betti as betti_number,
)
from src.analysis.oracle_sweep import OracleSweep, sweep_cases
from src.catalog import (
    ScanOptions,
    check_reference_rows,
    emit_report,
    form_to_dict,
    homology_to_dict,
    parse_catalog,
    scan as scan_catalog,
)
from src.ui.banner import print_banner
from src.ui.display import LinkDisplay

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Middle homology of links of weighted homogeneous singularities.",
)
logger = logging.getLogger(__name__)


@dataclass
class CliConfig:
    verbose: bool = False
    output_format: str = FORMAT_TEXT
    oracle_cap: int = DEFAULT_ORACLE_CAP


def configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


@contextmanager
def _library_errors():
    try:
        yield
    except LinkHomologyError as exc:
        LinkDisplay.error(str(exc))
        raise typer.Exit(code=exc.exit_code)
    except OSError as exc:
        LinkDisplay.error(str(exc))
        raise typer.Exit(code=EXIT_INVALID_INPUT)


def _config(ctx: typer.Context, output_format: str = FORMAT_TEXT, cap: Optional[int] = None) -> CliConfig:
    config = ctx.ensure_object(CliConfig)
    config.output_format = output_format
    if cap is not None:
        config.oracle_cap = cap
    return config


def _resolve_link(weights: Optional[str], degree: Optional[int], fano: bool) -> LinkDescriptor:
    if weights is None:
        raise InvalidWeightsError("pass --weights W0,W1,...")
    w = validate_weights(parse_int_list(weights))
    if fano and degree is not None:
        raise LinkHomologyError("--degree and --fano are mutually exclusive")
    if fano:
        degree = fano_degree(w)
    if degree is None:
        raise InvalidDegreeError("pass --degree D or --fano")
    return link_descriptor(w, degree)


def _print_json(payload: dict):
    print(json.dumps(payload, separators=(",", ":"), ensure_ascii=False))


def _check_format(output_format: str, allowed):
    if output_format not in allowed:
        raise UnknownFormatError(f"unknown format {output_format!r}, expected one of {list(allowed)}")


WEIGHTS_OPTION = typer.Option(None, "--weights", "-w", help="Comma-separated weights, e.g. 75,10,163,331,247.")
DEGREE_OPTION = typer.Option(None, "--degree", "-d", help="Degree d of the polynomial.")
FANO_OPTION = typer.Option(False, "--fano", help="Use the Fano degree sum(w) - 1.")
TEXT_FORMAT_OPTION = typer.Option(FORMAT_TEXT, "--format", "-f", help="text or json.")


@app.callback()
def main_callback(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="DEBUG logging and the version banner on stderr."),
):
    configure_logging(verbose)
    ctx.obj = CliConfig(verbose=verbose)
    if verbose:
        print_banner(stream=sys.stderr)


# ----- Single link -----

@app.command()
def homology(
    ctx: typer.Context,
    weights: Optional[str] = WEIGHTS_OPTION,
    degree: Optional[int] = DEGREE_OPTION,
    fano: bool = FANO_OPTION,
    output_format: str = TEXT_FORMAT_OPTION,
):
    """Betti number and torsion of H_{n-1} of the link."""
    config = _config(ctx, output_format)
    with _library_errors():
        _check_format(config.output_format, (FORMAT_TEXT, FORMAT_JSON))
        link = _resolve_link(weights, degree, fano)
        result = homology_summary(link)
    if config.output_format == FORMAT_JSON:
        _print_json({"weights": list(link.weights), "degree": link.degree,
                     "homology": homology_to_dict(result)})
    else:
        LinkDisplay.homology(result)


@app.command()
def betti(
    ctx: typer.Context,
    weights: Optional[str] = WEIGHTS_OPTION,
    degree: Optional[int] = DEGREE_OPTION,
    fano: bool = FANO_OPTION,
    output_format: str = TEXT_FORMAT_OPTION,
):
    """Milnor-Orlik Betti number only."""
    config = _config(ctx, output_format)
    with _library_errors():
        _check_format(config.output_format, (FORMAT_TEXT, FORMAT_JSON))
        link = _resolve_link(weights, degree, fano)
        b = betti_number(link)
    if config.output_format == FORMAT_JSON:
        _print_json({"weights": list(link.weights), "degree": link.degree, "betti": b})
    else:
        LinkDisplay.betti_line(b)


@app.command()
def torsion(
    ctx: typer.Context,
    weights: Optional[str] = WEIGHTS_OPTION,
    degree: Optional[int] = DEGREE_OPTION,
    fano: bool = FANO_OPTION,
    output_format: str = TEXT_FORMAT_OPTION,
):
    """Orlik torsion coefficients, largest first."""
    config = _config(ctx, output_format)
    with _library_errors():
        _check_format(config.output_format, (FORMAT_TEXT, FORMAT_JSON))
        link = _resolve_link(weights, degree, fano)
        coefficients = orlik_torsion(link)
    if config.output_format == FORMAT_JSON:
        _print_json({"weights": list(link.weights), "degree": link.degree, "torsion": list(coefficients)})
    else:
        LinkDisplay.torsion_line(coefficients)


@app.command("bp-check")
def bp_check(
    ctx: typer.Context,
    weights: Optional[str] = WEIGHTS_OPTION,
    degree: Optional[int] = DEGREE_OPTION,
    fano: bool = FANO_OPTION,
    bp: Optional[str] = typer.Option(None, "--bp", help="Exponents A0,A1,...; weights and degree follow from them."),
    output_format: str = TEXT_FORMAT_OPTION,
):
    """Is there a Brieskorn-Pham polynomial of this weight and degree? Exits 2 if not."""
    config = _config(ctx, output_format)
    with _library_errors():
        _check_format(config.output_format, (FORMAT_TEXT, FORMAT_JSON))
        if bp is not None:
            if weights is not None:
                raise LinkHomologyError("--bp and --weights are mutually exclusive")
            w, d = weights_from_exponents(parse_int_list(bp))
            link = link_descriptor(w, d)
        else:
            link = _resolve_link(weights, degree, fano)
        form = bp_exponents(link.weights, link.degree)
        mu = milnor_number(form) if form is not None else None
    if form is None:
        LinkDisplay.warning(f"no Brieskorn-Pham form for {link.weights}, d={link.degree}")
        raise typer.Exit(code=EXIT_NOT_FOUND)
    if config.output_format == FORMAT_JSON:
        _print_json({"weights": list(link.weights), "degree": link.degree,
                     "bp": form_to_dict(form, link.weights), "milnor": mu})
    else:
        print(f"weights {link.weights} d={link.degree}")
        LinkDisplay.form(form, link.weights)
        print(f"milnor number {mu}")


@app.command("chain-check")
def chain_check(
    ctx: typer.Context,
    weights: Optional[str] = WEIGHTS_OPTION,
    degree: Optional[int] = DEGREE_OPTION,
    fano: bool = FANO_OPTION,
    ordered: bool = typer.Option(False, "--ordered", help="Only try the weights in the order given."),
    output_format: str = TEXT_FORMAT_OPTION,
):
    """Orlik chain orderings of the weights. Exits 2 if there are none."""
    config = _config(ctx, output_format)
    with _library_errors():
        _check_format(config.output_format, (FORMAT_TEXT, FORMAT_JSON))
        link = _resolve_link(weights, degree, fano)
        if ordered:
            forms = [form for form in [chain_exponents(link.weights, link.degree)] if form is not None]
        else:
            forms = find_chain_orderings(link.weights, link.degree)
    if not forms:
        LinkDisplay.warning(f"no Orlik chain form for {link.weights}, d={link.degree}")
        raise typer.Exit(code=EXIT_NOT_FOUND)
    if config.output_format == FORMAT_JSON:
        _print_json({"weights": list(link.weights), "degree": link.degree,
                     "chain": [form_to_dict(form, link.weights) for form in forms]})
    else:
        for form in forms:
            LinkDisplay.form(form, link.weights)


# ----- Catalogs -----

@app.command()
def scan(
    ctx: typer.Context,
    input_path: str = typer.Option(..., "--input", "-i", help="Catalog CSV file, or - for stdin."),
    forms: str = typer.Option("bp,chain", "--forms", help="Forms to look for: bp, chain or both."),
    ke_only: bool = typer.Option(False, "--ke-only", help="Skip rows whose ke flag is 0."),
    no_homology: bool = typer.Option(False, "--no-homology", help="Do not compute homology."),
    min_w0: Optional[int] = typer.Option(None, "--min-w0", help="Smallest allowed w0."),
    max_w0: Optional[int] = typer.Option(None, "--max-w0", help="Largest allowed w0."),
    weights_per_row: int = typer.Option(DEFAULT_WEIGHTS_PER_ROW, "--weights-per-row", help="Weights per catalog row."),
    output_format: str = typer.Option(FORMAT_TABLE, "--format", "-f", help="table, json or csv."),
    progress: bool = typer.Option(False, "--progress", help="Show a progress bar on stderr."),
):
    """Scan a catalog for representable weights and report their homology."""
    config = _config(ctx, output_format)
    with _library_errors():
        text = sys.stdin.read() if input_path == "-" else Path(input_path).read_text(encoding="utf-8")
        options = ScanOptions(
            forms=frozenset(item.strip() for item in forms.split(",") if item.strip()),
            ke_only=ke_only,
            homology=not no_homology,
            min_w0=min_w0,
            max_w0=max_w0,
        )
        entries = parse_catalog(text, weights_per_row=weights_per_row)
        report = scan_catalog(entries, options, progress=progress)
        output = emit_report(report, config.output_format)
    print(output)


@app.command()
def table(ctx: typer.Context):
    """Recompute the ten reference rows. Exits 4 on any difference."""
    _config(ctx)
    with _library_errors():
        checks = check_reference_rows()
    for index, check in enumerate(checks, start=1):
        LinkDisplay.reference_row(index, check)
    if not all(check.match for check in checks):
        raise typer.Exit(code=EXIT_MISMATCH)


# ----- Oracle -----

@app.command()
def oracle(
    ctx: typer.Context,
    bp: str = typer.Option(..., "--bp", help="Brieskorn-Pham exponents A0,A1,..."),
    cap: Optional[int] = typer.Option(None, "--cap", help="Largest Milnor number to build (default 4096 or $LINKHOM_ORACLE_CAP)."),
):
    """Monodromy oracle next to the subset-sum algorithm. Exits 4 on disagreement."""
    with _library_errors():
        config = _config(ctx, FORMAT_TEXT, cap if cap is not None else oracle_cap_from_env())
        comparison = compare_with_algorithm(parse_int_list(bp), config.oracle_cap)
    LinkDisplay.comparison(comparison)
    if not comparison.match:
        raise typer.Exit(code=EXIT_MISMATCH)


@app.command()
def sweep(
    ctx: typer.Context,
    min_vars: int = typer.Option(3, "--min-vars", help="Fewest variables."),
    max_vars: int = typer.Option(5, "--max-vars", help="Most variables."),
    max_exponent: int = typer.Option(6, "--max-exponent", help="Largest exponent."),
    max_milnor: int = typer.Option(DEFAULT_SWEEP_CAP, "--max-milnor", help="Largest Milnor number."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write raw results as JSON."),
    progress: bool = typer.Option(False, "--progress", help="Show a progress bar on stderr."),
):
    """Compare oracle and algorithm over all small Brieskorn-Pham exponent tuples."""
    _config(ctx, FORMAT_TEXT, max_milnor)
    with _library_errors():
        runner = OracleSweep(sweep_cases(min_vars, max_vars, max_exponent, max_milnor), cap=max_milnor)
        stats = runner.run(progress=progress)
        if output is not None:
            runner.save_raw_data(output)
    LinkDisplay.sweep_summary(stats)
    for exponents in runner.describe_mismatches():
        LinkDisplay.warning(f"mismatch at {exponents}")
    if not runner.all_match:
        raise typer.Exit(code=EXIT_MISMATCH)


def _is_click_error(exc: BaseException, name: str) -> bool:
    """Match click exceptions by class name; typer may ship its own click build."""
    return any(cls.__name__ == name for cls in type(exc).__mro__)


def run(argv: Optional[List[str]] = None) -> int:
    """Run the app without letting click call sys.exit; returns the exit code."""
    command = typer.main.get_command(app)
    try:
        result = command.main(args=argv, prog_name="linkhom", standalone_mode=False)
    except Exception as exc:
        if _is_click_error(exc, "ClickException"):
            exc.show()
            return EXIT_INVALID_INPUT
        if _is_click_error(exc, "Abort"):
            return EXIT_INVALID_INPUT
        raise
    return result if isinstance(result, int) else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
