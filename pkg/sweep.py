#!/usr/bin/env python3
"""
Convenience script to sweep the Brieskorn-Pham oracle.
Imports from src.analysis.oracle_sweep
"""
import sys
from linkhom_core import DEFAULT_SWEEP_CAP
from src.analysis.oracle_sweep import OracleSweep, sweep_cases
from src.ui.display import LinkDisplay

if __name__ == "__main__":
    max_milnor = DEFAULT_SWEEP_CAP
    output = None

    if len(sys.argv) > 1:
        max_milnor = int(sys.argv[1])
    if len(sys.argv) > 2:
        output = sys.argv[2]

    print(f"Sweeping exponents in [2,6], 3 to 5 variables, mu <= {max_milnor}")

    runner = OracleSweep(sweep_cases(max_milnor=max_milnor), cap=max_milnor)
    stats = runner.run(progress=True)
    if output:
        runner.save_raw_data(output)
        print(f"Raw results written to {output}")
    LinkDisplay.sweep_summary(stats)
    sys.exit(0 if runner.all_match else 4)
