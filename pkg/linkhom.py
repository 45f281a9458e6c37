#!/usr/bin/env python3
"""
Convenience script for the command-line interface.
Imports from src.cli.main
"""
import sys
from src.cli.main import run

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
