#!/usr/bin/env python3
"""
Compliance: README.md documents the commands, the exit codes and the layering
"""

from pathlib import Path

import pytest

from linkhom_core import EXIT_CONVENTION, EXIT_INVALID_INPUT, EXIT_MISMATCH, EXIT_NOT_FOUND, EXIT_OK
from src.cli.main import app

README = Path(__file__).resolve().parents[2] / 'README.md'


@pytest.fixture(scope="module")
def content():
    return README.read_text(encoding='utf-8')


def test_readme_sections(content):
    """Test that README contains the main sections"""
    for heading in ('## Quick Start', '## Exit Codes', '## Architecture',
                    '### Single Source of Truth', '### CLI Layer Purity', '## Project Structure'):
        assert heading in content, f"Missing {heading} section"


def test_readme_mentions_every_command(content):
    """Test that every registered subcommand appears in README"""
    for command in app.registered_commands:
        name = command.name or command.callback.__name__
        assert f"linkhom.py {name}" in content, f"README does not show `{name}`"


def test_readme_exit_codes(content):
    """Test that the exit code table matches the constants"""
    for code in (EXIT_OK, EXIT_INVALID_INPUT, EXIT_NOT_FOUND, EXIT_CONVENTION, EXIT_MISMATCH):
        assert f"| {code} |" in content


def test_readme_example_output(content):
    """Test that the homology example shows the reference answer"""
    assert 'H_3 = Z^10 ⊕ Z/55 ⊕ (Z/5)^4' in content
    assert 'LINKHOM_ORACLE_CAP' in content


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
