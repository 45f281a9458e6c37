"""Catalog scanning, the oracle sweep, the CLI and its terminal output"""
