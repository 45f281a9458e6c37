"""Integration tests across catalog, CLI and oracle"""
