"""Unit tests for linkhom_core"""
