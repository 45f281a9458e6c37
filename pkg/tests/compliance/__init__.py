"""Layering and documentation checks"""
