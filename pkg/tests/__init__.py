"""linkhom test suite"""
