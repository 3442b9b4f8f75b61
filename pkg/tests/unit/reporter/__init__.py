"""
Unit tests for reporter module
"""
