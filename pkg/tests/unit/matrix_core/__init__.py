"""
Unit tests for matrix_core module
"""
