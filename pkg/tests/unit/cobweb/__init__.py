"""
Unit tests for cobweb module
"""
