"""
Unit tests for counting module
"""
