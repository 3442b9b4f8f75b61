"""
Unit tests for CLI module
"""
