"""
Unit tests for models module
"""
