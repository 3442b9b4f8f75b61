"""
Unit tests for ferrers module
"""
