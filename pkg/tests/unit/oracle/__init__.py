"""
Unit tests for oracle module
"""
