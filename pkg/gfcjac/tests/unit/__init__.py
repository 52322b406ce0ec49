"""
Unit tests for GFC-Jac core functionality
"""
