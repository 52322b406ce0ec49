"""
Test suite for GFC-Jac

Unit tests for each core layer plus CLI and smoke tests.
"""
