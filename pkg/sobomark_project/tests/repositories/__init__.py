"""
Repository layer integration tests.
Tests database operations with real database.
"""
