"""
Service layer unit tests.
Tests business logic without database using mock repositories.
"""
