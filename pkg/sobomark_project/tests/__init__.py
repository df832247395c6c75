"""Tests package for sobomark_project."""
