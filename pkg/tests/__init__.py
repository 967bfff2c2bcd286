"""Tests for realauto."""
