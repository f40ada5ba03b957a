"""Tests for regtool."""
