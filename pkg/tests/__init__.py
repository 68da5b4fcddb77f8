"""Tests for the powerdom package."""
