"""Ordinal arithmetic for the theta notation system and generalized Goodstein sequences."""
