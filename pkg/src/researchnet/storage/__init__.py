"""Persistence contract and its in-memory and SQLite implementations."""
