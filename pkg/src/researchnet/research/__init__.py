"""Consent-gated research exports and interaction-graph analytics."""
