"""Deterministic reward engine: XP, levels, medals, missions."""
