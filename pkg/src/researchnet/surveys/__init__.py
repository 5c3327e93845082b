"""Community surveys with immutable single responses."""
