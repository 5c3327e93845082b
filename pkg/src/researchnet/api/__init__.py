"""HTTP service: sessions, pagination, sparse fieldsets, compression."""
