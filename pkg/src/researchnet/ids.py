"""Opaque id generation. Prefixes make ids self-describing in exports."""

import uuid


def new_id(prefix: str) -> str:
    return f"{prefix}_{uuid.uuid4().hex}"
