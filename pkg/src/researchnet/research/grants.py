"""Researcher access grants.

Unrestricted data access is gated on a grant recorded by the bootstrap
administrator. The grant keeps a content hash of the signed agreement
document so every export is auditable back to a concrete signature.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from datetime import datetime


@dataclass(frozen=True)
class ResearcherGrant:
    user_id: str
    term_doc_hash: str
    signed_at: datetime
    granted_by: str
    active: bool = True

    def revoked(self) -> "ResearcherGrant":
        return replace(self, active=False)


def hash_term_document(document: str) -> str:
    return hashlib.sha256(document.encode("utf-8")).hexdigest()
