"""Credential hashing and bearer-token session management.

Secrets are stored as salted scrypt digests; the encoded form carries its
own cost parameters so they can be raised later without invalidating
existing hashes. Tokens are opaque random strings with a fixed lifetime
measured against the injected clock, so expiry is testable without
sleeping.
"""

from __future__ import annotations

import base64
import hashlib
import hmac
import secrets
import threading
from dataclasses import dataclass
from datetime import datetime, timedelta

from ..clock import Clock

_SCHEME = "scrypt"


def _b64(raw: bytes) -> str:
    return base64.urlsafe_b64encode(raw).decode("ascii").rstrip("=")


def _unb64(text: str) -> bytes:
    return base64.urlsafe_b64decode(text + "=" * (-len(text) % 4))


class SecretHasher:
    """scrypt with per-secret random salt.

    Encoded form: ``scrypt$<n>$<r>$<p>$<salt>$<digest>`` (salt and digest
    base64url, unpadded).
    """

    def __init__(self, n: int = 2**14, r: int = 8, p: int = 1):
        self.n = n
        self.r = r
        self.p = p

    def hash(self, secret: str) -> str:
        salt = secrets.token_bytes(16)
        digest = hashlib.scrypt(
            secret.encode("utf-8"), salt=salt, n=self.n, r=self.r, p=self.p, dklen=32
        )
        return f"{_SCHEME}${self.n}${self.r}${self.p}${_b64(salt)}${_b64(digest)}"

    def verify(self, secret: str, encoded: str) -> bool:
        try:
            scheme, n, r, p, salt, digest = encoded.split("$")
            if scheme != _SCHEME:
                return False
            expected = _unb64(digest)
            actual = hashlib.scrypt(
                secret.encode("utf-8"),
                salt=_unb64(salt),
                n=int(n),
                r=int(r),
                p=int(p),
                dklen=len(expected),
            )
        except (ValueError, TypeError):
            return False
        return hmac.compare_digest(actual, expected)


@dataclass(frozen=True)
class Session:
    token: str
    user_id: str
    expires_at: datetime


class TokenIssuer:
    """Issues and resolves bearer tokens. Expired or unknown tokens
    resolve to nothing; there is no refresh, clients re-authenticate."""

    def __init__(self, clock: Clock, ttl_hours: int = 24):
        self._clock = clock
        self._ttl = timedelta(hours=ttl_hours)
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def issue(self, user_id: str) -> Session:
        token = secrets.token_urlsafe(32)
        session = Session(token=token, user_id=user_id, expires_at=self._clock.now() + self._ttl)
        with self._lock:
            self._sessions[token] = session
        return session

    def resolve(self, token: str) -> str | None:
        """user_id for a live token, else None."""
        with self._lock:
            session = self._sessions.get(token)
            if session is None:
                return None
            if self._clock.now() >= session.expires_at:
                del self._sessions[token]
                return None
            return session.user_id

    def revoke(self, token: str) -> None:
        with self._lock:
            self._sessions.pop(token, None)
