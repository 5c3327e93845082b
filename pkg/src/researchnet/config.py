"""Deployment configuration.

Values come from an optional YAML file, then RESEARCHNET_* environment
variables override individual keys. Everything has a workable default so
`researchnet serve` runs out of the box with an in-memory store.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import yaml

from .domain.models import DEFAULT_ATTACHMENT_CAP_BYTES
from .gamification.config import GamificationConfig, load_config as load_gamification_config

DEFAULT_TERMS_VERSION = "2026-01"
DEFAULT_TERMS_DOCUMENT = (
    "Participation terms\n"
    "\n"
    "1. Content you publish here is visible to every registered member.\n"
    "2. Interaction records (posts, comments, likes, shares, chats, survey\n"
    "   answers) are retained for research on collaboration networks.\n"
    "3. Only researchers who signed a data-use agreement may export data,\n"
    "   and exports are bounded to what these terms cover.\n"
    "4. Registering an account records your acceptance of this version of\n"
    "   the terms.\n"
)


@dataclass(frozen=True)
class AppConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    storage_path: str | None = None  # None keeps everything in memory
    admin_handle: str = "admin"
    admin_secret: str = "admin-secret"
    terms_version: str = DEFAULT_TERMS_VERSION
    terms_document: str = DEFAULT_TERMS_DOCUMENT
    attachment_cap_bytes: int = DEFAULT_ATTACHMENT_CAP_BYTES
    token_ttl_hours: int = 24
    scrypt_n: int = 2**14
    scrypt_r: int = 8
    scrypt_p: int = 1
    gamification: GamificationConfig = field(default_factory=GamificationConfig)


_INT_KEYS = {"port", "attachment_cap_bytes", "token_ttl_hours", "scrypt_n", "scrypt_r", "scrypt_p"}
_STR_KEYS = {
    "host", "storage_path", "admin_handle", "admin_secret",
    "terms_version", "terms_document",
}


def load_app_config(
    path: str | Path | None = None, env: Mapping[str, str] | None = None
) -> AppConfig:
    env = os.environ if env is None else env
    raw: dict[str, Any] = {}
    if path is not None:
        loaded = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
        if loaded is not None:
            if not isinstance(loaded, dict):
                raise ValueError(f"config root must be a mapping, got {type(loaded).__name__}")
            raw.update(loaded)

    gamification_path = raw.pop("gamification_config", None)
    terms_document_path = raw.pop("terms_document_path", None)

    for key in list(_INT_KEYS | _STR_KEYS) + ["gamification_config", "terms_document_path"]:
        override = env.get(f"RESEARCHNET_{key.upper()}")
        if override is None:
            continue
        if key == "gamification_config":
            gamification_path = override
        elif key == "terms_document_path":
            terms_document_path = override
        else:
            raw[key] = override

    unknown = set(raw) - _INT_KEYS - _STR_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")

    kwargs: dict[str, Any] = {}
    for key, value in raw.items():
        kwargs[key] = int(value) if key in _INT_KEYS else value
    if terms_document_path is not None:
        kwargs["terms_document"] = Path(terms_document_path).read_text(encoding="utf-8")
    if gamification_path is not None:
        kwargs["gamification"] = load_gamification_config(gamification_path)
    return AppConfig(**kwargs)
