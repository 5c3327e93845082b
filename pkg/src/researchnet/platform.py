"""Application facade: wires storage, services, and sessions together.

The platform owns the bootstrap administrator: a config-seeded moderator
account that is the only principal allowed to promote moderators and to
sign researcher grants. On a persistent store the account is recognized
by handle across restarts instead of being recreated.
"""

from __future__ import annotations

from .api.auth import SecretHasher, Session, TokenIssuer
from .clock import Clock, SystemClock
from .config import AppConfig
from .domain.models import Role, User
from .domain.service import DomainService
from .errors import BadCredentials, NotAuthenticated
from .events import InteractionEvent
from .gamification.projection import GamificationProjection
from .research.service import ResearchService
from .storage.base import Store
from .storage.memory import InMemoryStore
from .storage.sqlite import SQLiteStore
from .surveys.service import SurveyService


class Platform:
    def __init__(
        self,
        config: AppConfig | None = None,
        store: Store | None = None,
        clock: Clock | None = None,
    ):
        self.config = config or AppConfig()
        self.clock = clock or SystemClock()
        if store is not None:
            self.store = store
        elif self.config.storage_path:
            self.store = SQLiteStore(self.config.storage_path)
        else:
            self.store = InMemoryStore()

        self.hasher = SecretHasher(
            n=self.config.scrypt_n, r=self.config.scrypt_r, p=self.config.scrypt_p
        )
        self.tokens = TokenIssuer(self.clock, ttl_hours=self.config.token_ttl_hours)
        self.domain = DomainService(
            self.store,
            self.clock,
            terms_version=self.config.terms_version,
            attachment_cap_bytes=self.config.attachment_cap_bytes,
        )
        self.surveys = SurveyService(self.store, self.clock)
        self.projection = GamificationProjection(self.store, self.config.gamification)

        admin = self.store.get_user_by_handle(self.config.admin_handle)
        if admin is None:
            admin, _ = self.domain.register_user(
                handle=self.config.admin_handle,
                display_name="Administrator",
                terms_version=self.config.terms_version,
                role=Role.MODERATOR,
                secret_hash=self.hasher.hash(self.config.admin_secret),
            )
        self.admin_id = admin.user_id

        self.research = ResearchService(self.store, self.clock, admin_id=self.admin_id)

    # --- accounts ---------------------------------------------------------

    def register(
        self, handle: str, display_name: str, secret: str, terms_version: str | None
    ) -> tuple[User, InteractionEvent]:
        return self.domain.register_user(
            handle=handle,
            display_name=display_name,
            terms_version=terms_version,
            secret_hash=self.hasher.hash(secret),
        )

    def authenticate(self, handle: str, secret: str) -> tuple[User, Session]:
        user = self.store.get_user_by_handle(handle)
        if user is None:
            raise BadCredentials("unknown handle or wrong secret")
        stored = self.store.secret_hash_for(user.user_id)
        if not stored or not self.hasher.verify(secret, stored):
            raise BadCredentials("unknown handle or wrong secret")
        return user, self.tokens.issue(user.user_id)

    def user_for_token(self, token: str) -> User:
        user_id = self.tokens.resolve(token)
        if user_id is None:
            raise NotAuthenticated("missing, unknown, or expired token")
        user = self.store.get_user(user_id)
        if user is None:
            raise NotAuthenticated("account no longer exists")
        return user

    def close(self) -> None:
        self.store.close()
