"""Error hierarchy shared by every layer.

Each error carries the HTTP status the API layer maps it to, so route
handlers never need per-error translation tables.
"""


class PlatformError(Exception):
    """Base class for every rejectable condition in the platform."""

    http_status = 400

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.__class__.__name__)
        self.detail = detail or self.__class__.__name__

    @property
    def code(self) -> str:
        return self.__class__.__name__


# --- authentication / authorization -----------------------------------------

class BadCredentials(PlatformError):
    http_status = 401


class NotAuthenticated(PlatformError):
    http_status = 401


class NotModerator(PlatformError):
    http_status = 403


class NotCommunityModerator(PlatformError):
    http_status = 403


class NotAdministrator(PlatformError):
    http_status = 403


class NotAuthorizedResearcher(PlatformError):
    http_status = 403


# --- registration / consent ---------------------------------------------------

class DuplicateHandle(PlatformError):
    http_status = 409


class TermsNotAccepted(PlatformError):
    http_status = 422


# --- entity lookups -----------------------------------------------------------

class UnknownUser(PlatformError):
    http_status = 404


class UnknownCommunity(PlatformError):
    http_status = 404


class UnknownDiscussion(PlatformError):
    http_status = 404


class UnknownPost(PlatformError):
    http_status = 404


class UnknownRecipient(PlatformError):
    http_status = 404


class UnknownSurvey(PlatformError):
    http_status = 404


# --- content validation -------------------------------------------------------

class DuplicateTitle(PlatformError):
    http_status = 409


class EmptyPost(PlatformError):
    http_status = 422


class EmptyComment(PlatformError):
    http_status = 422


class EmptyMessage(PlatformError):
    http_status = 422


class FieldTooLarge(PlatformError):
    http_status = 422


class AttachmentTooLarge(PlatformError):
    http_status = 422


class UnsupportedAttachmentKind(PlatformError):
    http_status = 422


class InvalidAttachment(PlatformError):
    http_status = 422


class AlreadyLiked(PlatformError):
    http_status = 409


# --- surveys ------------------------------------------------------------------

class BadOptionCount(PlatformError):
    http_status = 422


class DuplicateOptions(PlatformError):
    http_status = 422


class SurveyClosed(PlatformError):
    http_status = 409


class AlreadyAnswered(PlatformError):
    http_status = 409


class AlreadyClosed(PlatformError):
    http_status = 409


class OptionOutOfRange(PlatformError):
    http_status = 422


# --- gamification -------------------------------------------------------------

class LevelOutOfRange(PlatformError):
    http_status = 422


class OutOfOrderEvent(PlatformError):
    http_status = 500


class BadGamificationConfig(PlatformError):
    http_status = 500


# --- research export ----------------------------------------------------------

class EmptyTermDocument(PlatformError):
    http_status = 422


class InvalidRange(PlatformError):
    http_status = 400


class UnknownKind(PlatformError):
    http_status = 400


# --- API plumbing -------------------------------------------------------------

class LimitOutOfRange(PlatformError):
    http_status = 400


class BadCursor(PlatformError):
    http_status = 400


class UnknownField(PlatformError):
    http_status = 400
