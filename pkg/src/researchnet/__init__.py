"""Research-instrumented community platform.

A forum-style social network whose every user interaction lands in an
append-only ledger. The ledger feeds a deterministic reward engine
(XP, nine levels, nine medals, missions) and, behind explicit consent
gates, the research exports: raw events, the user roster, and the
interaction graph with its structural metrics.
"""

__version__ = "1.0.0"

from .platform import Platform  # noqa: E402
from .config import AppConfig, load_app_config  # noqa: E402

__all__ = ["AppConfig", "Platform", "__version__", "load_app_config"]
