from __future__ import annotations

from .settings import BettiSettings, load_settings

__all__ = ["BettiSettings", "load_settings"]
