from __future__ import annotations

from hypothesis import settings

settings.register_profile("pkg", deadline=None)
settings.load_profile("pkg")
