"""Resource caps for exhaustive computations."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_CAP = "PERMCHECK_CAP"


@dataclass(frozen=True)
class Limits:
    max_order: int = 2000
    lattice_cap: int = 360
    max_degree: int = 32

    @classmethod
    def from_env(cls) -> "Limits":
        raw = os.environ.get(ENV_CAP)
        if raw is None:
            return cls()
        return cls(max_order=int(raw))

    def with_overrides(self, **kw) -> "Limits":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT_LIMITS = Limits()
