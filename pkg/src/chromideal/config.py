from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DomainError

LOG_LEVEL_ENV = "CHROMIDEAL_LOG_LEVEL"


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by every command.

    ``cap_vars`` bounds registries checked by exhaustive subset enumeration,
    ``cap_subsets`` bounds the number of non-CI generators the
    inclusion-exclusion sum will expand (``2**cap_subsets`` terms), and
    ``cap_poly`` bounds the vertex count for deletion-contraction.
    """

    cap_vars: int = 20
    cap_subsets: int = 24
    cap_poly: int = 16
    seed: int = 0
    log_level: str = "WARNING"
    output_format: str = "json"

    def __post_init__(self):
        for name in ("cap_vars", "cap_subsets", "cap_poly"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        if self.output_format not in ("json", "text"):
            raise DomainError(f"unknown output format {self.output_format!r}")

    @staticmethod
    def env_log_level(default: str = "WARNING") -> str:
        return os.environ.get(LOG_LEVEL_ENV, default).upper()
