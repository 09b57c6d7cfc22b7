from __future__ import annotations

import os
from dataclasses import dataclass, field

from .hierarchy import DEFAULT_MAX_GENUS

FORMATS = ("json", "csv", "text")


def default_precision() -> int:
    return int(os.environ.get("GENUS_ENGINE_PRECISION", "200"))


@dataclass
class EngineConfig:
    """Run parameters shared by the CLI and the scripts.

    The coupling is entered as ``t`` (the partition-function convention) and
    used internally as ``s = -t``.
    """

    nu: int = 2
    g_max: int = 3
    series_order: int | None = None
    precision: int = field(default_factory=default_precision)
    fmt: str = "json"
    genus_cap: int = DEFAULT_MAX_GENUS
    t: object = None

    def __post_init__(self):
        if self.nu < 2:
            raise ValueError(f"nu must be >= 2, got {self.nu}")
        if self.g_max < 0 or self.g_max > self.genus_cap:
            raise ValueError(f"g_max must be in [0, {self.genus_cap}], got {self.g_max}")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.precision < 53:
            raise ValueError("precision below 53 bits is not supported")

    @property
    def s(self):
        return None if self.t is None else -self.t

    def order_for(self, g: int) -> int:
        return self.series_order if self.series_order is not None else 3 * g + 12
