"""Domain entities for the promotion feature."""
from .promotion import (
    ExtArray,
    PromotionEngine,
    engine_for,
    interval_root,
    promotion_engine,
    root_interval,
)

__all__ = [
    "ExtArray",
    "PromotionEngine",
    "engine_for",
    "interval_root",
    "promotion_engine",
    "root_interval",
]
