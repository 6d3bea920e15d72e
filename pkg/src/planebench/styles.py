"""Stroke and fill styling attached to drawable primitives."""
from __future__ import annotations

from dataclasses import dataclass

RGB = tuple[int, int, int]

BLACK: RGB = (0, 0, 0)
WHITE: RGB = (255, 255, 255)

# Named palette used by generators when they need to talk about colors.
PALETTE: dict[str, RGB] = {
    "black": (0, 0, 0),
    "red": (220, 30, 30),
    "blue": (30, 60, 220),
    "green": (20, 140, 50),
    "orange": (240, 130, 20),
    "purple": (140, 40, 180),
    "brown": (140, 90, 40),
    "gray": (128, 128, 128),
    "pink": (235, 100, 160),
    "cyan": (0, 160, 190),
}

PATTERNS = ("solid", "dashed", "dotted")


@dataclass(frozen=True)
class StrokeStyle:
    """Visual attributes of one primitive. Width is in raster pixels at the
    reference 512x512 resolution; rasterizers rescale proportionally."""

    color: RGB = BLACK
    width: float = 2.0
    pattern: str = "solid"
    fill: RGB | None = None

    def __post_init__(self) -> None:
        if self.width <= 0:
            raise ValueError(f"stroke width must be positive, got {self.width}")
        for channel in self.color:
            if not 0 <= channel <= 255:
                raise ValueError(f"RGB component out of range: {self.color}")
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown stroke pattern {self.pattern!r}")
        if self.fill is not None:
            for channel in self.fill:
                if not 0 <= channel <= 255:
                    raise ValueError(f"RGB component out of range: {self.fill}")


DEFAULT_STYLE = StrokeStyle()
