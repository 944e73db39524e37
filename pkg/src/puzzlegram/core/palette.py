"""The 16-color game palette.

Colors are 16 evenly spaced hues (22.5 degrees apart) at saturation 0.80
and value 0.90, converted to RGB and rounded half-up per channel. The
formula is fixed so every client and server renders identical colors.
"""

from __future__ import annotations

import colorsys
import math

NUM_COLORS = 16

_SATURATION = 0.80
_VALUE = 0.90
_HUE_STEP_DEG = 22.5


class ColorPalette:
    """Ordered, immutable list of 16 distinct RGB triples."""

    def __init__(self, colors: tuple[tuple[int, int, int], ...]):
        self.colors = colors
        self._index = {rgb: i for i, rgb in enumerate(colors)}

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, index: int) -> tuple[int, int, int]:
        return self.colors[index]

    def index_of(self, rgb: tuple[int, int, int]) -> int:
        return self._index[rgb]

    def hex(self, index: int) -> str:
        r, g, b = self.colors[index]
        return f"#{r:02X}{g:02X}{b:02X}"


def _round_channel(value: float) -> int:
    return int(math.floor(value * 255.0 + 0.5))


def build_palette() -> ColorPalette:
    colors = []
    for i in range(NUM_COLORS):
        h = (i * _HUE_STEP_DEG) / 360.0
        r, g, b = colorsys.hsv_to_rgb(h, _SATURATION, _VALUE)
        colors.append((_round_channel(r), _round_channel(g), _round_channel(b)))
    return ColorPalette(tuple(colors))


# The palette is a pure function of constants; share one instance.
PALETTE = build_palette()
