"""Deterministic image encoding.

PPM (binary P6) is the golden-file format: the byte stream is fixed by
the buffer alone.  PNG goes through Pillow with fixed settings; only
pixel content is guaranteed, not the exact byte stream.
"""
from __future__ import annotations

import io
from dataclasses import dataclass

from PIL import Image


@dataclass(frozen=True)
class ImageBuffer:
    width: int
    height: int
    pixels: bytes  # row-major RGB triples, row 0 first

    def __post_init__(self):
        if len(self.pixels) != self.width * self.height * 3:
            raise ValueError(
                f"pixel buffer has {len(self.pixels)} bytes, "
                f"expected {self.width * self.height * 3}")


def write_ppm(img: ImageBuffer) -> bytes:
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels


def write_png(img: ImageBuffer) -> bytes:
    im = Image.frombytes("RGB", (img.width, img.height), img.pixels)
    out = io.BytesIO()
    im.save(out, format="PNG", optimize=False, compress_level=6)
    return out.getvalue()


def read_png(data: bytes) -> ImageBuffer:
    im = Image.open(io.BytesIO(data)).convert("RGB")
    return ImageBuffer(im.width, im.height, im.tobytes())
