#!/usr/bin/env python3
"""Regenerates the committed image fixtures in this directory.

Every pixel follows a closed-form formula that the reader tests recompute,
so the fixtures double as known-answer inputs. Requires Pillow and numpy.
"""

import pathlib

import numpy as np
from PIL import Image

HERE = pathlib.Path(__file__).resolve().parent


def gray8(w, h, f):
    return np.fromfunction(lambda y, x: f(x, y) % 256, (h, w), dtype=np.int64).astype(np.uint8)


def gray16(w, h, f):
    return np.fromfunction(lambda y, x: f(x, y) % 65536, (h, w), dtype=np.int64).astype(np.uint16)


def main():
    # 8-bit grayscale PNG: v = (17x + 29y) mod 256
    Image.fromarray(gray8(13, 7, lambda x, y: 17 * x + 29 * y), mode="L").save(
        HERE / "gray8.png"
    )

    # 16-bit grayscale PNG: raw = (4097x + 911y + 3) mod 65536
    a16 = gray16(9, 5, lambda x, y: 4097 * x + 911 * y + 3)
    Image.fromarray(a16, mode="I;16").save(HERE / "gray16.png")

    # RGB PNG: r = (3x+5y), g = (7x+11y), b = (13x+17y), each mod 256
    r = gray8(8, 6, lambda x, y: 3 * x + 5 * y)
    g = gray8(8, 6, lambda x, y: 7 * x + 11 * y)
    b = gray8(8, 6, lambda x, y: 13 * x + 17 * y)
    Image.fromarray(np.dstack([r, g, b]), mode="RGB").save(HERE / "rgb.png")

    # RGBA PNG: same RGB planes, alpha = (29x + 7y) mod 256 (must be ignored)
    a = gray8(8, 6, lambda x, y: 29 * x + 7 * y)
    Image.fromarray(np.dstack([r, g, b, a]), mode="RGBA").save(HERE / "rgba.png")

    # Paletted PNG with a grayscale palette: index = (11x + 19y) mod 256
    idx = gray8(10, 4, lambda x, y: 11 * x + 19 * y)
    pal = Image.fromarray(idx, mode="P")
    pal.putpalette([c for i in range(256) for c in (i, i, i)])
    pal.save(HERE / "palette.png")

    # 1-bit PNG: v = (x + y) mod 2, expands to 0/255
    bits = np.fromfunction(lambda y, x: (x + y) % 2 == 1, (6, 9))
    Image.fromarray(bits).save(HERE / "bilevel.png")

    # 8-bit grayscale TIFF, LZW-compressed: v = (23x + 31y) mod 256
    Image.fromarray(gray8(11, 6, lambda x, y: 23 * x + 31 * y), mode="L").save(
        HERE / "gray8_lzw.tif", compression="tiff_lzw"
    )

    # 16-bit grayscale TIFF: raw = (5001x + 1203y + 17) mod 65536
    t16 = gray16(7, 5, lambda x, y: 5001 * x + 1203 * y + 17)
    Image.fromarray(t16, mode="I;16").save(HERE / "gray16.tif")

    print("fixtures written to", HERE)


if __name__ == "__main__":
    main()
