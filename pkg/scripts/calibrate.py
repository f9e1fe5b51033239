#!/usr/bin/env python
"""Recompute the scaling-regression constants frozen in geospan/calibration.py.

Runs the same builder sweeps as `verify --suite all` and prints assignment
lines ready to paste. Constants are rounded up at the fourth decimal so the
frozen value is never below the measured worst ratio.
"""

import math

from geospan.verification import (
    scaling_ratio_2d,
    scaling_ratio_highd,
    scaling_ratio_spread,
)


def main() -> None:
    for name, fn in (
        ("C_2D", scaling_ratio_2d),
        ("C_HD", scaling_ratio_highd),
        ("C_SPREAD", scaling_ratio_spread),
    ):
        measured = fn()
        frozen = math.ceil(measured * 10_000) / 10_000
        print(f"{name} = {frozen:.4f}  # measured {measured!r}")


if __name__ == "__main__":
    main()
