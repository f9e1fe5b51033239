"""Frozen empirical scaling constants.

Each constant is the maximum of a scale-free dilation ratio measured once,
on the stated seeded instances, when this module was last calibrated. The
regression checks in the test suite and `geospan verify` assert that current
builds stay within HEADROOM of these values; they are not theoretical bounds.

Recalibrate by running scripts/calibrate.py and pasting its output here.
"""

# max of dilation * (k+1) / n for sparse_spanner_2d over gen_random(n, 2, 7),
# n in {64, 128, 256}, k in {0, 1, 3, 7, 15}
C_2D = 0.9605  # measured 0.9604935515953864

# same grid for sparse_spanner_highd (t = 2) on the same instances
C_HD = 1.7105  # measured 1.7104827310922446

# max of dilation * (k+1)^(1/D) / spread for bounded_spread_spanner on the
# 16x16 integer grid, k in {0, 3, 8, 24}
C_SPREAD = 4.9699  # measured 4.969848480983499

HEADROOM = 1.05
