"""Numerical tolerances, pinned once for the whole package.

Double-precision eigendecompositions at desk scale (d <= 16) reach these
comfortably; loosening them is a red flag, not a knob.
"""

EPS_PSD = 1e-9        # eigenvalue floor for positivity checks
EPS_NORM = 1e-9       # trace-one / completeness / unit-norm checks
EPS_DILATION = 1e-10  # dilation roundtrip agreement
EPS_UA = 1e-9         # zero-error feasibility threshold for unambiguous decoding
EPS_OPT = 1e-6        # optimizer-vs-bound comparisons
EPS_FACT = 1e-6       # residual below which a factorization counts as exact
EPS_IMPL = 1e-6       # implementation-vs-target matrix agreement
