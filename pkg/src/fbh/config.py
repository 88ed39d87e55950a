"""Default tolerances and budgets.

Every threshold used by the library, the CLI suites and the acceptance tests
is defined here so there is exactly one place to change it.
"""

SCHEMA_VERSION = "1.0"

# domain geometry
BOUNDARY_TOL = 1e-10
UNIT_VECTOR_TOL = 1e-12
LEVI_EIG_TOL = 1e-10
# Levi eigenvalues decay like exp(-mu |z|^2); randomized checks keep mu |z|^2 below this
LEVI_SAMPLE_MAX_EXPONENT = 9.0

# kernel series
SERIES_TOL = 1e-12
SERIES_MAX_TERMS = 100_000
FD_STEP = 1e-4
# relative factor applied to SERIES_TOL when evaluating log K for finite differences
FD_SERIES_TOL_FACTOR = 1e-4

# automorphism group
UNITARY_TOL = 1e-10
GROUP_LAW_TOL = 1e-12
DECOMPOSE_TOL = 1e-10

# proper maps
RESIDUAL_FLOOR = 1e-300
BRANCH_MARGIN = 0.05
BRANCH_PROBE_RADIUS = 3.0

# quadrature / Monte Carlo
QUAD_POINTS = 64
MC_SAMPLES = 100_000
MC_SIGMAS = 3.0
REPRODUCING_MAX_DEGREE = 6

# acceptance thresholds
ACC_ANCHOR_TOL = 1e-12
ACC_CLOSED_FORM_TOL = 1e-11
ACC_DUALITY_TOL = 1e-8
ACC_VOLUME_TOL = 1e-10
ACC_INVARIANCE_TOL = 1e-9
ACC_TRANSFORM_TOL = 1e-9
ACC_TRANSFORM_NEAR_BRANCH_TOL = 1e-6
ACC_MU_SCALING_TOL = 1e-10
ACC_T_EIG_FLOOR = 1e-8
ACC_T_FD_TOL = 1e-6
ACC_LIGOCKA_TOL = 1e-10
