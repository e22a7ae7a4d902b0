"""
Numerical constants and tolerances shared across the workbench
"""

import math

# validators
DEFAULT_TOL = 1e-9
KRAUS_TOL = 1e-10
CLASSICAL_TOL = 1e-10
HERMITIAN_TOL = 1e-10
STATE_TOL = 1e-10
UNITARY_TOL = 1e-10
BOX_TOL = 1e-12
COMB_TOL = 1e-10

# witnesses
FIXED_POINT_TOL = 1e-9
SCHMIDT_TOL = 1e-10
CONDITION_NUMBER_LIMIT = 1e12

# games
LHV_STRATEGY_LIMIT = 10 ** 6
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
CLASSICAL_CHSH_BOUND = 2.0

DFP_DEFAULT_ALPHA = 1.0 / 6.0
DEFAULT_SEED = 1234

OUTPUT_DIR_ENV = "LOSE_WORKBENCH_OUTPUT_DIR"
CHANNEL_FORMAT_VERSION = "1.0"
