# Exit codes for the command-line front end
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3

# Brute-force feasibility bounds (cells / elements). Exceeding one is an error,
# never a silent truncation.
FERRERS_DIMENSION_MAX_CELLS = 12
MIN_COMPLETION_MAX_CELLS = 20
RELATIONS_TOTAL_MAX_N = 24

ORACLE_MAX_N = 10
COMPLETE_COBWEBS_MAX_N = 8
PRODUCT_SUBSETS_MAX_CELLS = 20
SURJECTIONS_MAX_MAPS = 10**7
GRADED_CHAINS_MAX_CELLS = 20

# real_exp gives up after this many series terms
REAL_EXP_MAX_TERMS = 2000
DEFAULT_EXP_TOL = 1e-12

DEFAULT_FERRERS_MAX_D = 3

# Defaults of the verification suite
DEFAULT_SEED = 0
DEFAULT_VERIFY_MAX_N = 7
