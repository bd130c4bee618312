"""Package wide defaults."""
# Absolute tolerance for every grade comparison.
EPS = 1e-9

# Upper bound on the number of new members topology generation may add.
MAX_GENERATED_MEMBERS = 10000

DEFAULT_ALPHA = 0.5
DEFAULT_TOLERANCE = 0.005

# Display rounding of similarity/approximation tables and of score tables.
MATRIX_DECIMALS = 2
SCORE_DECIMALS = 3

UNDETERMINED = 'Undetermined'
