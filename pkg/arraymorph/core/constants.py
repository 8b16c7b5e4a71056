DEFAULT_SEED = 20240  # Fixed so casual runs are reproducible

# Chain depth bounds of the F helper (one step per factor pair)
MIN_HIDE_COUNT = 1
MAX_HIDE_COUNT = 13

# Only residues of the final modulus 2+3 can come out of F
HIDEABLE_LIMIT = 5

# Potency and cost weights
POTENCY_WEIGHT = 12.50
QUALITY_POTENCY_FACTOR = 0.4
STORAGE_WEIGHT = 0.15
RUNTIME_WEIGHT = 0.45

# Verify defaults
VERIFY_SIZE_LIMIT = 300
VERIFY_OPS_PER_CASE = 10_000

# Process exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2
