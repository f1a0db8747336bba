"""Constants used throughout the upcover module"""

# First line of every instance file: magic word and format version.
UPCOVER_INSTANCE_MAGIC = "upmclp"
UPCOVER_INSTANCE_VERSION = 1

# Comment marker in all line-oriented text formats.
UPCOVER_COMMENT = "#"

# Tolerance for comparisons on instances without the integer flag.
UPCOVER_FLOAT_TOLERANCE = 1e-9

# Default number of plan evaluations the brute-force oracle accepts.
UPCOVER_DEFAULT_WORK_BOUND = 10**8

# Environment variable overriding the oracle work bound.
UPCOVER_WORK_BOUND_ENV = "UPCOVER_WORK_BOUND"

# Column order of benchmark CSV output (header row is mandatory).
UPCOVER_CSV_HEADER = ["instance", "algo", "n", "m", "p", "R", "B", "value", "usec", "verified"]

# Algorithms, from most to least specific.
UPCOVER_ALGORITHMS = ["star", "path", "tree", "brute"]

# Network shapes known to the instance generator.
UPCOVER_SHAPES = ["star", "path", "tree", "graph"]

# Default parameter ranges for generated instances.
UPCOVER_GEN_MAX_LENGTH = 5
UPCOVER_GEN_MAX_COST = 3
UPCOVER_GEN_MAX_RADIUS = 4
UPCOVER_GEN_MAX_BUDGET = 5
UPCOVER_GEN_MAX_WEIGHT = 3
