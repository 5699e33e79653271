"""Constants shared across the erschema.audit package."""

# Environment variables
ENV_POOL_CAP = 'ERSCHEMA_POOL_CAP'
ENV_LOG_LEVEL = 'ERSCHEMA_LOG_LEVEL'
ENV_LOG_DIR = 'ERSCHEMA_LOG_DIR'

LOGGER_NAME = 'erschema.audit'
LOG_FILE_NAME = 'erschema-audit.log'
DEFAULT_LOG_LEVEL = 'WARNING'

# Instance enumeration bounds
DEFAULT_POOL_SIZE = 2
DEFAULT_POOL_CAP = 3
RELATION_CAP = 3

# Model families. 'n' marks a many-side min greater than one, expanded
# through FamilySpec.many_side_min_samples.
MANY_SIDE_MIN = 'n'
UNBOUNDED_TOKEN = 'N'
DEFAULT_MAX_SAMPLES = (1, 2, 3, UNBOUNDED_TOKEN)
DEFAULT_MANY_SIDE_MIN_SAMPLES = (2,)
ONE_TO_ONE_MIN_ROWS = ((1, 0), (0, 1), (0, 0), (1, 1))
ONE_TO_MANY_MIN_ROWS = ((1, 0), (0, 1), (0, 0), (1, 1), (1, MANY_SIDE_MIN), (0, MANY_SIDE_MIN))
MANY_TO_MANY_MIN_ROWS = ((0, 0), (0, 1), (1, 0), (1, 1))
DEFAULT_RELATIONSHIP_NAME = 'R'

# Model validation codes
INVALID_IDENTIFIER = 'invalid-identifier'
DUPLICATE_ENTITY = 'duplicate-entity'
KEY_IN_ATTRIBUTES = 'key-in-attributes'
DUPLICATE_ATTRIBUTE = 'duplicate-attribute'
MIN_NEGATIVE = 'min-negative'
MIN_UNBOUNDED = 'min-unbounded'
MIN_EXCEEDS_MAX = 'min-exceeds-max'
MAX_BELOW_ONE = 'max-below-one'
RECURSIVE_RELATIONSHIP = 'recursive-relationship'
UNKNOWN_ENTITY = 'unknown-entity'
DUPLICATE_RELATIONSHIP = 'duplicate-relationship'
NAME_CLASH = 'name-clash'

# Parser-only codes
SYNTAX_ERROR = 'syntax-error'
MISSING_KEY = 'missing-key'
DUPLICATE_KEY = 'duplicate-key'

# Relational schema validation codes
PK_MISSING_COLUMN = 'pk-missing-column'
PK_NULLABLE = 'pk-nullable'
FK_UNLISTED_COLUMN = 'fk-unlisted-column'
FK_UNRESOLVED_TARGET = 'fk-unresolved-target'
ENCODING_MISSING = 'encoding-missing'
ENCODING_DUPLICATE = 'encoding-duplicate'

# Output
PAPER_FORMAT = 'paper'
STRUCTURED_FORMAT = 'structured'
OUTPUT_FORMATS = [PAPER_FORMAT, STRUCTURED_FORMAT]

INVERSE_IMAGE_ORACLE = 'inverse-image'
INSTANCES_ORACLE = 'instances'
BOTH_ORACLES = 'both'
ORACLE_OPTIONS = [INVERSE_IMAGE_ORACLE, INSTANCES_ORACLE, BOTH_ORACLES]

TRANSFORM_COMMAND = 'transform'
ANALYZE_COMMAND = 'analyze'
VERIFY_COMMAND = 'verify'
SUBCOMMANDS = [TRANSFORM_COMMAND, ANALYZE_COMMAND, VERIFY_COMMAND]

STDIN_PATH = '-'

AGREE = 'AGREE'
DISAGREE = 'DISAGREE'

SUMMARY_COLUMNS = ['relationship', 'classification', 'exact', 'lower_bound', 'lost', 'loss_ratio']
VERDICT_COLUMNS = ['relationship', 'slot', 'value', 'verdict', 'justification']

# CLI exit codes
EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_DISAGREEMENT = 2
EXIT_CAP_EXCEEDED = 3
