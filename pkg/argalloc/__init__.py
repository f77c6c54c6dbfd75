__version__ = "0.1.0"


# exhaustive checks are 3^k in the number of variables/arguments involved, so
# all of them are bounded. The bounds can be overridden per call (and from the
# command line)
DEFAULT_MAX_EQUIV_VARS = 12
DEFAULT_MAX_ORACLE_ARGS = 12
DEFAULT_MAX_BRUTE_FORCE_SAT_VARS = 20
DEFAULT_MAX_SAT_VARS = 64
DEFAULT_MAX_EXHAUSTIVE_ORDER_ARGS = 8
# terms of the normal forms used to keep solved expressions small
DEFAULT_MAX_NORMAL_FORM_TERMS = 128

# names drawn for allocation variables live in their own namespace, argument
# names must never start with either prefix
FRESH_PREFIX = "_v"
BLOCK_PREFIX = "_b"
RESERVED_PREFIXES = (FRESH_PREFIX, BLOCK_PREFIX)


DATA_TYPE_PLURAL = dict(
    framework="frameworks",
    splitter="splitters",
    run="runs",
)


class CapacityError(Exception):
    """
    Raised when an exhaustive computation would exceed its configured bound
    """

    pass


class UsageError(Exception):
    pass


class NamespaceCollision(UsageError):
    pass


def is_reserved_name(name):
    return name.startswith(RESERVED_PREFIXES)
