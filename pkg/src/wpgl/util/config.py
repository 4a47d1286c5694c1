#################################################
# config.py
#
# getConfig: return value set by configuration
#            which can be from config map or environment variable
#            if not provided, return default value
#
# accessors below are evaluated at call time so that
# a changed environment is picked up without reload
#
#################################################

import os

# can be read only (for configmap mount)
CONFIG_PATH = "/etc/wpgl/wpgl.config"

DEFAULT_MAX_GROUP_ORDER = 256
DEFAULT_EXHAUSTIVE_SECTION_LIMIT = 4096
DEFAULT_FIELD = "q"
DEFAULT_RANDOM_SEED = 0
DEFAULT_LOG_LEVEL = "info"


def getConfig(key: str, default):
    # check configmap path
    file = os.path.join(CONFIG_PATH, key)
    if os.path.exists(file):
        with open(file) as f:
            return f.read().strip()
    # check env
    cfg = os.environ.get(key, default)
    if type(cfg) is str:
        return cfg.strip()
    return cfg


# update value from environment if exists
CONFIG_PATH = getConfig("CONFIG_PATH", CONFIG_PATH)


def max_group_order() -> int:
    return int(getConfig("WPGL_MAX_GROUP_ORDER", DEFAULT_MAX_GROUP_ORDER))


# number of set-theoretic lifts a section search may enumerate exhaustively
def exhaustive_section_limit() -> int:
    return int(getConfig("WPGL_EXHAUSTIVE_SECTION_LIMIT", DEFAULT_EXHAUSTIVE_SECTION_LIMIT))


def default_field() -> str:
    return getConfig("WPGL_DEFAULT_FIELD", DEFAULT_FIELD).lower()


def random_seed() -> int:
    return int(getConfig("WPGL_RANDOM_SEED", DEFAULT_RANDOM_SEED))


def log_level() -> str:
    return getConfig("WPGL_LOG_LEVEL", DEFAULT_LOG_LEVEL).lower()
