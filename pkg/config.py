import os
from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv()


def env_int(name, default=None, environ=None):
    """Read a positive integer from the environment, falling back to default."""
    environ = os.environ if environ is None else environ
    raw = environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


class Config:
    # Resource ceilings
    MAX_TABLE_CELLS = env_int('FROB_MAX_TABLE_CELLS', 10**8)
    MAX_REPS_OUT = env_int('FROB_MAX_REPS_OUT', 10**6)

    # Starting horizon for k-Frobenius searches; None means 2*(k+1)*max(A)**2
    SEARCH_HORIZON = env_int('FROB_HORIZON')

    # Thread fan-out for `verify`
    VERIFY_WORKERS = env_int('FROB_VERIFY_WORKERS', 4)

    # Logging
    LOG_LEVEL = os.environ.get('FROB_LOG_LEVEL') or 'WARNING'
    LOG_FILE = os.environ.get('FROB_LOG_FILE') or None
