import os

import dotenv

dotenv.load_dotenv()

THREADS = int(os.getenv('ONEFACED_THREADS') or 1)
LOG_LEVEL = os.getenv('ONEFACED_LOG_LEVEL') or 'WARNING'
LOG_FILE = os.getenv('ONEFACED_LOG_FILE', './logs/log')  # Empty value disables the file handler
MAX_GENUS = int(os.getenv('ONEFACED_MAX_GENUS') or 3)


def get_threads(override: int = None) -> int:
    """Return the worker cap, preferring an explicit override over the environment."""
    return max(1, override if override else THREADS)
