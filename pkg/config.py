"""Central configuration for the whiskered categories toolkit."""

import os
from dotenv import load_dotenv

load_dotenv()


# ---------------------------------------------------------------------------
# Structure size caps (checkers are exhaustive below these)
# ---------------------------------------------------------------------------
MAX_OBJECTS: int = int(os.getenv("WHISKER_MAX_OBJECTS", "64"))
MAX_MORPHISMS: int = int(os.getenv("WHISKER_MAX_MORPHISMS", "4096"))

# ---------------------------------------------------------------------------
# Scan planning
# ---------------------------------------------------------------------------
SQUARE_SCAN_LIMIT: int = int(os.getenv("WHISKER_SQUARE_SCAN_LIMIT", "300000"))
CUBE_SCAN_LIMIT: int = int(os.getenv("WHISKER_CUBE_SCAN_LIMIT", "20000"))
TRIPLE_SCAN_LIMIT: int = int(os.getenv("WHISKER_TRIPLE_SCAN_LIMIT", "20000"))
SAMPLE_SIZE: int = int(os.getenv("WHISKER_SAMPLE_SIZE", "2000"))
RANDOM_SEED: int = int(os.getenv("WHISKER_RANDOM_SEED", "20240601"))

# ---------------------------------------------------------------------------
# Linear checks
# ---------------------------------------------------------------------------
LINEAR_CUBE_COUNT: int = int(os.getenv("WHISKER_LINEAR_CUBE_COUNT", "1000"))
LINEAR_COEFFICIENT_BOUND: int = int(os.getenv("WHISKER_LINEAR_COEFFICIENT_BOUND", "3"))

# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------
LOG_LEVEL: str = os.getenv("WHISKER_LOG_LEVEL", "WARNING").upper()
REPORT_FORMAT: str = os.getenv("WHISKER_REPORT_FORMAT", "text")
