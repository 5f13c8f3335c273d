"""
Configuration Management

Centralized defaults for the AGC Groebner engine, its oracles and the
benchmark driver. Every value can be overridden from the environment or a
.env file; command-line flags override both.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# ============================================
# Paths
# ============================================

BASE_DIR = Path(__file__).parent
DATA_DIR = Path(os.getenv("DATA_DIR", str(BASE_DIR / "data"))).resolve()

# Run history database (only touched when --record / --history is used)
RESULTS_DB_PATH = Path(os.getenv("RESULTS_DB_PATH", str(DATA_DIR / "runs.db"))).resolve()

# ============================================
# Engine Defaults
# ============================================

# 32003 is the customary benchmark prime; 0 selects exact rationals
DEFAULT_CHARACTERISTIC = int(os.getenv("DEFAULT_CHARACTERISTIC", "32003"))

DEFAULT_TERM_ORDER = os.getenv("DEFAULT_TERM_ORDER", "grevlex")
DEFAULT_MODULE_ORDER = os.getenv("DEFAULT_MODULE_ORDER", "schreyer")
DEFAULT_REWRITE_ORDER = os.getenv("DEFAULT_REWRITE_ORDER", "gvw")
DEFAULT_STRATEGY = os.getenv("DEFAULT_STRATEGY", "sig")

# Safety caps: termination of the algorithm is not proven in general
MAX_PAIRS = int(os.getenv("MAX_PAIRS", "1000000"))
MAX_DEGREE = int(os.getenv("MAX_DEGREE", "64"))

# Log progress every N pair selections (DEBUG level)
PROGRESS_EVERY = int(os.getenv("PROGRESS_EVERY", "500"))

# ============================================
# Verification
# ============================================

LABELED_SAMPLES = int(os.getenv("LABELED_SAMPLES", "1000"))
SAMPLE_MAX_DEGREE = int(os.getenv("SAMPLE_MAX_DEGREE", "4"))
SAMPLE_MAX_COMPONENTS = int(os.getenv("SAMPLE_MAX_COMPONENTS", "3"))
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))

# The criterion-free Buchberger oracle is only run on small rings
ORACLE_MAX_VARIABLES = int(os.getenv("ORACLE_MAX_VARIABLES", "4"))

# ============================================
# Application Settings
# ============================================

# Structural checks after every reduction step (slow)
DEBUG = os.getenv("DEBUG", "False").lower() == "true"

# ============================================
# Logging
# ============================================

LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_FILE = os.getenv("LOG_FILE") or None

# ============================================
# Validation
# ============================================

TERM_ORDERS = ("grevlex", "lex", "grlex")
MODULE_ORDERS = ("pot", "schreyer")
REWRITE_ORDERS = ("f5", "gvw")
STRATEGIES = ("sig", "degree", "fifo")


def validate_config():
    """Validate configuration settings"""

    errors = []

    if DEFAULT_CHARACTERISTIC < 0 or DEFAULT_CHARACTERISTIC >= 2 ** 31:
        errors.append(f"DEFAULT_CHARACTERISTIC out of range: {DEFAULT_CHARACTERISTIC}")

    if DEFAULT_TERM_ORDER not in TERM_ORDERS:
        errors.append(f"DEFAULT_TERM_ORDER must be one of {TERM_ORDERS}")

    if DEFAULT_MODULE_ORDER not in MODULE_ORDERS:
        errors.append(f"DEFAULT_MODULE_ORDER must be one of {MODULE_ORDERS}")

    if DEFAULT_REWRITE_ORDER not in REWRITE_ORDERS:
        errors.append(f"DEFAULT_REWRITE_ORDER must be one of {REWRITE_ORDERS}")

    if DEFAULT_STRATEGY not in STRATEGIES:
        errors.append(f"DEFAULT_STRATEGY must be one of {STRATEGIES}")

    if MAX_PAIRS <= 0 or MAX_DEGREE <= 0:
        errors.append("MAX_PAIRS and MAX_DEGREE must be positive")

    if LABELED_SAMPLES < 0:
        errors.append("LABELED_SAMPLES must be non-negative")

    if errors:
        error_msg = "\n".join(f"  - {err}" for err in errors)
        raise ValueError(f"Configuration errors:\n{error_msg}")

    return True

# ============================================
# Display Configuration (for debugging)
# ============================================

def print_config():
    """Print current configuration (for debugging)"""

    print("=" * 60)
    print("AGC Groebner Engine Configuration")
    print("=" * 60)
    print(f"Data Directory: {DATA_DIR}")
    print(f"Results DB: {RESULTS_DB_PATH}")
    print(f"Characteristic: {DEFAULT_CHARACTERISTIC}")
    print(f"Term order: {DEFAULT_TERM_ORDER}")
    print(f"Module order: {DEFAULT_MODULE_ORDER}")
    print(f"Rewrite order: {DEFAULT_REWRITE_ORDER}")
    print(f"Strategy: {DEFAULT_STRATEGY}")
    print(f"Caps: {MAX_PAIRS} pairs, degree {MAX_DEGREE}")
    print(f"Labeled samples: {LABELED_SAMPLES}")
    print(f"Debug Mode: {DEBUG}")
    print(f"Log level: {LOG_LEVEL}")
    print("=" * 60)

# ============================================
# Initialize
# ============================================

if __name__ == "__main__":
    try:
        validate_config()
        print("✓ Configuration is valid")
        print_config()
    except ValueError as e:
        print(f"✗ Configuration error: {e}")
