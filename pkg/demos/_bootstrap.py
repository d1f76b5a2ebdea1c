"""Make the demos runnable from a source checkout without installing."""

import sys
from pathlib import Path

try:
    import fmanifolds  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
