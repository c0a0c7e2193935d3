import os
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"

# allow running the suite from a fresh checkout without installing
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


def subprocess_env() -> dict:
    """Environment for child processes that import the package."""
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return env
