import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# Make the shared helpers (oracles, wordgen) importable from any test file.
sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
