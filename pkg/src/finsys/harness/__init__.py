from .files import InstanceFile, ParseError, UnresolvedRef, parse, parse_path, serialize
from .checks import Report, run
from .scenarios import scenario, SCENARIOS
from .fuzz import random_instances

__all__ = [
    "InstanceFile", "ParseError", "UnresolvedRef", "parse", "parse_path",
    "serialize", "Report", "run", "scenario", "SCENARIOS", "random_instances",
]
