from ._rotsys import *  # noqa: F401,F403
from ._rotsys import __version__, PreRotationSystem, RunConfig


def count(config, limit=0):
    return len(enumerate(config, limit))


def read_jsonl(path):
    with open(path) as f:
        return [PreRotationSystem.from_json(line) for line in f if line.strip()]
