"""Size bounds for the exhaustive routines.

Defaults live in ``bounds.json`` next to this module. A different file can be
supplied with :func:`load_bounds` or through the ``POSITROIDS_CONFIG``
environment variable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ResourceLimitError

DEFAULT_PATH = Path(__file__).with_name("bounds.json")


@dataclass(frozen=True)
class Bounds:
    enumerate_max_n: int = 7
    tutte_max_ground: int = 16
    isomorphism_max_ground: int = 12
    catalan_cache: int = 512
    suite_max_n: dict = field(default_factory=dict)

    def suite_limit(self, suite: str) -> int:
        return self.suite_max_n.get(suite, 0)


def load_bounds(path: str | os.PathLike | None = None) -> Bounds:
    if path is None:
        path = os.environ.get("POSITROIDS_CONFIG") or DEFAULT_PATH
    with open(path) as fh:
        data = json.load(fh)
    return Bounds(**data)


_bounds = load_bounds()


def bounds() -> Bounds:
    return _bounds


def set_bounds(new: Bounds) -> None:
    global _bounds
    _bounds = new


def require(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise ResourceLimitError(f"{what} = {value} exceeds the configured bound {limit}")
