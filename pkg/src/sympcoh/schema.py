"""Access to the JSON schemas shipped with the package."""

from __future__ import annotations

import json
from importlib import resources

NAMES = (
    "spectrum",
    "sh_result",
    "mirror_check",
    "critical_radii",
    "sweep",
    "complex",
    "homology",
    "cohomology_report",
    "morse_demo",
)


def load_schema(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"no schema named {name!r}")
    text = resources.files("sympcoh").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)
