"""Access to the bundled reference corpus.

The corpus pins the low-degree eigenpolynomials (symbolic coupling), their
unit-coupling specializations (characters) and zero-coupling
specializations (orbit sums); regression tests and the verify command
compare solver output against it with exact canonical equality.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

ENV_VAR = "CS_D4_FIXTURES"


def fixtures_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "fixtures" / "golden"


def load(name: str):
    path = fixtures_dir() / f"{name}.json"
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def load_golden() -> dict:
    return {
        "polynomials": load("polynomials"),
        "characters": load("characters"),
        "monomials": load("monomials"),
    }
