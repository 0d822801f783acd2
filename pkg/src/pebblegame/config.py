"""Resource limits and the optional key=value config file.

The config file is located only through the ``PEBBLEGAME_CONFIG`` environment
variable; command-line flags override values from the file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

CONFIG_ENV_VAR = "PEBBLEGAME_CONFIG"

DEFAULT_CELL_BUDGET = 25_000_000
DEFAULT_MATERIALIZATION_CAP = 2_000_000

_KEYS = ("cell_budget", "materialization_cap")


@dataclass(frozen=True)
class Limits:
    cell_budget: int = DEFAULT_CELL_BUDGET
    materialization_cap: int = DEFAULT_MATERIALIZATION_CAP


def parse_config_text(text: str) -> dict:
    """Parse key=value lines; blank lines and '#' comments are ignored."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _KEYS:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        try:
            number = int(value.strip())
        except ValueError:
            raise ValueError(f"config line {lineno}: {key} must be an integer") from None
        if number < 1:
            raise ValueError(f"config line {lineno}: {key} must be positive")
        values[key] = number
    return values


def load_limits(
    cell_budget: int | None = None,
    materialization_cap: int | None = None,
    env: dict | None = None,
) -> Limits:
    """Resolve limits: explicit argument > config file > built-in default."""
    env = os.environ if env is None else env
    from_file: dict = {}
    path = env.get(CONFIG_ENV_VAR)
    if path:
        try:
            with open(path, encoding="utf-8") as handle:
                from_file = parse_config_text(handle.read())
        except OSError as exc:
            raise ValueError(f"cannot read config file {path!r}: {exc}") from exc
    return Limits(
        cell_budget=(
            cell_budget
            if cell_budget is not None
            else from_file.get("cell_budget", DEFAULT_CELL_BUDGET)
        ),
        materialization_cap=(
            materialization_cap
            if materialization_cap is not None
            else from_file.get("materialization_cap", DEFAULT_MATERIALIZATION_CAP)
        ),
    )
