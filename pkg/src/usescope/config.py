"""Configuration resolution: flags > environment > config file > defaults."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

ENV_PREFIX = "USESCOPE"

DEFAULT_CONFIG_PATHS = (
    Path("usescope.json"),
    Path.home() / ".config" / "usescope" / "config.json",
)

_DATA_DIR = Path(__file__).parent / "data"


@dataclass
class CliConfig:
    endpoint: str = ""
    api_key: str = ""
    model: str = "gpt-4"
    temperature: float = 0.7
    store_dir: str = "store"
    mode: str = "replay"
    provider: str = "hashed"
    embed_endpoint: str = ""
    embed_model: str = "text-embedding-3-small"
    retries: int = 3
    timeout: float = 60.0

    @classmethod
    def resolve(cls, flags: dict | None = None, config_path: str | None = None) -> "CliConfig":
        """Build the effective config with documented precedence."""
        values: dict = {}
        path = Path(config_path) if config_path else None
        if path is None:
            env_path = os.environ.get(f"{ENV_PREFIX}_CONFIG")
            if env_path:
                path = Path(env_path)
            else:
                path = next((p for p in DEFAULT_CONFIG_PATHS if p.exists()), None)
        if path is not None and path.exists():
            values.update(json.loads(path.read_text(encoding="utf-8")))
        for field in fields(cls):
            env_value = os.environ.get(f"{ENV_PREFIX}_{field.name.upper()}")
            if env_value is not None:
                values[field.name] = env_value
        if flags:
            values.update({k: v for k, v in flags.items() if v is not None})
        known = {f.name: f.type for f in fields(cls)}
        kwargs = {}
        for name, value in values.items():
            if name not in known:
                continue
            if name in ("temperature", "timeout"):
                value = float(value)
            elif name == "retries":
                value = int(value)
            kwargs[name] = value
        return cls(**kwargs)


def default_catalog_path() -> Path:
    return _DATA_DIR / "domains.tsv"


def default_template_path() -> Path:
    return _DATA_DIR / "generation_template.json"


def default_act_path() -> Path:
    return _DATA_DIR / "act"


def default_ground_truth_path() -> Path:
    return _DATA_DIR / "gt_uses.tsv"
