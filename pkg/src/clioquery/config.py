"""Runtime configuration: JSON config file plus environment overrides.

Precedence: explicit arguments > CLIOQUERY_* environment variables >
config file (the path given by CLIOQUERY_CONFIG) > defaults.
"""

import json
import os
from dataclasses import dataclass

CONFIG_ENV_VAR = "CLIOQUERY_CONFIG"


@dataclass
class Config:
    port: int = 8000
    corpus_dir: str | None = None
    weights_path: str | None = None
    max_chars: int = 90


def load_config(path: str | None = None, env: dict | None = None) -> Config:
    env = os.environ if env is None else env
    cfg = Config()
    path = path or env.get(CONFIG_ENV_VAR)
    if path:
        with open(path, encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        for key in ("port", "corpus_dir", "weights_path", "max_chars"):
            if key in file_cfg:
                setattr(cfg, key, file_cfg[key])
    if "CLIOQUERY_PORT" in env:
        cfg.port = int(env["CLIOQUERY_PORT"])
    if "CLIOQUERY_CORPUS_DIR" in env:
        cfg.corpus_dir = env["CLIOQUERY_CORPUS_DIR"]
    if "CLIOQUERY_WEIGHTS_PATH" in env:
        cfg.weights_path = env["CLIOQUERY_WEIGHTS_PATH"]
    if "CLIOQUERY_MAX_CHARS" in env:
        cfg.max_chars = int(env["CLIOQUERY_MAX_CHARS"])
    return cfg
