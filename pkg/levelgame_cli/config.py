"""
Configuration Module for levelgame
Handles loading, saving, and resolving configuration settings for the levelgame CLI.
"""

import json
from pathlib import Path
from typing import Any, Callable, Literal

# Global config path
USER_CONFIG_PATH = Path.home() / ".levelgame" / "config.json"
LOCAL_CONFIG_NAME = "levelgame.json"

# Built-in defaults, used when neither a flag nor a config file provides a value
DEFAULTS: dict[str, Any] = {
    "tol": 1e-9,
    "seed": 42,
    "trials": 1000,
    "format": "text",
    "game": None,
    "n_max": 6,
    "k_max": 3,
    "worth_min": -10,
    "worth_max": 10,
    "zero_bias": 0.0,
}

KEY_TYPES: dict[str, Callable[[Any], Any]] = {
    "tol": float,
    "seed": int,
    "trials": int,
    "format": str,
    "game": str,
    "n_max": int,
    "k_max": int,
    "worth_min": int,
    "worth_max": int,
    "zero_bias": float,
}


class Config:
    """Configuration class for levelgame"""

    @staticmethod
    def load_global() -> dict:
        """Load global configuration, empty when no file exists yet"""
        if USER_CONFIG_PATH.exists():
            with open(USER_CONFIG_PATH, "r") as f:
                return json.load(f)
        return {}

    @staticmethod
    def save_global(json_data: dict) -> None:
        """Save global configuration"""
        USER_CONFIG_PATH.parent.mkdir(parents=True, exist_ok=True)
        with open(USER_CONFIG_PATH, "w") as f:
            json.dump(json_data, f, indent=4)

    @staticmethod
    def coerce(key: str, value: Any) -> Any:
        """Convert a stored value to the type of its key"""
        if key not in KEY_TYPES:
            raise ValueError(f"Unknown configuration key '{key}'. Known keys: {', '.join(KEY_TYPES)}")
        if value is None:
            return None
        try:
            return KEY_TYPES[key](value)
        except (TypeError, ValueError):
            raise ValueError(f"Invalid value '{value}' for '{key}'") from None

    @staticmethod
    def set_value(key: str, value: str, scope: Literal["global", "local"]) -> None:
        """Set a configuration value"""
        if not key or value is None or value == "":
            raise ValueError("Key and value must be provided")
        value = Config.coerce(key, value)
        if key == "format" and value not in ("text", "json"):
            raise ValueError("format must be 'text' or 'json'")

        if scope == "global":
            config = Config.load_global()
            config[key] = value
            Config.save_global(config)
        elif scope == "local":
            config = Config.load_project_config() or {}
            config[key] = value
            Config.save_project_config(config)
        else:
            raise ValueError("Invalid scope. Use 'global' or 'local'.")

    @staticmethod
    def get_value(key: str, scope: Literal["local", "global"] | list[str] | str) -> Any:
        """
        Get a configuration value for a given scope or list of scopes.
        If a list is provided, return the first non-None value found.
        """
        if isinstance(scope, list):
            for s in scope:
                value = Config.get_value(key, s)
                if value is not None:
                    return value
            return None
        elif scope == "global":
            return Config.load_global().get(key, None)
        elif scope == "local":
            config = Config.load_project_config()
            return config.get(key, None) if config else None
        else:
            raise ValueError("Invalid scope. Use 'global' or 'local'.")

    @staticmethod
    def resolve(key: str, flag_value: Any = None) -> Any:
        """Flag value, then local config, then global config, then the built-in default"""
        if flag_value is not None:
            return flag_value
        stored = Config.get_value(key, ["local", "global"])
        if stored is not None:
            return Config.coerce(key, stored)
        return DEFAULTS.get(key)

    @staticmethod
    def unset_value(key: str, scope: Literal["global", "local"]) -> bool:
        """Unset a configuration value"""
        if scope == "global":
            config = Config.load_global()
            if key in config:
                del config[key]
                Config.save_global(config)
                return True
            return False
        elif scope == "local":
            config = Config.load_project_config()
            if config and key in config:
                del config[key]
                Config.save_project_config(config)
                return True
            return False
        else:
            raise ValueError("Invalid scope. Use 'global' or 'local'.")

    @staticmethod
    def load_project_config(config_dir: Path | None = None) -> dict | None:
        """Load local project configuration"""
        if config_dir is None:
            config_dir = Path.cwd()

        local_config_path = config_dir / LOCAL_CONFIG_NAME
        if local_config_path.exists():
            with open(local_config_path, "r") as f:
                return json.load(f)
        return None

    @staticmethod
    def save_project_config(config: dict, config_dir: Path | None = None) -> None:
        """Save local project configuration"""
        if config_dir is None:
            config_dir = Path.cwd()

        config_dir.mkdir(exist_ok=True)
        with open(config_dir / LOCAL_CONFIG_NAME, "w") as f:
            json.dump(config, f, indent=4)
