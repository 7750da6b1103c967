#!/usr/bin/env python3
"""
Toolkit settings validated against
`assets/config/local_config_schema.json`.

`LocalConfig` is a thread-safe singleton created by the command-line
bootstrap. Without a file path it holds the schema defaults; with a
path it reads the file and creates an annotated default one when
missing. A couple of environment variables override selected keys
after loading.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import os
import threading
from pathlib import Path
from types import MappingProxyType
from typing import Any, Mapping, Optional

# Internal libraries
from common.config_parser import ConfigParser, ConfigError

logger = logging.getLogger(__name__)

ASSETS_ROOT = Path(__file__).resolve().parent.parent / "assets"
SCHEMA_FILE_PATH = str(ASSETS_ROOT / "config" / "local_config_schema.json")

# Environment variable -> (section, key)
ENV_OVERRIDES: dict[str, tuple[str, str]] = {
    "IDEALGROWTH_TOLERANCE": ("roots", "tolerance"),
    "IDEALGROWTH_ELEMENT_CAP": ("oracle", "element_cap"),
}


class LocalConfig:
    """
    Singleton holding the validated settings. The first construction
    loads them, later constructions return the same instance whatever
    their arguments.
    """

    _instance: Optional["LocalConfig"] = None
    _lock = threading.Lock()

    def __new__(cls, *args, **kwargs):
        with cls._lock:
            if cls._instance is None:
                instance = super().__new__(cls)
                instance._setup(*args, **kwargs)
                cls._instance = instance
            return cls._instance

    def _setup(
        self,
        path: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
    ):
        """
        Args:
            path (Optional[str]): `.ini` file, `None` for schema defaults.
            environ (Optional[Mapping[str, str]]): Environment used for
                the overrides, `os.environ` by default.

        Raises:
            ConfigError: Invalid file or override.
        """
        self._config_path = path
        self._config = ConfigParser(
            SCHEMA_FILE_PATH, path, name=path or "defaults", gen_default=True
        )

        environ = os.environ if environ is None else environ
        for variable, (section, key) in ENV_OVERRIDES.items():
            if environ.get(variable):
                self._config.override(section, key, environ[variable])
                logger.info(f"[{section}] {key} overridden by {variable}.")

        self._view = self._config.get_view()

    @classmethod
    def reset(cls):
        """
        Forget the current instance so the next construction reloads.
        """
        with cls._lock:
            cls._instance = None

    def section(self, section: str) -> MappingProxyType[str, Any]:
        """
        Returns:
            MappingProxyType: Read-only view on a section.

        Raises:
            ConfigError: Unknown section.
        """
        try:
            return self._view[section]
        except KeyError:
            raise ConfigError(f"Configuration section [{section}] unavailable")

    def show_config(self):
        """
        Log the settings in use, section by section.
        """
        logger.info(f"Using configuration '{self._config_path or 'defaults'}'.")
        for section, values in self._view.items():
            logger.info(f"Section [{section}] = {dict(values)}")

    @property
    def config_path(self) -> Optional[str]:
        return self._config_path
