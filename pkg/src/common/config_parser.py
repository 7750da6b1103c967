#!/usr/bin/env python3
"""
Settings loader for the IdealGrowth toolkit. Numerical tolerances,
search depths and resource caps are kept in a `.ini` file whose content
is checked against a JSON schema describing every key. When the `.ini`
file does not exist, an annotated default one can be generated from
the schema.

Schema layout: one JSON object per `.ini` section, one inner object per
key. Recognized inner fields:
- type: `int`, `float`, `str`, `bool` or `rational` (exact fraction,
    written `1/10000000000` or `1e-10`)
- required: an empty value is refused when `true`
- default: value written to a generated default file
- comment: help line written above the key in a generated default file
- min/max: inclusive bounds for numeric types
- enum: closed list of accepted (lower-case) strings
- match: regular expression a string value must fully match
Only `type` is mandatory.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import json
import configparser
import re
from fractions import Fraction
from pathlib import Path
from types import MappingProxyType
from typing import Any, Callable, Iterable, NamedTuple, Optional, TextIO

logger = logging.getLogger(__name__)


########################################################################
#                          Configuration error                         #
########################################################################


class ConfigError(Exception):
    """
    Any problem with the schema, the `.ini` content or an override.
    """

    def __init__(self, msg: str):
        super().__init__(msg)


########################################################################
#                            Value converters                          #
########################################################################


def _str_to_bool(s: str) -> bool:
    """
    Convert a textual flag to a bool.

    Raises:
        ValueError: Not a recognized flag.
    """
    s = s.strip().lower()
    if s in {"true", "1", "yes", "on"}:
        return True
    if s in {"false", "0", "no", "off"}:
        return False
    raise ValueError(f"Invalid boolean string: {s}")


def _str_to_rational(s: str) -> Fraction:
    """
    Convert `p/q`, a decimal or a scientific literal to an exact
    fraction.

    Raises:
        ValueError: Not a rational literal.
    """
    try:
        return Fraction(s.strip())
    except ZeroDivisionError as e:
        raise ValueError(f"Zero denominator in '{s}'") from e


class ConversionResult(NamedTuple):
    """
    Outcome of `_SchemaEntry.check_and_convert()`. `message` is set when
    `error` is `True`, `value` otherwise.
    """

    error: bool
    message: Optional[str]
    value: Optional[Any]


class _SchemaEntry:
    """
    Rules attached to one key of the `.ini` file, built from the
    schema's inner JSON object.
    """

    _CONVERTERS: dict[str, Callable[[str], Any]] = {
        "int": int,
        "float": float,
        "str": str,
        "bool": _str_to_bool,
        "rational": _str_to_rational,
    }

    _FIELDS = ("type", "required", "default", "comment", "min", "max", "enum", "match")

    def __init__(self, key: str, entry: dict[str, Any]):
        """
        Args:
            key (str): Key name, only used in error messages.
            entry (dict[str, Any]): Inner schema object for the key.

        Raises:
            ConfigError: Malformed schema object.
        """
        self._key = key

        if "type" not in entry:
            raise ConfigError(f"'type' field missing for key '{key}'.")
        if entry["type"] not in self._CONVERTERS:
            raise ConfigError(f"Type '{entry['type']}' unrecognized for key '{key}'.")

        self._vartype: str = entry["type"]
        self._convert = self._CONVERTERS[self._vartype]

        self._required = self._field(entry, "required", (bool,), False)
        self._default = self._field(entry, "default", None, None)
        self._comment = self._field(entry, "comment", (str,), None)
        self._min = self._field(entry, "min", (int, float), None)
        self._max = self._field(entry, "max", (int, float), None)
        self._enum = self._field(entry, "enum", (list,), None)
        self._match = self._field(entry, "match", (str,), None)

        unknown = set(entry.keys()) - set(self._FIELDS)
        if unknown:
            raise ConfigError(
                f"Unrecognized field(s): '{', '.join(sorted(unknown))}' for key '{key}'."
            )

    def _field(
        self,
        entry: dict[str, Any],
        field: str,
        vartypes: Optional[tuple[type, ...]],
        default: Any,
    ) -> Any:
        """
        Read an optional field and check its JSON type.

        Raises:
            ConfigError: The field holds a value of the wrong type.
        """
        if field not in entry:
            return default

        value = entry[field]
        if not vartypes or isinstance(value, vartypes):
            return value

        expected = " or a ".join(f"'{t.__name__}'" for t in vartypes)
        raise ConfigError(
            f"Type error for field '{field}' in key '{self._key}': "
            f"'{value}' is a '{type(value).__name__}', must be a {expected}."
        )

    @property
    def default(self) -> Any:
        return self._default

    @property
    def comment(self) -> Optional[str]:
        return self._comment

    def check_and_convert(self, value: str) -> ConversionResult:
        """
        Apply the schema rules to a raw `.ini` value and convert it.

        Args:
            value (str): Raw text value.

        Returns:
            ConversionResult: Error flag with message, or converted value.
        """
        if not value:
            if self._required:
                return ConversionResult(True, "Value is required", None)
            return ConversionResult(False, None, None)

        try:
            converted = self._convert(value)
        except ValueError:
            return ConversionResult(
                True,
                f"type error for value '{value}', '{self._vartype}' required",
                None,
            )

        if isinstance(converted, (int, float, Fraction)) and not isinstance(
            converted, bool
        ):
            if self._min is not None and converted < self._min:
                return ConversionResult(True, f"{value} is lower than {self._min}", None)
            if self._max is not None and converted > self._max:
                return ConversionResult(
                    True, f"{value} is greater than {self._max}", None
                )

        if self._enum:
            if not isinstance(converted, str):
                return ConversionResult(
                    True,
                    "the enumeration constraint is only applicable for strings, "
                    f"got a '{type(converted).__name__}'",
                    None,
                )
            if any(not isinstance(v, str) for v in self._enum):
                return ConversionResult(True, "All enum values must be strings", None)
            if converted.lower() not in self._enum:
                return ConversionResult(
                    True,
                    f"'{converted}' is not a possible value, expecting one of "
                    f"'{', '.join(self._enum)}'",
                    None,
                )
            converted = converted.lower()

        if self._match:
            if not isinstance(converted, str):
                return ConversionResult(
                    True,
                    "the match constraint is only applicable for strings, "
                    f"got a '{type(converted).__name__}'",
                    None,
                )
            try:
                pattern = re.compile(self._match)
            except re.error:
                return ConversionResult(True, f"wrong regex '{self._match}'", None)
            if not pattern.fullmatch(converted):
                return ConversionResult(
                    True, f"value '{converted}' doesn't match regex constraint", None
                )

        return ConversionResult(False, None, converted)


########################################################################
#                       Schema-checked .ini parser                     #
########################################################################


class ConfigParser:
    """
    Load a `.ini` configuration, check it against a JSON schema and
    expose the converted values through a read-only view.
    """

    def __init__(
        self,
        schema: str | TextIO,
        config: Optional[str | TextIO] = None,
        name: Optional[str] = None,
        gen_default: bool = True,
    ):
        """
        Args:
            schema (str | TextIO): Path to the JSON schema or an open
                stream.
            config (str | TextIO | None): Path to the `.ini` file, an
                open stream, or `None` to load the schema defaults.
            name (Optional[str]): Name used in messages. Required unless
                `config` is a path.
            gen_default (bool): Create an annotated default file when
                `config` is a path that doesn't exist yet.

        Raises:
            ConfigError: Schema, file or validation problem.
        """
        self._schema: dict[str, dict[str, _SchemaEntry]] = {}
        self._config = configparser.ConfigParser(interpolation=None)
        self._data: dict[str, dict[str, Any]] = {}

        if name:
            self._name = name
        elif isinstance(config, str):
            self._name = Path(config).name
        else:
            raise ConfigError("A configuration name is required.")

        self._load_schema(schema)

        if config is None:
            self._load_defaults()
            return

        if gen_default and isinstance(config, str) and not Path(config).exists():
            try:
                with open(config, "x+", encoding="utf-8") as file:
                    self.generate_default(file)
            except Exception as e:
                raise ConfigError(
                    f"Error generating the default configuration for '{self._name}'."
                ) from e
            logger.info(f"Default configuration written under '{config}'.")

        self.load_and_check_config(config)

    def _load_schema(self, source: str | TextIO):
        """
        Read the JSON schema into `_SchemaEntry` objects.

        Raises:
            ConfigError: Unreadable or malformed schema.
        """
        try:
            if isinstance(source, str):
                with open(source, "r", encoding="utf-8") as file:
                    schema = json.load(file)
            else:
                schema = json.load(source)
        except FileNotFoundError:
            raise ConfigError(f"Schema file not found for '{self._name}'.")
        except json.JSONDecodeError as e:
            raise ConfigError(f"Schema parsing error for '{self._name}'.") from e
        except OSError as e:
            raise ConfigError(f"OS error opening the schema of '{self._name}'.") from e

        for section, keys in schema.items():
            self._schema[section] = {
                key: _SchemaEntry(key, entry) for key, entry in keys.items()
            }

    def _load_defaults(self):
        """
        Validate the schema defaults as if they were read from a file.
        """
        for section, entries in self._schema.items():
            self._config[section] = {
                key: self._default_literal(entry.default)
                for key, entry in entries.items()
            }
        self._validate_data()

    @staticmethod
    def _default_literal(default: Any) -> str:
        if default is None:
            return ""
        if isinstance(default, bool):
            return "true" if default else "false"
        return str(default)

    def load_and_check_config(self, source: str | TextIO):
        """
        Read a `.ini` file or stream and validate it against the schema.

        Raises:
            ConfigError: Unreadable file or invalid content.
        """
        try:
            if isinstance(source, str):
                with open(source, encoding="utf-8") as file:
                    self._config.read_file(file)
            else:
                self._config.read_file(source)
        except configparser.Error as e:
            raise ConfigError(f"Parsing error reading '{self._name}'.") from e
        except OSError as e:
            raise ConfigError(f"An error occurred reading '{self._name}'.") from e

        self._validate_data()

    def generate_default(self, stream: TextIO, annotate: bool = True):
        """
        Write a default configuration inferred from the schema.

        Args:
            stream (TextIO): Destination stream, must be readable too
                when `annotate` is set.
            annotate (bool): Insert the schema comments above the keys.
        """
        config = configparser.ConfigParser(interpolation=None)
        for section, entries in self._schema.items():
            config[section] = {
                key: self._default_literal(entry.default)
                for key, entry in entries.items()
            }

        config.write(stream, space_around_delimiters=True)

        if annotate:
            self._annotate(stream)

    def _annotate(self, stream: TextIO):
        """
        Rewrite the stream with `; comment` lines above documented keys.
        """
        section = None
        lines = []

        stream.seek(0)
        for line in stream:
            stripped = line.strip()
            if stripped.startswith("[") and stripped.endswith("]"):
                section = stripped.strip("[]")
            elif "=" in stripped and section is not None:
                key = stripped.split("=", 1)[0].strip()
                comment = self._schema[section][key].comment
                if comment:
                    lines.append(f"; {comment}\n")
            lines.append(line)

        stream.seek(0)
        stream.writelines(lines)

    def _validate_data(self):
        """
        Compare sections and keys with the schema, then convert every
        value into `self._data`.

        Raises:
            ConfigError: Missing/extra section or key, or invalid value.
        """
        diff = self._compare(self._schema.keys(), self._config.sections())
        if diff:
            raise ConfigError(
                f"'{self._name}' sections differ from model: {', '.join(diff)}."
            )

        for section, entries in self._schema.items():
            diff = self._compare(entries.keys(), self._config[section].keys())
            if diff:
                raise ConfigError(
                    f"'{self._name}' section [{section}] differs from model: "
                    f"{', '.join(diff)}."
                )

            values = self._data.setdefault(section, {})
            for key, entry in entries.items():
                result = entry.check_and_convert(self._config[section][key])
                if result.error:
                    raise ConfigError(
                        f"Value for key '{key}' in section '{section}' is invalid: "
                        f"{result.message}."
                    )
                values[key] = result.value

    @staticmethod
    def _compare(model: Iterable[str], config: Iterable[str]) -> list[str]:
        """
        List missing (`-name`) and unexpected (`+name`) names.
        """
        model, config = set(model), set(config)
        missing = [f"-{e}" for e in sorted(model - config)]
        extra = [f"+{e}" for e in sorted(config - model)]
        return missing + extra

    def get_view(self) -> MappingProxyType[str, MappingProxyType[str, Any]]:
        """
        Returns:
            MappingProxyType: Read-only view on the converted values.
                Inner mappings reflect later overrides.
        """
        return MappingProxyType(
            {section: MappingProxyType(values) for section, values in self._data.items()}
        )

    def override(self, section: str, key: str, raw: str):
        """
        Replace a value in memory, e.g. from an environment variable.
        The file on disk is left untouched.

        Args:
            section (str): Existing section name.
            key (str): Existing key name.
            raw (str): Raw text value, checked like a `.ini` value.

        Raises:
            ConfigError: Unknown section/key or value refused by the
                schema.
        """
        if section not in self._schema or key not in self._schema[section]:
            raise ConfigError(
                f"Section '{section}' or key '{key}' doesn't exist in '{self._name}'."
            )

        result = self._schema[section][key].check_and_convert(raw)
        if result.error:
            raise ConfigError(
                f"Override '{raw}' for [{section}] {key} breaks the schema rules: "
                f"{result.message}."
            )

        self._data[section][key] = result.value
        logger.debug(f"Override applied: [{section}] {key} = {result.value!r}.")
