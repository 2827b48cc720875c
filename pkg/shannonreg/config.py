"""shannonreg system config resolver."""

import copy
import json
import os
from collections.abc import MutableMapping

import yaml
from marshmallow import Schema, ValidationError, fields, validate

from shannonreg.exceptions import ConfigurationError
from shannonreg.logging.logging import LEVELS
from shannonreg.utils import ConfigKey, DefaultConfig, get_config_path


CONFIG_FILE_NAME = "config.yml"

_DEFAULT_CONFIG = {
    ConfigKey.SPECIAL: {
        ConfigKey.ERFC_CROSSOVER: DefaultConfig.ERFC_CROSSOVER,
        ConfigKey.TAIL_CUTOFF: DefaultConfig.TAIL_CUTOFF,
    },
    ConfigKey.QUADRATURE: {
        ConfigKey.EPSABS: DefaultConfig.EPSABS,
        ConfigKey.EPSREL: DefaultConfig.EPSREL,
        ConfigKey.LIMIT: DefaultConfig.LIMIT,
    },
    ConfigKey.HARNESS: {
        ConfigKey.GRID_POINTS: DefaultConfig.GRID_POINTS,
        ConfigKey.C_SCAN_N_MAX: DefaultConfig.C_SCAN_N_MAX,
        ConfigKey.C_FLOOR_DIGITS: DefaultConfig.C_FLOOR_DIGITS,
    },
    ConfigKey.NORM: {
        ConfigKey.HALF_WIDTH: DefaultConfig.HALF_WIDTH,
        ConfigKey.STEP: DefaultConfig.STEP,
    },
    ConfigKey.LOGGING: {ConfigKey.LEVEL: DefaultConfig.LOG_LEVEL},
}

_POSITIVE = validate.Range(min=0, min_inclusive=False)


class _SpecialSchema(Schema):
    erfc_crossover = fields.Float(validate=validate.Range(min=0.5, max=6.0))
    tail_cutoff = fields.Float(validate=validate.Range(min=27.0))


class _QuadratureSchema(Schema):
    epsabs = fields.Float(validate=_POSITIVE)
    epsrel = fields.Float(validate=_POSITIVE)
    limit = fields.Integer(validate=validate.Range(min=50))


class _HarnessSchema(Schema):
    grid_points = fields.Integer(validate=validate.Range(min=1))
    c_scan_n_max = fields.Integer(validate=validate.Range(min=2))
    c_floor_digits = fields.Integer(validate=validate.Range(min=1, max=15))


class _NormSchema(Schema):
    half_width = fields.Float(validate=_POSITIVE)
    step = fields.Float(validate=_POSITIVE)


class _LoggingSchema(Schema):
    level = fields.String(validate=validate.OneOf(list(LEVELS)))


class ConfigSchema(Schema):
    """Schema every resolved configuration must satisfy."""

    special = fields.Nested(_SpecialSchema)
    quadrature = fields.Nested(_QuadratureSchema)
    harness = fields.Nested(_HarnessSchema)
    norm = fields.Nested(_NormSchema)
    logging = fields.Nested(_LoggingSchema)


def load_config(base):
    """Try to load configuration data from specific folder path.

    Args:
        base (str): A base path that has a file called `config.yml`

    Returns:
        dict: If the file does not exist an empty dictionary is returned.

    Raises:
        ConfigurationError: if the file is not valid YAML

    """
    data_file_path = os.path.join(base, CONFIG_FILE_NAME)
    check_file = os.path.exists(data_file_path) and os.path.isfile(
        data_file_path
    )

    if not check_file:
        return {}
    with open(data_file_path) as fopen:
        try:
            data = yaml.safe_load(fopen)
        except yaml.YAMLError as e:
            raise ConfigurationError(
                "{} is not valid YAML: {}".format(data_file_path, e)
            )
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(
            "{} must hold a mapping of sections".format(data_file_path)
        )
    return data


def _merge(*layers):
    """Merge configuration layers section by section.

    Args:
        *layers: dictionaries in increasing order of precedence

    Returns:
        dict: the merged configuration

    """
    merged = copy.deepcopy(layers[0])
    for layer in layers[1:]:
        for section, values in layer.items():
            if isinstance(values, dict):
                merged.setdefault(section, {}).update(values)
            else:
                merged[section] = values
    return merged


class ConfigStore(MutableMapping):
    """Define a single-instance config store with convenience methods.

    Attributes:
        system_config: The default system configuration dictionary
        user_config: The specific user configuration dictionary

    """

    def __init__(self, *args, **kwarg):
        self.system_config = _DEFAULT_CONFIG
        self.user_config = load_config(get_config_path())
        self._cfg_list = {}  # key is hash of the resolved json

    def get_config(self):
        """Resolve a config instance.

        Returns:
            dict: A resolved version of the system configuration that merges \
                system, user, and local configuration setups.

        Raises:
            ConfigurationError: if the resolved configuration fails
                validation.

        """
        local_path = os.path.abspath("")
        local_config = load_config(local_path)

        resolved_strs = _merge(
            self.system_config, self.user_config, local_config
        )

        resolved_hash = hash(json.dumps(resolved_strs, sort_keys=True))

        if resolved_hash in self._cfg_list:
            return self._cfg_list[resolved_hash]

        try:
            resolved = ConfigSchema().load(resolved_strs)
        except ValidationError as e:
            raise ConfigurationError(
                "Invalid configuration: {}".format(e.messages)
            )

        self._cfg_list[resolved_hash] = resolved

        return resolved

    def get_value(self, section, key):
        """Get a single configuration value.

        Args:
            section (str): the configuration section, e.g. `quadrature`
            key (str): the key inside the section

        Returns:
            The resolved value.

        """
        return self.get_config()[section][key]

    def clear(self):
        """Clear all cached configuration stores."""
        self._cfg_list = {}

    def __delitem__(self, key):
        """Delete an item from the config cache for a given hash value.

        Args:
            key: A hash value for the item to delete

        """
        del self._cfg_list[key]

    def __getitem__(self, key):
        """Get an item from the config cache for a given hash value.

        Args:
            key: A hash value for the item to get

        Returns:
            dict: The configuration for a particular hash value.

        """
        return self._cfg_list[key]

    def __iter__(self):
        """Get the iterable the config cache.

        Yields:
            The hash keys of the cached configurations.

        """
        for data in self._cfg_list:
            yield data

    def __len__(self):
        """Get the number of hashes saved in the cache.

        Returns:
            The number of hashes saved in the internal cache.

        """
        return len(self._cfg_list)

    def __setitem__(self, key, value):
        """Values cannot be set in the cache.

        Args:
            key: ignored
            value: ignored

        Raises:
            NotImplementedError: The config cannot be manually set.

        """
        raise NotImplementedError("The config cannot be manually set.")


config = ConfigStore()
