#
#  Note this is NOT a configuration file!
#
#  This module holds the classes and functions used to load and parse comkit
#  configuration.  Configuration is optional: without COMKIT_CFG the
#  defaults in DEFAULT_CFG apply.
#

import os
from importlib import import_module
import json

from collections.abc import Mapping, Sequence

from comkit.exceptions import ConfigException

import logging

_LOG = logging.getLogger(__name__)


DEFAULT_CFG = {
    "guards": {
        "enumeration": 15,
        "rankings": 100000,
        "amalgam_path": 20,
    },
    "logging": {
        "level": "WARNING",
    },
}


def read_config():
    cfg_env = os.environ.get("COMKIT_CFG")
    cwd = None
    if not cfg_env:
        cfg = DEFAULT_CFG
    elif "/" in cfg_env or cfg_env.endswith(".json"):
        cfg = load_json_obj(cfg_env)
        abs_path = os.path.abspath(cfg_env)
        cwd = os.path.dirname(abs_path)
    elif cfg_env.startswith("{"):
        try:
            cfg = json.loads(cfg_env)
        except ValueError as e:
            raise ConfigException("Invalid inline JSON configuration: %s" % str(e))
    elif "." in cfg_env:
        cfg = import_python_obj(cfg_env)
    else:
        raise ConfigException("Cannot interpret COMKIT_CFG value: %s" % cfg_env)
    return cfg_expand(cfg, cwd=cwd)


def _find_json(raw_path, cwd):
    for path in (raw_path, os.path.join(cwd, raw_path)):
        try:
            return load_json_obj(path), os.path.dirname(os.path.abspath(path))
        except (OSError, ValueError):
            continue
    raise ConfigException("Could not find json file %s" % raw_path)


def _expand_include(spec, cwd, inclusions):
    target = spec["include"]
    if target in inclusions:
        raise ConfigException("Cyclic inclusion: %s" % target)
    inclusions = inclusions + (target,)
    kind = spec.get("type", "json")
    if kind == "json":
        obj, obj_dir = _find_json(target, cwd)
        return cfg_expand(obj, cwd=obj_dir, inclusions=inclusions)
    if kind == "python":
        return cfg_expand(import_python_obj(target), cwd=cwd, inclusions=inclusions)
    raise ConfigException("Unsupported inclusion type: %s" % str(kind))


def cfg_expand(cfg_unexpanded, cwd=None, inclusions=()):
    """Resolve ``{"include": ..., "type": "json"|"python"}`` nodes recursively.

    Relative json inclusions are looked up first as given, then against the
    directory of the including file.
    """
    if cwd is None:
        cwd = os.getcwd()
    if isinstance(cfg_unexpanded, Mapping):
        if "include" in cfg_unexpanded:
            return _expand_include(cfg_unexpanded, cwd, tuple(inclusions))
        return {k: cfg_expand(v, cwd=cwd, inclusions=inclusions) for k, v in cfg_unexpanded.items()}
    if isinstance(cfg_unexpanded, Sequence) and not isinstance(cfg_unexpanded, str):
        return [cfg_expand(elem, cwd=cwd, inclusions=inclusions) for elem in cfg_unexpanded]
    return cfg_unexpanded


def load_json_obj(path):
    with open(path) as json_file:
        return json.load(json_file)


def import_python_obj(path):
    """Imports a python object by fully-qualified path

    :return: the named module attribute
    """
    mod_name, obj_name = path.rsplit('.', 1)
    try:
        mod = import_module(mod_name)
        return getattr(mod, obj_name)
    except (ImportError, AttributeError) as e:
        raise ConfigException("Cannot import configuration object %s: %s" % (path, str(e)))


def _positive_int(value, name):
    if isinstance(value, bool):
        raise ConfigException("%s must be a positive integer, got %r" % (name, value))
    try:
        ival = int(value)
    except (TypeError, ValueError):
        raise ConfigException("%s must be a positive integer, got %r" % (name, value))
    if ival != value and not isinstance(value, str):
        raise ConfigException("%s must be a positive integer, got %r" % (name, value))
    if ival <= 0:
        raise ConfigException("%s must be a positive integer, got %r" % (name, value))
    return ival


class ComkitConfig(object):
    _instance = None
    initialised = False

    def __new__(cls, *args, **kwargs):
        if not cls._instance:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self, refresh=False):
        if not self.initialised or refresh:
            self.initialised = True
            cfg = read_config()
            if not isinstance(cfg, Mapping):
                raise ConfigException("Top level configuration must be a mapping")
            self.parse_guards(cfg.get("guards", {}))
            self.parse_logging(cfg.get("logging", {}))
            self.apply_env_overrides()

    def parse_guards(self, cfg):
        defaults = DEFAULT_CFG["guards"]
        self.enumeration_guard = _positive_int(cfg.get("enumeration", defaults["enumeration"]),
                                               "guards.enumeration")
        self.ranking_guard = _positive_int(cfg.get("rankings", defaults["rankings"]),
                                           "guards.rankings")
        self.amalgam_path_guard = _positive_int(cfg.get("amalgam_path", defaults["amalgam_path"]),
                                                "guards.amalgam_path")

    def parse_logging(self, cfg):
        level = cfg.get("level", DEFAULT_CFG["logging"]["level"])
        if not isinstance(logging.getLevelName(str(level).upper()), int):
            raise ConfigException("Unknown log level: %s" % level)
        self.log_level = str(level).upper()

    def apply_env_overrides(self):
        guard_env = os.environ.get("COMKIT_GUARD")
        if guard_env:
            self.enumeration_guard = _positive_int(guard_env.strip(), "COMKIT_GUARD")
            _LOG.debug("Enumeration guard overridden from environment: %d", self.enumeration_guard)

    def __str__(self):
        return "ComkitConfig: guards=(%d, %d, %d) log_level=%s" % (
            self.enumeration_guard, self.ranking_guard, self.amalgam_path_guard, self.log_level)


def get_config(refresh=False):
    return ComkitConfig(refresh=refresh)
