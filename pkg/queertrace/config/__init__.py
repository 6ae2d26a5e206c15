"""
Site configuration.

Defaults come from ``queertrace.hooks.default_settings``; a JSON site config overrides them.
The file is located through the ``QUEERTRACE_SITE_CONFIG`` environment variable, falling back to
``site_config.json`` in the working directory.
"""

import json
import os
from collections.abc import Mapping
from pathlib import Path

from queertrace import hooks
from queertrace.exceptions import ConfigError

SITE_CONFIG_ENV = "QUEERTRACE_SITE_CONFIG"
SITE_CONFIG_NAME = "site_config.json"


class SiteConfig(Mapping):
	"""Read-only view of the merged settings."""

	def __init__(self, values, source=None):
		self._values = dict(values)
		self.source = source

	def __getitem__(self, key):
		return self._values[key]

	def __iter__(self):
		return iter(self._values)

	def __len__(self):
		return len(self._values)

	def __repr__(self):
		return f"SiteConfig(source={self.source!r}, keys={sorted(self._values)})"


def find_site_config():
	"""Return the path of the active site config, or None."""
	env_path = os.environ.get(SITE_CONFIG_ENV)
	if env_path:
		return Path(env_path)
	local = Path.cwd() / SITE_CONFIG_NAME
	if local.is_file():
		return local
	return None


def load_conf(path=None):
	"""Merge hook defaults with the site config at ``path`` (or the discovered one)."""
	values = dict(hooks.default_settings)
	path = Path(path) if path else find_site_config()
	if path is None:
		return SiteConfig(values)

	try:
		with open(path, encoding="utf-8") as fh:
			overrides = json.load(fh)
	except FileNotFoundError:
		raise ConfigError(f"Site config not found: {path}")
	except json.JSONDecodeError as e:
		raise ConfigError(f"Site config {path} is not valid JSON: {e}")

	if not isinstance(overrides, dict):
		raise ConfigError(f"Site config {path} must hold a JSON object")

	values.update(overrides)
	return SiteConfig(values, source=str(path))


conf = load_conf()
