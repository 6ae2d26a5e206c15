# Copyright (c) 2026, Queertrace contributors
# For license information, please see license.txt

"""Logging helpers: ``logger()`` hands out configured loggers, ``log_error()`` records failures."""

import logging
import sys

ROOT = "queertrace"
_configured = False


def _configure():
	global _configured
	if _configured:
		return
	from queertrace.config import conf

	root = logging.getLogger(ROOT)
	handler = logging.StreamHandler(sys.stderr)
	handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
	root.addHandler(handler)
	root.setLevel(str(conf.get("log_level", "WARNING")).upper())
	root.propagate = False
	_configured = True


def logger(module=None):
	"""Return the package logger, or the child logger for ``module``."""
	_configure()
	name = f"{ROOT}.{module}" if module else ROOT
	return logging.getLogger(name)


def set_level(level):
	_configure()
	logging.getLogger(ROOT).setLevel(level)


def log_error(message, title=None):
	"""Record an error entry; ``title`` groups entries the way a log index would."""
	text = f"[{title}] {message}" if title else str(message)
	logger().error(text)
	return text
