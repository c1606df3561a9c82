# -*- coding: utf-8 -*-
"""
Contains a simple synthesis API to use supra programmatically.

We will do everything to keep functions in this module backward compatible
across versions.
"""
from __future__ import unicode_literals, absolute_import

from supra.cli import configure_logger, execute_from_config
from supra.models import Config
from supra.trace import replay as replay_trace


def synthesize(spec_path):
    """Synthesizes a program for a spec file and returns a
    supra.models.SynthesisRun instance.

    :rtype: A supra.models.SynthesisRun instance
    """
    config = Config()
    config.parse_api_config([spec_path])
    logger = configure_logger(config)
    return execute_from_config(config, logger)


def synthesize_with_options(spec_path, options_dict=None,
                            logger_builder=None):
    """Synthesizes a program with provided options and logger.

    :param options_dict: Must contain the long name of the command line
            options (e.g., {"ordering": "tkbo", "no-abs": True}). (optional)

    :param logger_builder: Function that will be called to instantiate a
            logger. (optional)

    :rtype: A supra.models.SynthesisRun instance
    """

    config = Config()

    config.parse_api_config([spec_path], options_dict)

    if not logger_builder:
        logger = configure_logger(config)
    else:
        logger = logger_builder()

    return execute_from_config(config, logger)


def replay(trace_path, logger=None):
    """Replays a trace file.

    :rtype: A supra.models.ReplayReport instance
    """
    return replay_trace(trace_path, logger)
