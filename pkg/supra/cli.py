# -*- coding: utf-8 -*-
"""
Contains the command line entry points.
"""
from __future__ import unicode_literals, absolute_import, print_function

import codecs
import logging
import sys
import time

from supra.models import (
    Config, SynthesisRun, COMMAND_REPLAY, STATUS_SUCCESS, STATUS_SATURATED,
    EXIT_SUCCESS, EXIT_SATURATED, EXIT_LIMIT, EXIT_COUNTEREXAMPLE,
    EXIT_INPUT_ERROR, EXIT_REPLAY_MISMATCH, VERBOSE_QUIET, VERBOSE_NORMAL,
    SupraError, LazyLogParam)
from supra.clauses import preprocess
from supra.oracle import check_solution
from supra.reporter import report, report_replay, close_quietly
from supra.saturation import Synthesizer
from supra.specfile import read_spec
from supra.trace import TraceWriter, replay


def get_logger(propagate=False):
    """Returns a logger."""
    root_logger = logging.getLogger()

    logger = logging.getLogger(__name__)

    handler = logging.StreamHandler()

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)

    if root_logger.level != logging.CRITICAL:
        logger.addHandler(handler)
        logger.propagate = propagate
    else:
        logger.addHandler(logging.NullHandler())

    return logger


def execute_from_command_line():
    """Runs the synthesizer (or the replay command) and retrieves the
       configuration from the command line.
    """
    logger = None
    try:
        start = time.time()
        config = Config()
        config.parse_cli_config()

        logger = configure_logger(config)

        if config.command == COMMAND_REPLAY:
            replay_report = replay(config.trace_path, logger)
            report_replay(replay_report)
            if replay_report.mismatches:
                sys.exit(EXIT_REPLAY_MISMATCH)
            sys.exit(EXIT_SUCCESS)

        run = execute_from_config(config, logger)

        stop = time.time()

        report(run, config, stop - start, logger)

        sys.exit(run.exit_code)
    except SupraError as e:
        print(e)
        sys.exit(EXIT_INPUT_ERROR)
    except (IOError, OSError) as e:
        print(e)
        sys.exit(EXIT_INPUT_ERROR)
    except Exception as e:
        if logger:
            logger.exception("Unexpected error")
        print(e)
        sys.exit(EXIT_INPUT_ERROR)


def configure_logger(config):
    """Configures a logger based on the configuration."""
    if config.options.verbose == VERBOSE_QUIET:
        logging.basicConfig(level=logging.CRITICAL)
    elif config.options.verbose == VERBOSE_NORMAL:
        logging.basicConfig(level=logging.WARNING)
    else:
        logging.basicConfig(level=logging.DEBUG)

    logger = get_logger()

    return logger


def exit_code(result, verdict=None):
    if result.status == STATUS_SUCCESS:
        if verdict is not None and not verdict.verified:
            return EXIT_COUNTEREXAMPLE
        return EXIT_SUCCESS
    if result.status == STATUS_SATURATED:
        return EXIT_SATURATED
    return EXIT_LIMIT


def execute_from_config(config, logger):
    """Executes a synthesis run given a config and logger."""
    if not config.spec_path:
        raise SupraError("A specification file must be supplied.")

    spec = read_spec(config.spec_path)
    problem = preprocess(spec, config.saturation_config.inject_bool_axiom)

    saturation_config = config.saturation_config
    if not saturation_config.precedence_hints and spec.precedence:
        saturation_config = saturation_config._replace(
            precedence_hints=list(spec.precedence))

    trace_file = None
    trace = None
    if config.options.trace:
        trace_file = codecs.open(config.options.trace, "w", "utf-8")
        trace = TraceWriter(trace_file)

    try:
        synthesizer = Synthesizer(problem, saturation_config, logger, trace)
        logger.info("Precedence: %s", LazyLogParam(
            lambda: synthesizer.precedence))
        if trace:
            trace.header(spec, saturation_config, synthesizer.precedence)
        result = synthesizer.synthesize()
    finally:
        close_quietly(trace_file)

    verdict = None
    if config.options.verify and result.status == STATUS_SUCCESS:
        verdict = check_solution(spec, result.program,
                                 config.options.verify_size)
        logger.info("Verification: %s", verdict.verified)

    return SynthesisRun(spec, problem, synthesizer.precedence, result,
                        verdict, exit_code(result, verdict))
