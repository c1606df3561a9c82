# -*- coding: utf-8 -*-
"""
Contains the synthesis models. We use namedtuple for most models (easier to
pickle, lower footprint, indicates that it is immutable) and we use classes for
objects with mutable states and helper methods.

Classes with saturation logic are declared in the saturation module.
"""
from __future__ import unicode_literals, absolute_import

from collections import namedtuple
from collections.abc import Mapping
from optparse import OptionParser, OptionGroup
import re


def namedtuple_with_defaults(typename, field_names, default_values=[]):
    """Creates a namedtuple with default values so they don't have to be
    provided for each argument.
    """
    T = namedtuple(typename, field_names)

    # Set None everywhere
    T.__new__.__defaults__ = (None,) * len(T._fields)

    # Set provided default values
    if isinstance(default_values, Mapping):
        prototype = T(**default_values)
    else:
        prototype = T(*default_values)
    T.__new__.__defaults__ = tuple(prototype)

    # Return new type
    return T


BOOL_SORT = "bool"
TRUE_SYMBOL = "true"
FALSE_SYMBOL = "false"

INPUT_SKOLEM_PREFIX = "in_"
SKOLEM_PREFIX = "sk"


ORDERING_LPO = "lpo"
ORDERING_TKBO = "tkbo"


SELECTION_MAXIMAL = "maximal"
SELECTION_NEGATIVE = "negative"


RULE_INPUT = "Input"
RULE_SUPC = "SupC"
RULE_SUPU = "SupU"
RULE_EQRES = "EqRes"
RULE_EQFAC = "EqFac"
RULE_ABS = "Abs"


STATUS_SUCCESS = "success"
STATUS_SATURATED = "saturated"
STATUS_LIMIT = "limit"
STATUS_ERROR = "error"


LIMIT_ITERATIONS = "iterations"
LIMIT_CLAUSES = "clauses"
LIMIT_TIME = "time"


DEFAULT_MAX_ITERATIONS = 10000
DEFAULT_MAX_CLAUSES = 100000
DEFAULT_TIMEOUT = 60
DEFAULT_VERIFY_SIZE = 3
DEFAULT_SIZE_WEIGHT = 1
DEFAULT_AGE_WEIGHT = 1

ENUMERATION_LIMIT = 10 ** 7


COMMAND_SYNTHESIZE = "synthesize"
COMMAND_REPLAY = "replay"


FORMAT_PLAIN = "plain"
FORMAT_JSON = "json"
FORMAT_JUNIT = "junit"


VERBOSE_QUIET = "0"
VERBOSE_NORMAL = "1"
VERBOSE_INFO = "2"


EXIT_SUCCESS = 0
EXIT_SATURATED = 1
EXIT_LIMIT = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_INPUT_ERROR = 4
EXIT_REPLAY_MISMATCH = 5


WEIGHT_PATTERN = re.compile(r"^(?:(\d*)w)?(?:\+?(\d+))?$")


class SupraError(Exception):
    """Base class of the errors raised by supra."""


class SpecificationError(SupraError):
    """Syntax or validation error in a specification, with its location."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = "{0}:{1}: {2}".format(line, column, message)
        super(SpecificationError, self).__init__(message)


class ConfigurationError(SupraError):
    pass


class InvalidSubstitutionError(SupraError):
    pass


class UnificationFailure(SupraError):
    """Raised by unify. reason is REASON_OCCURS_CHECK or REASON_CLASH."""

    REASON_OCCURS_CHECK = "occurs-check"
    REASON_CLASH = "clash"

    def __init__(self, reason, left, right):
        self.reason = reason
        self.left = left
        self.right = right
        super(UnificationFailure, self).__init__(
            "{0}: {1} / {2}".format(reason, left, right))


class PreconditionError(SupraError):
    pass


class EvaluationError(SupraError):
    pass


class EnumerationLimitError(SupraError):
    pass


class ExtractionError(SupraError):

    def __init__(self, message, raw_program):
        self.raw_program = raw_program
        super(ExtractionError, self).__init__(
            "{0} (raw program: {1})".format(message, raw_program))


class AbstractionLimitError(SupraError):
    pass


class ReplayError(SupraError):
    pass


Limits = namedtuple_with_defaults(
    "Limits", ["max_iterations", "max_clauses", "timeout"],
    [DEFAULT_MAX_ITERATIONS, DEFAULT_MAX_CLAUSES, DEFAULT_TIMEOUT])


SaturationConfig = namedtuple_with_defaults(
    "SaturationConfig",
    ["ordering", "precedence_hints", "weights", "selection", "partitioned",
     "abstraction", "inject_bool_axiom", "all_solutions", "size_weight",
     "age_weight", "limits", "progress"],
    {"ordering": ORDERING_LPO, "weights": {}, "selection": SELECTION_MAXIMAL,
     "partitioned": True, "abstraction": True, "inject_bool_axiom": False,
     "all_solutions": False, "size_weight": DEFAULT_SIZE_WEIGHT,
     "age_weight": DEFAULT_AGE_WEIGHT, "limits": Limits(), "progress": False})


Stats = namedtuple_with_defaults(
    "Stats", ["iterations", "generated", "kept", "active", "elapsed"],
    [0, 0, 0, 0, 0.0])


SynthesisResult = namedtuple_with_defaults(
    "SynthesisResult",
    ["status", "program", "raw_answer", "programs", "proof", "reason",
     "stats"],
    {"programs": (), "proof": ()})


Counterexample = namedtuple_with_defaults(
    "Counterexample", ["sizes", "tables", "inputs"])


Verdict = namedtuple_with_defaults(
    "Verdict", ["verified", "max_size", "counterexample"])


ReplayReport = namedtuple_with_defaults(
    "ReplayReport", ["checked", "mismatches", "program"], {"mismatches": ()})


SynthesisRun = namedtuple_with_defaults(
    "SynthesisRun",
    ["spec", "problem", "precedence", "result", "verdict", "exit_code"])


def format_verdict(verdict):
    if verdict.verified:
        return "verified-up-to({0})".format(verdict.max_size)
    counterexample = verdict.counterexample
    return "counterexample(inputs={0}, sizes={1})".format(
        counterexample.inputs, counterexample.sizes)


def parse_weight(text):
    """Parses N, w, w+N or Kw+N into an (omega_coeff, finite) pair."""
    text = text.replace(" ", "")
    match = WEIGHT_PATTERN.match(text)
    if not text or not match:
        raise ConfigurationError("Invalid weight: {0}".format(text))
    omega, finite = match.groups()
    if "w" in text:
        omega = int(omega) if omega else 1
    else:
        omega = 0
    return (omega, int(finite) if finite else 0)


class LazyLogParam(object):
    """Lazy Log Parameter that is only evaluated if the logging statement
       is printed"""

    def __init__(self, func):
        self.func = func

    def __str__(self):
        return str(self.func())


class SupraOptionParser(OptionParser):
    """Reports usage errors as ConfigurationError instead of exiting."""

    def error(self, msg):
        raise ConfigurationError(msg)


class Config(object):
    """Contains all the configuration options."""

    def __init__(self):
        # Design note: we only use attributes when options need to be
        # transformed. Otherwise, we use options.
        self.parser = self._build_parser()
        self.options = None
        self.args = []
        self.command = COMMAND_SYNTHESIZE
        self.spec_path = None
        self.trace_path = None
        self.precedence_hints = None
        self.weights = {}
        self.limits = None
        self.saturation_config = None

    def parse_cli_config(self):
        """Builds the options and args based on the command line options."""
        (self.options, self.args) = self.parser.parse_args()
        self._parse_config()

    def parse_api_config(self, args, options_dict=None):
        """Builds the options and args based on passed parameters."""
        options = self._get_options(options_dict)
        (self.options, self.args) = self.parser.parse_args(
            options + list(args))
        self._parse_config()

    def _get_options(self, options_dict):
        if not options_dict:
            options_dict = {}
        options = []
        for key, value in options_dict.items():
            if isinstance(value, bool):
                if value:
                    options.append("--{0}".format(key))
            else:
                options.append("--{0}={1}".format(key, value))
        return options

    def _parse_config(self):
        if self.args and self.args[0] == COMMAND_REPLAY:
            if len(self.args) != 2:
                raise ConfigurationError(
                    "Usage: replay TRACE_FILE")
            self.command = COMMAND_REPLAY
            self.trace_path = self.args[1]
        elif len(self.args) == 1:
            self.command = COMMAND_SYNTHESIZE
            self.spec_path = self.args[0]
        else:
            raise ConfigurationError(
                "Exactly one specification file must be supplied.")

        if self.options.precedence:
            self.precedence_hints = [
                name.strip() for name in self.options.precedence.split(",")
                if name.strip()]

        self.weights = self._build_weights(self.options.weights)

        for name in ("max_iterations", "max_clauses", "timeout",
                     "verify_size"):
            if getattr(self.options, name) <= 0:
                raise ConfigurationError(
                    "--{0} must be positive".format(name.replace("_", "-")))
        if self.options.size_weight < 0 or self.options.age_weight < 0 or\
                self.options.size_weight + self.options.age_weight == 0:
            raise ConfigurationError(
                "Clause selection weights must be non-negative and not both "
                "zero.")

        self.limits = Limits(
            self.options.max_iterations, self.options.max_clauses,
            self.options.timeout)
        self.saturation_config = self._build_saturation_config(self.options)

    def _build_saturation_config(self, options):
        return SaturationConfig(
            options.ordering, self.precedence_hints, self.weights,
            options.selection, not options.unpartitioned, not options.no_abs,
            options.inject_bool_axiom, options.all_solutions,
            options.size_weight, options.age_weight, self.limits,
            options.progress)

    def _build_weights(self, weights_option):
        weights = {}
        if not weights_option:
            return weights
        for entry in weights_option.split(","):
            if not entry.strip():
                continue
            if "=" not in entry:
                raise ConfigurationError(
                    "Invalid weight entry (expected name=W): {0}"
                    .format(entry))
            name, value = entry.split("=", 1)
            weights[name.strip()] = parse_weight(value)
        return weights

    def _build_parser(self):
        # avoid circular references
        import supra
        version = supra.__version__

        parser = SupraOptionParser(
            usage="%prog [options] SPEC_FILE\n"
            "       %prog [options] replay TRACE_FILE",
            version="%prog {0}".format(version))

        parser.add_option(
            "-V", "--verbose", dest="verbose", action="store",
            default=VERBOSE_QUIET, choices=[VERBOSE_QUIET, VERBOSE_NORMAL,
                                            VERBOSE_INFO])

        saturation_group = OptionGroup(
            parser, "Saturation Options",
            "These options modify the orders, the selection and the rules "
            "used during saturation.")
        saturation_group.add_option(
            "-O", "--ordering", dest="ordering", action="store",
            default=ORDERING_LPO, choices=[ORDERING_LPO, ORDERING_TKBO],
            help="Simplification order: lpo (default) or tkbo")
        saturation_group.add_option(
            "-p", "--precedence", dest="precedence", action="store",
            default=None,
            help="Comma-separated symbols, greatest first, ordered within "
            "the computable and uncomputable classes (e.g., ws,vamp,paar)")
        saturation_group.add_option(
            "--weights", dest="weights", action="store", default=None,
            help="Comma-separated tkbo weights of the form name=W where W "
            "is N, w, w+N or Kw+N (e.g., f=w+2,a=1)")
        saturation_group.add_option(
            "-s", "--selection", dest="selection", action="store",
            default=SELECTION_MAXIMAL,
            choices=[SELECTION_MAXIMAL, SELECTION_NEGATIVE],
            help="Literal selection: maximal (default) or negative")
        saturation_group.add_option(
            "--unpartitioned", dest="unpartitioned", action="store_true",
            default=False,
            help="Do not force uncomputable symbols above computable ones "
            "in the precedence")
        saturation_group.add_option(
            "--no-abs", dest="no_abs", action="store_true", default=False,
            help="Disable the abstraction rule")
        saturation_group.add_option(
            "--inject-bool-axiom", dest="inject_bool_axiom",
            action="store_true", default=False,
            help="Add the clause true != false to the initial set")
        saturation_group.add_option(
            "-a", "--all-solutions", dest="all_solutions",
            action="store_true", default=False,
            help="Keep saturating after the first solution")
        saturation_group.add_option(
            "--size-weight", dest="size_weight", type="int",
            action="store", default=DEFAULT_SIZE_WEIGHT,
            help="Weight of the clause size in clause selection "
            "(default = 1)")
        saturation_group.add_option(
            "--age-weight", dest="age_weight", type="int",
            action="store", default=DEFAULT_AGE_WEIGHT,
            help="Weight of the clause age in clause selection "
            "(default = 1)")
        saturation_group.add_option(
            "-P", "--progress", dest="progress",
            action="store_true", default=False,
            help="Prints saturation progress in the console")

        parser.add_option_group(saturation_group)

        limit_group = OptionGroup(
            parser, "Limit Options",
            "These options bound the saturation.")
        limit_group.add_option(
            "-I", "--max-iterations", dest="max_iterations", type="int",
            action="store", default=DEFAULT_MAX_ITERATIONS,
            help="Maximum number of given clauses (default = 10000)")
        limit_group.add_option(
            "-C", "--max-clauses", dest="max_clauses", type="int",
            action="store", default=DEFAULT_MAX_CLAUSES,
            help="Maximum number of generated clauses (default = 100000)")
        limit_group.add_option(
            "-T", "--timeout", dest="timeout", type="float",
            action="store", default=DEFAULT_TIMEOUT,
            help="Seconds before giving up (default = 60)")

        parser.add_option_group(limit_group)

        verification_group = OptionGroup(
            parser, "Verification Options",
            "These options check the synthesized program on finite models.")
        verification_group.add_option(
            "-v", "--verify", dest="verify", action="store_true",
            default=False,
            help="Check the program on all interpretations up to the "
            "verification size")
        verification_group.add_option(
            "--verify-size", dest="verify_size", type="int", action="store",
            default=DEFAULT_VERIFY_SIZE,
            help="Largest carrier size used by --verify (default = 3)")

        parser.add_option_group(verification_group)

        output_group = OptionGroup(
            parser, "Output Options",
            "These options change the output of the synthesizer.")
        output_group.add_option(
            "-f", "--format", dest="format", action="store",
            default=FORMAT_PLAIN,
            choices=[FORMAT_PLAIN, FORMAT_JSON, FORMAT_JUNIT],
            help="Format of the report: plain (default), json, junit")
        output_group.add_option(
            "-o", "--output", dest="output", action="store",
            default=None,
            help="Path of the file where the report will be printed.")
        output_group.add_option(
            "-c", "--console", dest="console",
            action="store_true", default=False,
            help="Prints report to the console in addition to other output "
            "options such as file.")
        output_group.add_option(
            "-t", "--trace", dest="trace", action="store", default=None,
            help="Path of the JSON lines file recording every inference")

        parser.add_option_group(output_group)

        return parser

    def __str__(self):
        return "Configuration - Args: {0} - Options: {1}".format(
            self.args, self.options)
