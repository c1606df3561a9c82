# -*- coding: utf-8 -*-
"""
JSON lines trace of a saturation run and its replay.

The first record is a header carrying the spec text and everything needed to
rebuild the calculus; then one record per recorded clause (input or
inference) and a final result record.
"""
from __future__ import unicode_literals, absolute_import

import json

from supra.models import (
    SaturationConfig, ReplayReport, RULE_INPUT, STATUS_SUCCESS, ReplayError,
    SupraError)
from supra.calculus import InferenceSite
from supra.clauses import preprocess, normalize
from supra.orders import Precedence
from supra.saturation import build_calculus, extract_program
from supra.specfile import parse_spec
from supra.terms import format_term, format_substitution


RECORD_HEADER = "header"
RECORD_INPUT = "input"
RECORD_INFERENCE = "inference"
RECORD_RESULT = "result"


def _site_to_dict(site):
    if site is None:
        return None
    return {
        "literal": site.literal,
        "flip": site.flip,
        "other_literal": site.other_literal,
        "other_flip": site.other_flip,
        "position": list(site.position),
    }


def _site_from_dict(data):
    if data is None:
        return None
    return InferenceSite(
        data["literal"], data["flip"], data["other_literal"],
        data["other_flip"], tuple(data["position"]))


class TraceWriter(object):
    """Writes trace records to an open text file."""

    def __init__(self, trace_file):
        self.trace_file = trace_file

    def _write(self, record):
        self.trace_file.write(json.dumps(record, sort_keys=True))
        self.trace_file.write("\n")

    def header(self, spec, config, precedence):
        self._write({
            "type": RECORD_HEADER,
            "spec": spec.text,
            "ordering": config.ordering,
            "selection": config.selection,
            "partitioned": config.partitioned,
            "abstraction": config.abstraction,
            "inject_bool_axiom": config.inject_bool_axiom,
            "all_solutions": config.all_solutions,
            "weights": dict((name, list(weight))
                            for name, weight in config.weights.items()),
            "precedence": list(precedence.names),
        })

    def record(self, clause_id, inference):
        conclusion = inference.conclusion
        record = {
            "id": clause_id,
            "clause": str(conclusion.clause),
            "answer": format_term(conclusion.answer),
        }
        if inference.rule == RULE_INPUT:
            record["type"] = RECORD_INPUT
        else:
            record.update({
                "type": RECORD_INFERENCE,
                "rule": inference.rule,
                "premises": list(inference.premises),
                "site": _site_to_dict(inference.site),
                "unifier": format_substitution(inference.unifier),
            })
        self._write(record)

    def result(self, result):
        record = {
            "type": RECORD_RESULT,
            "status": result.status,
            "reason": result.reason,
        }
        if result.status == STATUS_SUCCESS:
            record.update({
                "program": format_term(result.program),
                "raw_answer": format_term(result.raw_answer),
                "solution": result.proof[-1][0],
                "proof": [clause_id for clause_id, _ in result.proof],
            })
        self._write(record)


def read_trace(path):
    """Returns the list of records of a trace file."""
    records = []
    with open(path, "rb") as trace_file:
        for number, line in enumerate(trace_file, 1):
            line = line.decode("utf-8").strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except ValueError as e:
                raise ReplayError(
                    "Line {0} is not valid JSON: {1}".format(number, e))
    if not records or records[0].get("type") != RECORD_HEADER:
        raise ReplayError("A trace must start with a header record")
    return records


def _printed(answer_clause):
    return str(answer_clause.clause), format_term(answer_clause.answer)


def replay_records(records, logger=None):
    """Re-applies every recorded inference and compares printed forms.

    :rtype: A ReplayReport listing (id, reason) mismatches.
    """
    header = records[0]
    spec = parse_spec(header["spec"])
    problem = preprocess(spec, header["inject_bool_axiom"])
    config = SaturationConfig(
        ordering=header["ordering"], selection=header["selection"],
        partitioned=header["partitioned"], abstraction=header["abstraction"],
        weights=dict((name, tuple(weight))
                     for name, weight in header["weights"].items()))
    precedence = Precedence(header["precedence"])
    precedence, calculus = build_calculus(problem, config, precedence)

    inputs = [normalize(clause) for clause in problem.clauses]
    clauses = {}
    mismatches = []
    checked = 0
    program = None

    for record in records[1:]:
        kind = record.get("type")
        if kind == RECORD_RESULT:
            if record["status"] != STATUS_SUCCESS:
                continue
            checked += 1
            solution = clauses.get(record["solution"])
            if solution is None or not solution.clause.is_empty():
                mismatches.append((record["solution"], "not an empty clause"))
                continue
            try:
                program = format_term(
                    extract_program(solution, problem, precedence))
            except SupraError as e:
                mismatches.append((record["solution"], str(e)))
                continue
            if program != record["program"]:
                mismatches.append((record["solution"], "program {0} != {1}"
                                   .format(program, record["program"])))
            continue

        checked += 1
        clause_id = record["id"]
        expected = (record["clause"], record["answer"])
        if kind == RECORD_INPUT:
            if not inputs:
                mismatches.append((clause_id, "unexpected input clause"))
                continue
            conclusion = inputs.pop(0)
        elif kind == RECORD_INFERENCE:
            try:
                premises = [clauses[premise]
                            for premise in record["premises"]]
            except KeyError as e:
                mismatches.append((clause_id, "unknown premise {0}".format(
                    e.args[0])))
                continue
            conclusion = calculus.apply(
                record["rule"], premises, _site_from_dict(record["site"]))
            if conclusion is None:
                mismatches.append((clause_id, "{0} not applicable".format(
                    record["rule"])))
                continue
            conclusion = normalize(conclusion)
        else:
            raise ReplayError("Unknown record type: {0}".format(kind))

        clauses[clause_id] = conclusion
        if _printed(conclusion) != expected:
            mismatches.append((clause_id, "{0} != {1}".format(
                "<{0}, {1}>".format(*_printed(conclusion)),
                "<{0}, {1}>".format(*expected))))
        elif logger:
            logger.debug("Replayed %s", clause_id)

    return ReplayReport(checked, tuple(mismatches), program)


def replay(path, logger=None):
    return replay_records(read_trace(path), logger)
