"""
Contains the reporting functions
"""
from __future__ import unicode_literals, absolute_import, print_function

import codecs
import json
import sys

from junit_xml import TestSuite, TestCase

from supra.models import (
    FORMAT_JSON, FORMAT_JUNIT, FORMAT_PLAIN, STATUS_SUCCESS, format_verdict)
from supra.terms import format_term


def close_quietly(a_file):
    """Closes a file and does not report an error."""
    try:
        if a_file:
            a_file.close()
    except Exception:
        pass


def report(run, config, total_time, logger=None):
    """Prints reports to console and file."""
    output_files = []
    output_file = None

    if config.options.output:
        output_file = codecs.open(config.options.output, "w", "utf-8")
        output_files.append(output_file)

    if config.options.console or not output_files:
        output_files.append(sys.stdout)

    try:
        if config.options.format == FORMAT_PLAIN:
            _write_plain_text_report(run, output_files, total_time)
        if config.options.format == FORMAT_JSON:
            _write_json_report(run, output_files, total_time)
        if config.options.format == FORMAT_JUNIT:
            _write_junit_report(run, output_files, total_time)
    except Exception:
        if logger:
            logger.exception("An exception occurred while writing the report")

    if output_file:
        close_quietly(output_file)


def _global_status(run):
    if run.result.status != STATUS_SUCCESS:
        return "ERROR"
    if run.verdict is not None and not run.verdict.verified:
        return "ERROR"
    return "SUCCESS"


def _write_plain_text_report(run, output_files, total_time):
    result = run.result
    stats = result.stats

    oprint("{0} {1} after {2} given clauses and {3} generated clauses in "
           "{4:.2f} seconds".format(
               _global_status(run), result.status, stats.iterations,
               stats.generated, total_time), files=output_files)

    if result.status == STATUS_SUCCESS:
        oprint("  program: {0}".format(format_term(result.program)),
               files=output_files)
        if len(result.programs) > 1:
            for program in result.programs[1:]:
                oprint("  also: {0}".format(format_term(program)),
                       files=output_files)
        oprint("  precedence: {0}".format(run.precedence),
               files=output_files)
        oprint("  proof: {0} inferences".format(len(result.proof)),
               files=output_files)
    else:
        oprint("  reason: {0}".format(result.reason), files=output_files)

    if run.verdict is not None:
        oprint("  verification: {0}".format(format_verdict(run.verdict)),
               files=output_files)
        counterexample = run.verdict.counterexample
        if counterexample:
            for symbol, table in sorted(counterexample.tables.items()):
                entries = ", ".join(
                    "{0}{1}={2}".format(symbol, args, value)
                    for args, value in sorted(table.items()))
                oprint("    {0}".format(entries), files=output_files)


def _run_to_dict(run, total_time):
    result = run.result
    stats = result.stats
    meta = {
        "global_status": _global_status(run),
        "status": result.status,
        "reason": result.reason,
        "total_time": total_time,
        "iterations": stats.iterations,
        "generated": stats.generated,
        "kept": stats.kept,
        "active": stats.active,
        "precedence": list(run.precedence.names),
    }
    res = {"meta": meta}
    if result.status == STATUS_SUCCESS:
        res["program"] = format_term(result.program)
        res["raw_answer"] = format_term(result.raw_answer)
        res["programs"] = [format_term(program)
                           for program in result.programs]
        res["proof"] = [
            {"id": clause_id, "rule": inference.rule,
             "premises": list(inference.premises),
             "clause": str(inference.conclusion.clause),
             "answer": format_term(inference.conclusion.answer)}
            for clause_id, inference in result.proof]
    if run.verdict is not None:
        verification = {
            "verified": run.verdict.verified,
            "max_size": run.verdict.max_size,
        }
        counterexample = run.verdict.counterexample
        if counterexample:
            verification["counterexample"] = {
                "sizes": counterexample.sizes,
                "inputs": counterexample.inputs,
                "tables": dict(
                    (symbol, [[list(args), value]
                              for args, value in sorted(table.items())])
                    for symbol, table in counterexample.tables.items()),
            }
        res["verification"] = verification
    return res


def _write_json_report(run, output_files, total_time):
    res = _run_to_dict(run, total_time)
    for output_file in output_files:
        output_file.write(
            json.dumps(res, sort_keys=True, indent=4, separators=(',', ': ')))
        output_file.write("\n")


def _write_junit_report(run, output_files, total_time):
    result = run.result
    name = "synthesis"
    test_cases = []

    if result.status == STATUS_SUCCESS:
        test_case = TestCase(
            name=name, classname="supra",
            elapsed_sec=result.stats.elapsed,
            stdout=format_term(result.program), status="passed")
    else:
        test_case = TestCase(
            name=name, classname="supra",
            elapsed_sec=result.stats.elapsed, status="failed")
        test_case.add_failure_info(
            message=result.reason, failure_type="NoProgramFound")
    test_cases.append(test_case)

    if run.verdict is not None:
        test_case = TestCase(
            name="verification", classname="supra",
            stdout=format_verdict(run.verdict),
            status="passed" if run.verdict.verified else "failed")
        if not run.verdict.verified:
            test_case.add_failure_info(
                message=format_verdict(run.verdict),
                failure_type="Counterexample")
        test_cases.append(test_case)

    test_suite = TestSuite("supra test suite", test_cases)
    for output_file in output_files:
        output_file.write(TestSuite.to_xml_string([test_suite]))


def report_replay(replay_report, output_files=None):
    output_files = output_files or [sys.stdout]
    status = "ERROR" if replay_report.mismatches else "SUCCESS"
    oprint("{0} Replayed {1} records with {2} mismatch(es)".format(
        status, replay_report.checked, len(replay_report.mismatches)),
        files=output_files)
    if replay_report.program:
        oprint("  program: {0}".format(replay_report.program),
               files=output_files)
    for clause_id, reason in replay_report.mismatches:
        oprint("  {0}: {1}".format(clause_id, reason), files=output_files)


def oprint(message, files):
    """Prints to a sequence of files."""
    for file in files:
        print(message, file=file)
