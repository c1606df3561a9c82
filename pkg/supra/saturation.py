# -*- coding: utf-8 -*-
"""
Contains the saturation logic: the given-clause loop over answer clauses,
success detection and program extraction.
"""
from __future__ import unicode_literals, absolute_import

import heapq
import time

from supra.models import (
    SaturationConfig, SynthesisResult, Stats, RULE_INPUT, RULE_ABS,
    STATUS_SUCCESS, STATUS_SATURATED, STATUS_LIMIT, STATUS_ERROR,
    LIMIT_ITERATIONS, LIMIT_CLAUSES, LIMIT_TIME, ExtractionError,
    LazyLogParam)
from supra.calculus import SynthesisCalculus, Inference
from supra.clauses import is_tautology, normalize, variant_key, clause_key
from supra.orders import (
    build_order, make_partitioned_precedence, make_precedence)
from supra.terms import (
    Var, App, Ite, variables, term_size, format_term, simplify_program)


def resolve_hints(problem, hints):
    """Input variable names in precedence hints stand for their Skolem
    constants."""
    by_name = dict((var.name, skolem.symbol)
                   for var, skolem in problem.input_skolems.items())
    resolved = []
    for name in hints or []:
        if name not in problem.signature and name in by_name:
            name = by_name[name]
        resolved.append(name)
    return resolved


def build_precedence(problem, hints=None, partitioned=True):
    hints = resolve_hints(problem, hints)
    if partitioned:
        return make_partitioned_precedence(problem.signature, hints)
    return make_precedence(problem.signature, hints)


def build_calculus(problem, config, precedence=None):
    """Returns (precedence, calculus) for a problem and a SaturationConfig."""
    if precedence is None:
        precedence = build_precedence(
            problem, config.precedence_hints, config.partitioned)
    order = build_order(config.ordering, problem.signature, precedence,
                        config.weights)
    calculus = SynthesisCalculus(problem.signature, order, config.selection,
                                 config.abstraction)
    return precedence, calculus


def clause_priority(answer_clause, age, size_weight=1, age_weight=1):
    """Smaller is better: empty clauses first, then a weighted mix of size
    (clause and answer) and age, ties broken by age."""
    if answer_clause.clause.is_empty():
        return (0, 0, age)
    size = term_size(answer_clause)
    return (1, size_weight * size + age_weight * age, age)


def _replace_symbols(program, replacements):
    if isinstance(program, App):
        if not program.args and program.symbol in replacements:
            return replacements[program.symbol]
        return App(program.symbol, tuple(
            _replace_symbols(arg, replacements) for arg in program.args),
            program.sort)
    if isinstance(program, Ite):
        return Ite(*[_replace_symbols(part, replacements)
                     for part in program])
    return program


def _least_constant(problem, sort, precedence):
    skolems = set(skolem.symbol for skolem in problem.input_skolems.values())
    candidates = [name for name in problem.signature.constants(sort, True)
                  if name not in skolems]
    if not candidates:
        return None
    if precedence is None:
        return min(candidates)
    return min(candidates, key=lambda name: precedence.rank[name])


def extract_program(success_clause, problem, precedence=None):
    """Turns the answer of an empty answer clause into a program over the
    input variables.

    Free variables are grounded with the least computable constant of their
    sort.

    :raises ExtractionError: when a free variable has no such constant.
    """
    raw = success_clause.answer
    grounding = {}
    for var in variables(raw):
        name = _least_constant(problem, var.sort, precedence)
        if name is None:
            raise ExtractionError(
                "No computable constant of sort {0} to ground {1}".format(
                    var.sort, var.name), format_term(raw))
        grounding[var] = App(name, (), var.sort)
    program = _ground(raw, grounding)
    inputs = dict((skolem.symbol, var)
                  for var, skolem in problem.input_skolems.items())
    return simplify_program(_replace_symbols(program, inputs))


def _ground(program, grounding):
    if isinstance(program, Var):
        return grounding.get(program, program)
    if isinstance(program, App):
        return App(program.symbol, tuple(
            _ground(arg, grounding) for arg in program.args), program.sort)
    return Ite(*[_ground(part, grounding) for part in program])


class Synthesizer(object):
    """Main saturation loop/orchestrator"""

    def __init__(self, problem, config=None, logger=None, trace=None,
                 precedence=None):
        self.problem = problem
        self.config = config or SaturationConfig()
        self.logger = logger
        self.trace = trace
        self.precedence, self.calculus = build_calculus(
            problem, self.config, precedence)

        self.clauses = {}
        """Every clause ever recorded, by id."""

        self.origins = {}
        """Inference that produced each recorded clause, by id."""

        self.passive = []
        self.active = []
        self.seen = set()
        self.answered = set()
        self.next_id = 0
        self.generated = 0
        self.iterations = 0
        self.start = None
        self.solutions = []

    def _debug(self, message, *args):
        if self.logger:
            self.logger.debug(message, *args)

    def _record(self, inference):
        clause_id = self.next_id
        self.next_id += 1
        self.clauses[clause_id] = inference.conclusion
        self.origins[clause_id] = inference
        if self.trace is not None:
            self.trace.record(clause_id, inference)
        return clause_id

    def redundant(self, answer_clause):
        """Returns why answer_clause is redundant, or None after marking it
        as kept.

        An ite answer is dropped when the same clause is already kept with
        another answer.
        """
        if is_tautology(answer_clause.clause):
            return "Tautology"
        key = variant_key(answer_clause)
        if key in self.seen:
            return "Duplicate"
        answered_key = clause_key(answer_clause.clause)
        if isinstance(answer_clause.answer, Ite) and\
                answered_key in self.answered:
            return "Answer variant"
        self.seen.add(key)
        self.answered.add(answered_key)
        return None

    def _enqueue(self, clause_id):
        """Adds a recorded clause to passive unless it is redundant.

        Returns False when it was discarded.
        """
        answer_clause = self.clauses[clause_id]
        reason = self.redundant(answer_clause)
        if reason:
            self._debug("%s %s deleted", reason, clause_id)
            return False
        heapq.heappush(self.passive, (clause_priority(
            answer_clause, clause_id, self.config.size_weight,
            self.config.age_weight), clause_id))
        return True

    def _success(self, clause_id):
        answer_clause = self.clauses[clause_id]
        try:
            program = extract_program(answer_clause, self.problem,
                                      self.precedence)
        except ExtractionError as e:
            self._finish(STATUS_ERROR, str(e))
            raise
        if program not in [solution[1] for solution in self.solutions]:
            self.solutions.append((clause_id, program))
            self._debug("Solution %s: %s", clause_id,
                        LazyLogParam(lambda: format_term(program)))

    def _limit_reason(self):
        limits = self.config.limits
        if self.iterations >= limits.max_iterations:
            return LIMIT_ITERATIONS
        if self.generated >= limits.max_clauses:
            return LIMIT_CLAUSES
        if time.time() - self.start >= limits.timeout:
            return LIMIT_TIME
        return None

    def _activate(self, clause_id):
        """Abstracts the given clause; returns the id of its abstracted form
        or None when that form is redundant."""
        steps = self.calculus.abstraction_steps(
            self.clauses[clause_id], normalize)
        if len(steps) == 1:
            return clause_id
        for step in steps[1:]:
            clause_id = self._record(Inference(
                RULE_ABS, (clause_id,), {}, None, step))
        if self.redundant(self.clauses[clause_id]):
            return None
        return clause_id

    def synthesize(self):
        """Saturates the initial answer clauses of the problem.

        :rtype: A SynthesisResult.
        """
        self.start = time.time()
        self.start_progress()

        for answer_clause in self.problem.clauses:
            clause_id = self._record(Inference(
                RULE_INPUT, (), {}, None, normalize(answer_clause)))
            self._debug("Input %s: %s", clause_id, LazyLogParam(
                lambda: self.clauses[clause_id]))
            if self.clauses[clause_id].clause.is_empty():
                self._success(clause_id)
                if not self.config.all_solutions:
                    return self._finish(STATUS_SUCCESS)
            self._enqueue(clause_id)

        while self.passive:
            reason = self._limit_reason()
            if reason:
                return self._finish(STATUS_LIMIT, reason)

            _, given_id = heapq.heappop(self.passive)
            if self.clauses[given_id].clause.is_empty():
                continue
            self.iterations += 1
            given_id = self._activate(given_id)
            if given_id is None:
                continue
            given = self.clauses[given_id]
            self._debug("Given %s: %s", given_id, LazyLogParam(
                lambda: self.clauses[given_id]))
            self.active.append((given_id, given))

            for inference in self.calculus.generate(
                    given_id, given, self.active):
                self.generated += 1
                clause_id = self._record(
                    inference._replace(conclusion=normalize(
                        inference.conclusion)))
                if self.clauses[clause_id].clause.is_empty():
                    self._success(clause_id)
                    if not self.config.all_solutions:
                        return self._finish(STATUS_SUCCESS)
                elif self._enqueue(clause_id):
                    self._debug("Kept %s by %s from %s: %s", clause_id,
                                inference.rule, inference.premises,
                                LazyLogParam(
                                    lambda: self.clauses[clause_id]))
                if self.generated >= self.config.limits.max_clauses:
                    return self._finish(STATUS_LIMIT, LIMIT_CLAUSES)

            self.progress(given_id, given)

        if self.solutions:
            return self._finish(STATUS_SUCCESS)
        return self._finish(STATUS_SATURATED)

    def _finish(self, status, reason=None):
        self.stop_progress()
        if self.solutions:
            status = STATUS_SUCCESS
        stats = Stats(self.iterations, self.generated, len(self.clauses),
                      len(self.active), time.time() - self.start)
        if status == STATUS_SUCCESS:
            success_id, program = self.solutions[0]
            result = SynthesisResult(
                status, program, self.clauses[success_id].answer,
                tuple(solution[1] for solution in self.solutions),
                self.proof(success_id), None, stats)
        elif status == STATUS_SATURATED:
            result = SynthesisResult(
                status, reason="saturated without deriving an empty clause "
                "(stuck)", stats=stats)
        else:
            result = SynthesisResult(status, reason=reason, stats=stats)

        if self.logger:
            if status == STATUS_SUCCESS:
                self.logger.info("Program found: %s", LazyLogParam(
                    lambda: format_term(result.program)))
            else:
                self.logger.warning("No program found: %s (%s)", status,
                                    result.reason)
        if self.trace is not None:
            self.trace.result(result)
        return result

    def proof(self, clause_id):
        """Returns the (id, Inference) pairs deriving clause_id, by id."""
        needed = set()
        pending = [clause_id]
        while pending:
            current = pending.pop()
            if current in needed:
                continue
            needed.add(current)
            pending.extend(self.origins[current].premises)
        return tuple((current, self.origins[current])
                     for current in sorted(needed))

    def start_progress(self):
        if self.config.progress:
            print("Starting saturation...")

    def stop_progress(self):
        if self.config.progress:
            print("Saturation Done...\n")

    def progress(self, given_id, given):
        if not self.config.progress:
            return

        print("{0} - {1} (active {2}, passive {3}, generated {4})".format(
            given_id, given, len(self.active), len(self.passive),
            self.generated))


def saturate(problem, config=None, logger=None, trace=None):
    """Runs the given-clause loop on a preprocessed problem."""
    return Synthesizer(problem, config, logger, trace).synthesize()
