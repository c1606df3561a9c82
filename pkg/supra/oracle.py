# -*- coding: utf-8 -*-
"""
Finite-model oracle: interpretations over small carriers, evaluation of terms,
program terms, formulas and (answer) clauses, and bounded checking of
synthesized programs.
"""
from __future__ import unicode_literals, absolute_import

from collections import namedtuple
import itertools

from supra.models import (
    BOOL_SORT, TRUE_SYMBOL, FALSE_SYMBOL, ENUMERATION_LIMIT, Counterexample,
    Verdict, EvaluationError, EnumerationLimitError)
from supra.clauses import (
    Literal, Clause, AnswerClause, Equals, Atom, Constant, Not, Connective,
    Quantifier, AND, OR, IMPLIES, IFF, FORALL, free_variables)
from supra.terms import Var, Ite, variables


FALSE_VALUE = 0
TRUE_VALUE = 1
BOOL_CARRIER = (FALSE_VALUE, TRUE_VALUE)


class UndefinedEntry(EvaluationError):
    """Raised when evaluation reads a table entry that was not chosen yet."""

    def __init__(self, symbol, args):
        self.symbol = symbol
        self.arguments = args
        super(UndefinedEntry, self).__init__(
            "No value for {0}{1}".format(symbol, args))


class Interpretation(namedtuple("Interpretation", ["carriers", "tables"])):
    """carriers maps a sort to a tuple of elements (range(n)), tables map a
    symbol to a dict from argument tuples to elements."""
    __slots__ = ()

    def carrier(self, sort):
        return self.carriers[sort]

    def with_entry(self, symbol, args, value):
        tables = dict(self.tables)
        table = dict(tables.get(symbol, {}))
        table[args] = value
        tables[symbol] = table
        return Interpretation(self.carriers, tables)


def _bool_tables():
    return {TRUE_SYMBOL: {(): TRUE_VALUE}, FALSE_SYMBOL: {(): FALSE_VALUE}}


def _carriers(signature, sizes):
    carriers = {BOOL_SORT: BOOL_CARRIER}
    for sort, size in zip(_data_sorts(signature), sizes):
        carriers[sort] = tuple(range(size))
    return carriers


def _data_sorts(signature):
    return [sort for sort in signature.sorts if sort != BOOL_SORT]


def _free_symbols(signature):
    return [decl for decl in signature.symbols.values()
            if decl.name not in (TRUE_SYMBOL, FALSE_SYMBOL)]


def _size_combinations(signature, max_size, min_size=1):
    return itertools.product(range(min_size, max_size + 1),
                             repeat=len(_data_sorts(signature)))


def count_interpretations(signature, max_size, min_size=1):
    total = 0
    for sizes in _size_combinations(signature, max_size, min_size):
        carriers = _carriers(signature, sizes)
        count = 1
        for decl in _free_symbols(signature):
            entries = 1
            for sort in decl.arg_sorts:
                entries *= len(carriers[sort])
            count *= len(carriers[decl.result_sort]) ** entries
        total += count
    return total


def enumerate_interpretations(signature, max_size, min_size=1):
    """Yields every interpretation with carrier sizes min_size..max_size per
    non-bool sort, in a deterministic order.

    :raises EnumerationLimitError: when more than ENUMERATION_LIMIT
        interpretations would be produced.
    """
    if max_size < 1 or min_size < 1:
        raise EnumerationLimitError("Carrier sizes must be at least 1")
    total = count_interpretations(signature, max_size, min_size)
    if total > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            "{0} interpretations exceed the limit of {1}".format(
                total, ENUMERATION_LIMIT))
    symbols = _free_symbols(signature)
    for sizes in _size_combinations(signature, max_size, min_size):
        carriers = _carriers(signature, sizes)
        domains = []
        for decl in symbols:
            keys = list(itertools.product(
                *[carriers[sort] for sort in decl.arg_sorts]))
            domains.append((decl.name, keys, carriers[decl.result_sort]))
        choices = [itertools.product(values, repeat=len(keys))
                   for _, keys, values in domains]
        for assignment in itertools.product(*[list(c) for c in choices]):
            tables = _bool_tables()
            for (name, keys, _), row in zip(domains, assignment):
                tables[name] = dict(zip(keys, row))
            yield Interpretation(carriers, tables)


def random_interpretation(signature, size, rng):
    """Random total interpretation with every non-bool carrier of size."""
    carriers = _carriers(signature, [size] * len(_data_sorts(signature)))
    tables = _bool_tables()
    for decl in _free_symbols(signature):
        keys = itertools.product(*[carriers[sort] for sort in decl.arg_sorts])
        values = carriers[decl.result_sort]
        tables[decl.name] = dict(
            (key, rng.choice(values)) for key in keys)
    return Interpretation(carriers, tables)


def eval_term(term, interpretation, env):
    if isinstance(term, Var):
        try:
            return env[term]
        except KeyError:
            raise EvaluationError("Unbound variable: {0}".format(term))
    if isinstance(term, Ite):
        return eval_program(term, interpretation, env)
    args = tuple(eval_term(arg, interpretation, env) for arg in term.args)
    try:
        return interpretation.tables[term.symbol][args]
    except KeyError:
        raise UndefinedEntry(term.symbol, args)


def eval_program(program, interpretation, env):
    """Evaluates a program term; ite picks then iff its condition holds."""
    if isinstance(program, Ite):
        if eval_term(program.cond_lhs, interpretation, env) ==\
                eval_term(program.cond_rhs, interpretation, env):
            return eval_program(program.then, interpretation, env)
        return eval_program(program.otherwise, interpretation, env)
    return eval_term(program, interpretation, env)


def eval_literal(literal, interpretation, env):
    equal = eval_term(literal.lhs, interpretation, env) ==\
        eval_term(literal.rhs, interpretation, env)
    return equal == literal.positive


def eval_formula(formula, interpretation, env):
    """Short-circuit, left-to-right evaluation of a formula."""
    if isinstance(formula, Literal):
        return eval_literal(formula, interpretation, env)
    if isinstance(formula, Equals):
        return eval_term(formula.lhs, interpretation, env) ==\
            eval_term(formula.rhs, interpretation, env)
    if isinstance(formula, Atom):
        return eval_term(formula.term, interpretation, env) == TRUE_VALUE
    if isinstance(formula, Constant):
        return formula.value
    if isinstance(formula, Not):
        return not eval_formula(formula.body, interpretation, env)
    if isinstance(formula, Connective):
        parts = formula.parts
        if formula.op == AND:
            return all(eval_formula(part, interpretation, env)
                       for part in parts)
        if formula.op == OR:
            return any(eval_formula(part, interpretation, env)
                       for part in parts)
        if formula.op == IMPLIES:
            return not eval_formula(parts[0], interpretation, env) or\
                eval_formula(parts[1], interpretation, env)
        if formula.op == IFF:
            return eval_formula(parts[0], interpretation, env) ==\
                eval_formula(parts[1], interpretation, env)
    if isinstance(formula, Quantifier):
        valuations = _valuations(formula.variables, interpretation)
        check = all if formula.op == FORALL else any
        return check(
            eval_formula(formula.body, interpretation, _extend(env, val))
            for val in valuations)
    raise EvaluationError("Cannot evaluate {0}".format(formula))


def _valuations(variables_, interpretation):
    variables_ = list(variables_)
    for values in itertools.product(
            *[interpretation.carrier(var.sort) for var in variables_]):
        yield dict(zip(variables_, values))


def _extend(env, valuation):
    extended = dict(env)
    extended.update(valuation)
    return extended


def holds_clause(clause, interpretation, env=None):
    """Universal closure of the clause (variables not bound by env)."""
    env = env or {}
    free = [var for var in variables(clause) if var not in env]
    for valuation in _valuations(free, interpretation):
        local = _extend(env, valuation)
        if not any(eval_literal(literal, interpretation, local)
                   for literal in clause.literals):
            return False
    return True


def holds_clauses(clauses, interpretation):
    return all(holds_clause(clause, interpretation) for clause in clauses)


def holds_formula(formula, interpretation, env=None):
    """Universal closure of the formula."""
    env = env or {}
    free = [var for var in free_variables(formula) if var not in env]
    return all(eval_formula(formula, interpretation, _extend(env, valuation))
               for valuation in _valuations(free, interpretation))


def _input_env(problem, interpretation):
    return dict((var, eval_term(skolem, interpretation, {}))
                for var, skolem in problem.input_skolems.items())


def holds_answer_clause(answer_clause, problem, interpretation):
    """True iff the universal closure of C or F[inputs, answer] holds, the
    inputs being the values of their Skolem constants."""
    if isinstance(answer_clause, Clause):
        answer_clause = AnswerClause(answer_clause, problem.output)
    inputs = _input_env(problem, interpretation)
    for valuation in _valuations(variables(answer_clause), interpretation):
        if any(eval_literal(literal, interpretation, valuation)
               for literal in answer_clause.clause.literals):
            continue
        env = _extend(inputs, {})
        env[problem.output] = eval_program(
            answer_clause.answer, interpretation, valuation)
        if not eval_formula(problem.formula, interpretation, env):
            return False
    return True


def _program_holds(spec, program, interpretation):
    """Returns the failing input valuation or None."""
    extra = [var for var in variables(program)
             if var not in spec.inputs and var != spec.output]
    for valuation in _valuations(list(spec.inputs) + extra, interpretation):
        env = dict(valuation)
        env[spec.output] = eval_program(program, interpretation, valuation)
        if not eval_formula(spec.formula, interpretation, env):
            return valuation
    return None


def _complete_tables(signature, interpretation):
    tables = {}
    for decl in signature.symbols.values():
        table = interpretation.tables.get(decl.name, {})
        keys = itertools.product(
            *[interpretation.carrier(sort) for sort in decl.arg_sorts])
        tables[decl.name] = dict((key, table.get(key, 0)) for key in keys)
    return tables


def check_solution(spec, program, max_size):
    """Checks that program satisfies the specification in every
    interpretation with carriers of size at most max_size.

    Table entries are chosen lazily, when an evaluation reads them, so an
    interpretation is only completed as far as the check depends on it.

    :param program: a program term over the input variables.
    :rtype: A Verdict.
    """
    signature = spec.signature
    visited = [0]
    for sizes in _size_combinations(signature, max_size):
        carriers = _carriers(signature, sizes)
        stack = [Interpretation(carriers, _bool_tables())]
        while stack:
            interpretation = stack.pop()
            visited[0] += 1
            if visited[0] > ENUMERATION_LIMIT:
                raise EnumerationLimitError(
                    "Verification visited more than {0} partial "
                    "interpretations".format(ENUMERATION_LIMIT))
            try:
                failing = _program_holds(spec, program, interpretation)
            except UndefinedEntry as entry:
                result_sort = signature.decl(entry.symbol).result_sort
                for value in reversed(carriers[result_sort]):
                    stack.append(interpretation.with_entry(
                        entry.symbol, entry.arguments, value))
                continue
            if failing is not None:
                counterexample = Counterexample(
                    dict(zip(_data_sorts(signature), sizes)),
                    _complete_tables(signature, interpretation),
                    dict((var.name, value)
                         for var, value in failing.items()))
                return Verdict(False, max_size, counterexample)
    return Verdict(True, max_size, None)
