# -*- coding: utf-8 -*-
"""
Literals, clauses, answer clauses, specification formulas and the
preprocessing pipeline turning a specification into its initial set of answer
clauses: negate, push negations in, replace inputs by computable Skolem
constants, skolemize, clausify and attach the output variable as answer.
"""
from __future__ import unicode_literals, absolute_import

from collections import namedtuple, OrderedDict

from supra.models import (
    namedtuple_with_defaults, BOOL_SORT, TRUE_SYMBOL, FALSE_SYMBOL,
    INPUT_SKOLEM_PREFIX, SKOLEM_PREFIX, SpecificationError)
from supra.terms import (
    Var, App, VariableFactory, substitute, variables, format_term,
    simplify_program)


class Literal(namedtuple("Literal", ["lhs", "rhs", "positive"])):
    """lhs = rhs when positive, lhs != rhs otherwise."""
    __slots__ = ()

    def iter_terms(self):
        yield self.lhs
        yield self.rhs

    def apply_subst(self, sigma):
        return Literal(substitute(sigma, self.lhs),
                       substitute(sigma, self.rhs), self.positive)

    def flipped(self):
        return Literal(self.rhs, self.lhs, self.positive)

    def negated(self):
        return Literal(self.lhs, self.rhs, not self.positive)

    def same_atom(self, other):
        return (self.lhs == other.lhs and self.rhs == other.rhs) or\
            (self.lhs == other.rhs and self.rhs == other.lhs)

    def __str__(self):
        return "{0} {1} {2}".format(
            format_term(self.lhs), "=" if self.positive else "!=",
            format_term(self.rhs))


class Clause(namedtuple("Clause", ["literals"])):
    """Multiset of literals, kept as a tuple. () is the empty clause."""
    __slots__ = ()

    def iter_terms(self):
        for literal in self.literals:
            yield literal.lhs
            yield literal.rhs

    def apply_subst(self, sigma):
        return Clause(tuple(literal.apply_subst(sigma)
                            for literal in self.literals))

    def is_empty(self):
        return not self.literals

    def without(self, *indexes):
        return [literal for index, literal in enumerate(self.literals)
                if index not in indexes]

    def __str__(self):
        if not self.literals:
            return "[]"
        return " | ".join(str(literal) for literal in self.literals)


class AnswerClause(namedtuple("AnswerClause", ["clause", "answer"])):
    """A clause constrained with the program term it would produce."""
    __slots__ = ()

    def iter_terms(self):
        for term in self.clause.iter_terms():
            yield term
        yield self.answer

    def apply_subst(self, sigma):
        return AnswerClause(self.clause.apply_subst(sigma),
                            substitute(sigma, self.answer))

    def __str__(self):
        return "<{0}, {1}>".format(self.clause, format_term(self.answer))


# Formula nodes. Atom wraps a bool-valued term and disappears with
# encode_predicates.

AND = "and"
OR = "or"
IMPLIES = "=>"
IFF = "<=>"
FORALL = "forall"
EXISTS = "exists"


Equals = namedtuple("Equals", ["lhs", "rhs"])
Atom = namedtuple("Atom", ["term"])
Constant = namedtuple("Constant", ["value"])
Not = namedtuple("Not", ["body"])
Connective = namedtuple("Connective", ["op", "parts"])
Quantifier = namedtuple("Quantifier", ["op", "variables", "body"])


Specification = namedtuple_with_defaults(
    "Specification",
    ["signature", "inputs", "output", "formula", "precedence", "text"],
    {"inputs": (), "precedence": ()})


Problem = namedtuple_with_defaults(
    "Problem",
    ["signature", "clauses", "input_skolems", "output", "formula", "spec"])


def true_term():
    return App(TRUE_SYMBOL, (), BOOL_SORT)


def false_term():
    return App(FALSE_SYMBOL, (), BOOL_SORT)


def map_formula(formula, leaf):
    """Rebuilds formula, replacing Equals/Atom/Literal leaves by leaf(node)."""
    if isinstance(formula, (Equals, Atom, Literal)):
        return leaf(formula)
    if isinstance(formula, Constant):
        return formula
    if isinstance(formula, Not):
        return Not(map_formula(formula.body, leaf))
    if isinstance(formula, Connective):
        return Connective(formula.op, tuple(
            map_formula(part, leaf) for part in formula.parts))
    if isinstance(formula, Quantifier):
        return Quantifier(formula.op, formula.variables,
                          map_formula(formula.body, leaf))
    raise SpecificationError("Unknown formula node: {0}".format(formula))


def substitute_formula(formula, sigma):
    """Substitutes free variables; bound variables shadow sigma."""
    if isinstance(formula, Quantifier):
        inner = dict((var, term) for var, term in sigma.items()
                     if var not in formula.variables)
        return Quantifier(formula.op, formula.variables,
                          substitute_formula(formula.body, inner))
    if isinstance(formula, Not):
        return Not(substitute_formula(formula.body, sigma))
    if isinstance(formula, Connective):
        return Connective(formula.op, tuple(
            substitute_formula(part, sigma) for part in formula.parts))
    if isinstance(formula, Equals):
        return Equals(substitute(sigma, formula.lhs),
                      substitute(sigma, formula.rhs))
    if isinstance(formula, Atom):
        return Atom(substitute(sigma, formula.term))
    if isinstance(formula, Literal):
        return formula.apply_subst(sigma)
    return formula


def free_variables(formula):
    found = OrderedDict()

    def visit(node, bound):
        if isinstance(node, Quantifier):
            visit(node.body, bound | set(node.variables))
        elif isinstance(node, Not):
            visit(node.body, bound)
        elif isinstance(node, Connective):
            for part in node.parts:
                visit(part, bound)
        elif isinstance(node, Equals):
            terms = (node.lhs, node.rhs)
        elif isinstance(node, Atom):
            terms = (node.term,)
        elif isinstance(node, Literal):
            terms = (node.lhs, node.rhs)
        else:
            return
        if isinstance(node, (Equals, Atom, Literal)):
            for term in terms:
                for var in variables(term):
                    if var not in bound:
                        found[var] = None

    visit(formula, frozenset())
    return list(found)


def encode_predicates(spec):
    """Rewrites every predicate atom P(t) as the equality P(t) = true."""
    def leaf(node):
        if isinstance(node, Atom):
            return Equals(node.term, true_term())
        return node
    return spec._replace(formula=map_formula(spec.formula, leaf))


def _nnf(formula, negate):
    if isinstance(formula, Atom):
        formula = Equals(formula.term, true_term())
    if isinstance(formula, Equals):
        return Literal(formula.lhs, formula.rhs, not negate)
    if isinstance(formula, Constant):
        return Constant(formula.value != negate)
    if isinstance(formula, Not):
        return _nnf(formula.body, not negate)
    if isinstance(formula, Connective):
        parts = formula.parts
        if formula.op == IMPLIES:
            parts = (Not(parts[0]), parts[1])
            op = OR
        elif formula.op == IFF:
            left, right = parts
            return _nnf(Connective(AND, (
                Connective(OR, (Not(left), right)),
                Connective(OR, (left, Not(right))))), negate)
        else:
            op = formula.op
        if negate:
            op = AND if op == OR else OR
        return Connective(op, tuple(_nnf(part, negate) for part in parts))
    if isinstance(formula, Quantifier):
        op = formula.op
        if negate:
            op = EXISTS if op == FORALL else FORALL
        return Quantifier(op, formula.variables,
                          _nnf(formula.body, negate))
    raise SpecificationError("Unknown formula node: {0}".format(formula))


def to_nnf(formula, negate=False):
    """Negation normal form with Literal leaves; => and <=> eliminated."""
    return _nnf(formula, negate)


def _skolemize(formula, universals, signature, factory):
    if isinstance(formula, (Literal, Constant)):
        return formula
    if isinstance(formula, Connective):
        return Connective(formula.op, tuple(
            _skolemize(part, universals, signature, factory)
            for part in formula.parts))
    # Quantifier
    renaming = {}
    if formula.op == FORALL:
        fresh = []
        for var in formula.variables:
            renaming[var] = factory.fresh(var.sort, base=var.name + "_")
            fresh.append(renaming[var])
        body = substitute_formula(formula.body, renaming)
        return _skolemize(body, universals + fresh, signature, factory)
    free = set(free_variables(formula))
    arguments = [var for var in universals if var in free]
    for var in formula.variables:
        name = signature.fresh_name(SKOLEM_PREFIX)
        signature.declare(name, [arg.sort for arg in arguments], var.sort,
                          False)
        renaming[var] = App(name, tuple(arguments), var.sort)
    body = substitute_formula(formula.body, renaming)
    return _skolemize(body, universals, signature, factory)


def _cnf(formula):
    if isinstance(formula, Literal):
        return [[formula]]
    if isinstance(formula, Constant):
        return [] if formula.value else [[]]
    if formula.op == AND:
        clauses = []
        for part in formula.parts:
            clauses.extend(_cnf(part))
        return clauses
    clauses = [[]]
    for part in formula.parts:
        part_clauses = _cnf(part)
        clauses = [left + right for left in clauses for right in part_clauses]
    return clauses


def clausify(formula):
    """CNF by distribution of a quantifier-free NNF formula."""
    return [Clause(tuple(literals)) for literals in _cnf(formula)]


def input_skolem_name(signature, var):
    name = INPUT_SKOLEM_PREFIX + var.name
    if name in signature:
        name = signature.fresh_name(name + "_")
    return name


def preprocess(spec, inject_bool_axiom=False):
    """Builds the initial set of answer clauses of a specification.

    :rtype: A Problem whose clauses all carry the output variable as answer.
    """
    spec = encode_predicates(spec)
    signature = spec.signature.copy()

    input_skolems = OrderedDict()
    for var in spec.inputs:
        name = input_skolem_name(signature, var)
        signature.declare(name, (), var.sort, True)
        input_skolems[var] = App(name, (), var.sort)

    body = substitute_formula(spec.formula, dict(input_skolems))
    negated = to_nnf(body, negate=True)
    matrix = _skolemize(negated, [spec.output], signature,
                        VariableFactory())

    clauses = [AnswerClause(clause, spec.output)
               for clause in clausify(matrix)]
    if inject_bool_axiom:
        clauses.append(AnswerClause(
            Clause((Literal(true_term(), false_term(), False),)),
            spec.output))

    return Problem(signature, clauses, input_skolems, spec.output,
                   spec.formula, spec)


def is_tautology(clause):
    """True iff clause contains t = t or a complementary pair."""
    literals = clause.literals
    for index, literal in enumerate(literals):
        if literal.positive and literal.lhs == literal.rhs:
            return True
        for other in literals[index + 1:]:
            if other.positive != literal.positive and\
                    literal.same_atom(other):
                return True
    return False


def merge_duplicate_literals(clause):
    merged = []
    for literal in clause.literals:
        if not any(literal.positive == kept.positive and
                   literal.same_atom(kept) for kept in merged):
            merged.append(literal)
    if len(merged) == len(clause.literals):
        return clause
    return Clause(tuple(merged))


def delete_resolved_literals(clause):
    """Drops the literals t != t, which no model satisfies."""
    kept = tuple(literal for literal in clause.literals
                 if literal.positive or literal.lhs != literal.rhs)
    if len(kept) == len(clause.literals):
        return clause
    return Clause(kept)


def rename_canonical(answer_clause, prefix="X"):
    """Renames variables X0, X1, ... by first occurrence (clause, then
    answer)."""
    renaming = dict(
        (var, Var("{0}{1}".format(prefix, index), var.sort))
        for index, var in enumerate(variables(answer_clause)))
    return answer_clause.apply_subst(renaming)


def normalize(answer_clause):
    """Form in which clauses are stored: merged duplicates, no t != t
    literals, simplified answer, canonical variables."""
    clause = delete_resolved_literals(
        merge_duplicate_literals(answer_clause.clause))
    return rename_canonical(AnswerClause(
        clause, simplify_program(answer_clause.answer)))


def rename_apart(answer_clause, suffix="'"):
    renaming = dict((var, Var(var.name + suffix, var.sort))
                    for var in variables(answer_clause))
    return answer_clause.apply_subst(renaming)


def _blind(term):
    if isinstance(term, Var):
        return "_"
    return format_term(term.__class__(
        term.symbol, tuple(Var("_", arg.sort) if isinstance(arg, Var)
                           else arg for arg in term.args), term.sort))


def _sorted_literals(clause):
    oriented = []
    for literal in clause.literals:
        if _blind(literal.rhs) < _blind(literal.lhs):
            literal = literal.flipped()
        oriented.append(literal)
    oriented.sort(key=lambda literal: (
        literal.positive, _blind(literal.lhs), _blind(literal.rhs)))
    return Clause(tuple(oriented))


def _canonical_key(expr):
    canonical = rename_canonical(expr)
    return str(canonical), tuple(var.sort for var in variables(canonical))


def variant_key(answer_clause):
    """Equal keys imply the answer clauses are variants (clause and answer
    together, literal order and equation sides ignored)."""
    return _canonical_key(AnswerClause(
        _sorted_literals(answer_clause.clause), answer_clause.answer))


def clause_key(clause):
    """Like variant_key, for a clause without its answer."""
    return _canonical_key(_sorted_literals(clause))


def format_formula(formula):
    """Readable infix rendering used in reports and logs."""
    if isinstance(formula, Equals):
        return "{0} = {1}".format(format_term(formula.lhs),
                                  format_term(formula.rhs))
    if isinstance(formula, Literal):
        return str(formula)
    if isinstance(formula, Atom):
        return format_term(formula.term)
    if isinstance(formula, Constant):
        return "true" if formula.value else "false"
    if isinstance(formula, Not):
        return "~({0})".format(format_formula(formula.body))
    if isinstance(formula, Connective):
        return "({0})".format(" {0} ".format(formula.op).join(
            format_formula(part) for part in formula.parts))
    return "{0} {1}. {2}".format(
        formula.op, " ".join(var.name for var in formula.variables),
        format_formula(formula.body))
