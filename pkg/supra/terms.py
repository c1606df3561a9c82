# -*- coding: utf-8 -*-
"""
Multi-sorted signatures with the computable/uncomputable split, terms,
program terms, substitutions and unification.

Terms are immutable namedtuples: ``Var(name, sort)``, ``App(symbol, args,
sort)`` and, for program terms only, ``Ite(cond_lhs, cond_rhs, then,
otherwise)``. The three have different arities so they never compare equal to
each other.
"""
from __future__ import unicode_literals, absolute_import

from collections import namedtuple, OrderedDict

from supra.models import (
    BOOL_SORT, TRUE_SYMBOL, FALSE_SYMBOL, SpecificationError,
    InvalidSubstitutionError, UnificationFailure)


class Var(namedtuple("Var", ["name", "sort"])):
    __slots__ = ()

    def __str__(self):
        return self.name


class App(namedtuple("App", ["symbol", "args", "sort"])):
    __slots__ = ()

    def __str__(self):
        return format_term(self)


class Ite(namedtuple("Ite", ["cond_lhs", "cond_rhs", "then", "otherwise"])):
    """ite(cond_lhs = cond_rhs, then, otherwise)"""
    __slots__ = ()

    @property
    def sort(self):
        return self.then.sort

    def __str__(self):
        return format_term(self)


class SymbolDecl(namedtuple(
        "SymbolDecl", ["name", "arg_sorts", "result_sort", "computable"])):
    __slots__ = ()

    @property
    def arity(self):
        return len(self.arg_sorts)


class Signature(object):
    """Sorts and symbol declarations.

    The bool sort and its computable constants true and false are always
    declared.
    """

    def __init__(self):
        self.sorts = [BOOL_SORT]
        self.symbols = OrderedDict()
        self._uncomputable_sorts = None
        self.declare(TRUE_SYMBOL, (), BOOL_SORT, True)
        self.declare(FALSE_SYMBOL, (), BOOL_SORT, True)

    def add_sort(self, name):
        if name in self.sorts:
            raise SpecificationError("Duplicate sort: {0}".format(name))
        self.sorts.append(name)
        self._uncomputable_sorts = None

    def declare(self, name, arg_sorts, result_sort, computable):
        """Declares a symbol and returns its SymbolDecl."""
        if name in self.symbols:
            raise SpecificationError("Duplicate symbol: {0}".format(name))
        for sort in tuple(arg_sorts) + (result_sort,):
            if sort not in self.sorts:
                raise SpecificationError(
                    "Unknown sort {0} in declaration of {1}".format(
                        sort, name))
        decl = SymbolDecl(name, tuple(arg_sorts), result_sort,
                          bool(computable))
        self.symbols[name] = decl
        self._uncomputable_sorts = None
        return decl

    def fresh_name(self, prefix):
        """Returns prefix followed by the smallest counter not declared."""
        counter = 0
        while "{0}{1}".format(prefix, counter) in self.symbols:
            counter += 1
        return "{0}{1}".format(prefix, counter)

    def decl(self, name):
        try:
            return self.symbols[name]
        except KeyError:
            raise SpecificationError("Undeclared symbol: {0}".format(name))

    def __contains__(self, name):
        return name in self.symbols

    def is_computable_symbol(self, name):
        return self.decl(name).computable

    def make(self, name, *args):
        """Builds a well-sorted application of name to args."""
        decl = self.decl(name)
        if len(args) != decl.arity:
            raise SpecificationError(
                "{0} expects {1} argument(s), got {2}".format(
                    name, decl.arity, len(args)))
        for arg, sort in zip(args, decl.arg_sorts):
            if arg.sort != sort:
                raise SpecificationError(
                    "Sort mismatch in {0}: {1} has sort {2}, expected {3}"
                    .format(name, format_term(arg), arg.sort, sort))
        return App(name, tuple(args), decl.result_sort)

    def computable_symbols(self):
        return [decl.name for decl in self.symbols.values()
                if decl.computable]

    def uncomputable_symbols(self):
        return [decl.name for decl in self.symbols.values()
                if not decl.computable]

    def constants(self, sort, computable=None):
        return [decl.name for decl in self.symbols.values()
                if decl.arity == 0 and decl.result_sort == sort and
                (computable is None or decl.computable == computable)]

    def has_uncomputable_term(self, sort):
        """True iff some (possibly non-ground) uncomputable term has sort.

        Variables inhabit every sort, so a sort qualifies when an
        uncomputable symbol returns it or a symbol returning it takes an
        argument of a qualifying sort.
        """
        if self._uncomputable_sorts is None:
            found = set()
            changed = True
            while changed:
                changed = False
                for decl in self.symbols.values():
                    if decl.result_sort in found:
                        continue
                    if not decl.computable or any(
                            sort_ in found for sort_ in decl.arg_sorts):
                        found.add(decl.result_sort)
                        changed = True
            self._uncomputable_sorts = found
        return sort in self._uncomputable_sorts

    def copy(self):
        signature = Signature.__new__(Signature)
        signature.sorts = list(self.sorts)
        signature.symbols = OrderedDict(self.symbols)
        signature._uncomputable_sorts = None
        return signature

    def __str__(self):
        return "Signature(sorts={0}, symbols={1})".format(
            self.sorts, list(self.symbols))


class VariableFactory(object):
    """Monotone counter handing out fresh variables for one run."""

    def __init__(self, prefix="V"):
        self.prefix = prefix
        self.counter = 0

    def fresh(self, sort, base=None):
        name = "{0}{1}".format(base or self.prefix, self.counter)
        self.counter += 1
        return Var(name, sort)


def is_variable(term):
    return isinstance(term, Var)


def is_ground(term):
    return not variables(term)


def iter_subterms(term, position=()):
    """Yields (position, subterm) pairs in pre-order. Positions are tuples
    of argument indexes."""
    yield position, term
    if isinstance(term, App):
        for index, arg in enumerate(term.args):
            for item in iter_subterms(arg, position + (index,)):
                yield item


def subterm_at(term, position):
    for index in position:
        term = term.args[index]
    return term


def replace_at(term, position, replacement):
    if not position:
        return replacement
    index = position[0]
    args = list(term.args)
    args[index] = replace_at(args[index], position[1:], replacement)
    return App(term.symbol, tuple(args), term.sort)


def occurs(var, term):
    if isinstance(term, Var):
        return term == var
    if isinstance(term, App):
        return any(occurs(var, arg) for arg in term.args)
    return any(occurs(var, part) for part in term)


def _collect_variables(expr, found):
    if isinstance(expr, Var):
        if expr not in found:
            found[expr] = None
    elif isinstance(expr, App):
        for arg in expr.args:
            _collect_variables(arg, found)
    elif isinstance(expr, Ite):
        for part in expr:
            _collect_variables(part, found)
    else:
        for term in expr.iter_terms():
            _collect_variables(term, found)


def variables(expr):
    """Returns the variables of expr in order of first occurrence."""
    found = OrderedDict()
    _collect_variables(expr, found)
    return list(found)


def iter_symbols(expr):
    if isinstance(expr, App):
        yield expr.symbol
        for arg in expr.args:
            for symbol in iter_symbols(arg):
                yield symbol
    elif isinstance(expr, Ite):
        for part in expr:
            for symbol in iter_symbols(part):
                yield symbol
    elif not isinstance(expr, Var):
        for term in expr.iter_terms():
            for symbol in iter_symbols(term):
                yield symbol


def is_computable(expr, signature):
    """True iff no uncomputable symbol occurs in expr (ite conditions
    included)."""
    return all(signature.is_computable_symbol(symbol)
               for symbol in iter_symbols(expr))


def is_simple(program):
    """A program term is simple when it has no ite node."""
    if isinstance(program, Ite):
        return False
    if isinstance(program, App):
        return all(is_simple(arg) for arg in program.args)
    return True


def _assume(known, condition, value):
    known = dict(known)
    known[condition] = value
    return known


def simplify_program(program, known=None):
    """Collapses ite(t = t, q, r) to q and ite(c, q, q) to q. An ite nested
    in a branch of an ite on the same equation takes the branch that
    equation already decided, so ite(c, ite(c, p, q), r) is ite(c, p, r)."""
    if not isinstance(program, Ite):
        return program
    known = known or {}
    if program.cond_lhs == program.cond_rhs:
        return simplify_program(program.then, known)
    condition = frozenset((program.cond_lhs, program.cond_rhs))
    if condition in known:
        branch = program.then if known[condition] else program.otherwise
        return simplify_program(branch, known)
    then = simplify_program(program.then, _assume(known, condition, True))
    otherwise = simplify_program(program.otherwise,
                                 _assume(known, condition, False))
    if then == otherwise:
        return then
    return Ite(program.cond_lhs, program.cond_rhs, then, otherwise)


def term_size(expr):
    """Number of symbol and variable occurrences."""
    if isinstance(expr, Var):
        return 1
    if isinstance(expr, App):
        return 1 + sum(term_size(arg) for arg in expr.args)
    if isinstance(expr, Ite):
        return 1 + sum(term_size(part) for part in expr)
    return sum(term_size(term) for term in expr.iter_terms())


def substitute(sigma, expr):
    if isinstance(expr, Var):
        return sigma.get(expr, expr)
    if isinstance(expr, App):
        if not expr.args:
            return expr
        return App(expr.symbol,
                   tuple(substitute(sigma, arg) for arg in expr.args),
                   expr.sort)
    if isinstance(expr, Ite):
        return Ite(*[substitute(sigma, part) for part in expr])
    return expr.apply_subst(sigma)


def check_substitution(sigma):
    for var, term in sigma.items():
        if not isinstance(var, Var):
            raise InvalidSubstitutionError(
                "Substitution domain must contain variables: {0}".format(var))
        if var.sort != term.sort:
            raise InvalidSubstitutionError(
                "{0} has sort {1} but is mapped to {2} of sort {3}".format(
                    var, var.sort, format_term(term), term.sort))


def apply_subst(sigma, expr):
    """Applies sigma simultaneously to a term, program term, literal,
    clause or answer clause."""
    if not sigma:
        return expr
    check_substitution(sigma)
    return substitute(sigma, expr)


def _walk(term, bindings):
    while isinstance(term, Var) and term in bindings:
        term = bindings[term]
    return term


def _occurs_bound(var, term, bindings):
    term = _walk(term, bindings)
    if isinstance(term, Var):
        return term == var
    if isinstance(term, App):
        return any(_occurs_bound(var, arg, bindings) for arg in term.args)
    return any(_occurs_bound(var, part, bindings) for part in term)


def _resolve(term, bindings):
    term = _walk(term, bindings)
    if isinstance(term, App) and term.args:
        return App(term.symbol,
                   tuple(_resolve(arg, bindings) for arg in term.args),
                   term.sort)
    if isinstance(term, Ite):
        return Ite(*[_resolve(part, bindings) for part in term])
    return term


def unify(pairs):
    """Returns an idempotent most general unifier of all pairs.

    :raises UnificationFailure: with reason occurs-check or clash.
    """
    bindings = {}
    stack = list(reversed(list(pairs)))
    while stack:
        left, right = stack.pop()
        left = _walk(left, bindings)
        right = _walk(right, bindings)
        if left == right:
            continue
        if not isinstance(left, Var) and isinstance(right, Var):
            left, right = right, left
        if isinstance(left, Var):
            if left.sort != right.sort:
                raise UnificationFailure(
                    UnificationFailure.REASON_CLASH, left, right)
            if _occurs_bound(left, right, bindings):
                raise UnificationFailure(
                    UnificationFailure.REASON_OCCURS_CHECK, left, right)
            bindings[left] = right
        elif isinstance(left, App) and isinstance(right, App):
            if left.symbol != right.symbol or\
                    len(left.args) != len(right.args):
                raise UnificationFailure(
                    UnificationFailure.REASON_CLASH, left, right)
            stack.extend(reversed(list(zip(left.args, right.args))))
        elif isinstance(left, Ite) and isinstance(right, Ite):
            stack.extend(reversed(list(zip(left, right))))
        else:
            raise UnificationFailure(
                UnificationFailure.REASON_CLASH, left, right)
    return dict((var, _resolve(term, bindings))
                for var, term in bindings.items())


def mgu(pairs):
    """Returns the most general unifier of pairs or None."""
    try:
        return unify(pairs)
    except UnificationFailure:
        return None


def format_term(term):
    if isinstance(term, Var):
        return term.name
    if isinstance(term, App):
        if not term.args:
            return term.symbol
        return "{0}({1})".format(
            term.symbol, ", ".join(format_term(arg) for arg in term.args))
    return "ite({0} = {1}, {2}, {3})".format(
        *[format_term(part) for part in term])


def format_substitution(sigma):
    return dict((var.name, format_term(term))
                for var, term in sorted(sigma.items()))
