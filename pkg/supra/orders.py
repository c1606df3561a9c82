# -*- coding: utf-8 -*-
"""
Simplification orders (lexicographic path order and transfinite Knuth-Bendix
order), their bag extensions to literals and clauses, precedence construction
and literal selection.
"""
from __future__ import unicode_literals, absolute_import

from collections import namedtuple

from supra.models import (
    TRUE_SYMBOL, FALSE_SYMBOL, SELECTION_MAXIMAL,
    SELECTION_NEGATIVE, ORDERING_LPO, ORDERING_TKBO, ConfigurationError,
    PreconditionError)
from supra.terms import Var, occurs


GREATER = "greater"
LESS = "less"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


def invert(result):
    if result == GREATER:
        return LESS
    if result == LESS:
        return GREATER
    return result


class Precedence(object):
    """Strict total order on symbol names, stored greatest first."""

    def __init__(self, names):
        self.names = list(names)
        if len(set(self.names)) != len(self.names):
            raise ConfigurationError(
                "Precedence contains duplicates: {0}".format(self.names))
        # Greater rank means greater symbol.
        self.rank = dict(
            (name, len(self.names) - index)
            for index, name in enumerate(self.names))

    def greater(self, left, right):
        return self.rank[left] > self.rank[right]

    def compare_symbols(self, left, right):
        if left == right:
            return EQUAL
        return GREATER if self.greater(left, right) else LESS

    def __contains__(self, name):
        return name in self.rank

    def __str__(self):
        return " > ".join(self.names)


def _check_hints(signature, hints):
    hints = list(hints or [])
    for name in hints:
        if name not in signature:
            raise ConfigurationError(
                "Unknown symbol in precedence: {0}".format(name))
    if len(set(hints)) != len(hints):
        raise ConfigurationError(
            "Precedence hints contain duplicates: {0}".format(hints))
    return hints


def _class_order(names, hints):
    hinted = [name for name in hints if name in names]
    bools = [name for name in (TRUE_SYMBOL, FALSE_SYMBOL)
             if name in names and name not in hinted]
    rest = sorted((name for name in names
                   if name not in hinted and name not in bools),
                  reverse=True)
    return bools + hinted + rest


def make_partitioned_precedence(signature, hints=None):
    """Every uncomputable symbol exceeds every computable symbol. Within a
    class the bool constants come first, then hints, then reverse name
    order."""
    hints = _check_hints(signature, hints)
    seen_computable = None
    for name in hints:
        if signature.is_computable_symbol(name):
            seen_computable = name
        elif seen_computable is not None:
            raise ConfigurationError(
                "Precedence hint puts computable {0} above uncomputable {1}"
                .format(seen_computable, name))
    uncomputable = _class_order(signature.uncomputable_symbols(), hints)
    computable = _class_order(signature.computable_symbols(), hints)
    return Precedence(uncomputable + computable)


def make_precedence(signature, hints=None):
    """Single class: hints first, then the remaining symbols (bool constants
    first, then reverse name order)."""
    hints = _check_hints(signature, hints)
    rest = _class_order(
        [name for name in signature.symbols if name not in hints], [])
    return Precedence(hints + rest)


class LPOrder(object):
    """Lexicographic path order."""

    name = ORDERING_LPO

    def __init__(self, precedence):
        self.precedence = precedence

    def greater(self, s, t):
        if isinstance(s, Var):
            return False
        if isinstance(t, Var):
            return occurs(t, s)
        for arg in s.args:
            if arg == t or self.greater(arg, t):
                return True
        if s.symbol == t.symbol:
            for s_arg, t_arg in zip(s.args, t.args):
                if s_arg != t_arg:
                    return self.greater(s_arg, t_arg) and all(
                        self.greater(s, arg) for arg in t.args)
            return False
        if self.precedence.greater(s.symbol, t.symbol):
            return all(self.greater(s, arg) for arg in t.args)
        return False

    def compare(self, s, t):
        if s == t:
            return EQUAL
        if self.greater(s, t):
            return GREATER
        if self.greater(t, s):
            return LESS
        return INCOMPARABLE


class OrdinalWeight(namedtuple("OrdinalWeight", ["omega_coeff", "finite"])):
    """omega_coeff * w + finite. Tuple order is the ordinal order."""
    __slots__ = ()

    def __add__(self, other):
        # natural (Hessenberg) sum
        return OrdinalWeight(self.omega_coeff + other.omega_coeff,
                             self.finite + other.finite)

    def scale(self, factor):
        return OrdinalWeight(self.omega_coeff * factor, self.finite * factor)

    def __str__(self):
        if not self.omega_coeff:
            return str(self.finite)
        omega = "w" if self.omega_coeff == 1 else "{0}w".format(
            self.omega_coeff)
        if not self.finite:
            return omega
        return "{0}+{1}".format(omega, self.finite)


ZERO_WEIGHT = OrdinalWeight(0, 0)


class LinearWeightExpr(namedtuple(
        "LinearWeightExpr", ["constant", "var_coeffs"])):
    """constant + sum of coefficient * variable, var_coeffs a dict."""
    __slots__ = ()

    @classmethod
    def of_term(cls, term, weights):
        constant = ZERO_WEIGHT
        coeffs = {}
        stack = [term]
        while stack:
            current = stack.pop()
            if isinstance(current, Var):
                coeffs[current] = coeffs.get(current, 0) + 1
            else:
                constant = constant + weights[current.symbol]
                stack.extend(current.args)
        return cls(constant, coeffs)

    def _excess(self, other, w0):
        """constant + sum (c_s - c_t) * w0 if every coefficient of other is
        covered, else None."""
        total = self.constant
        for var, coeff in other.var_coeffs.items():
            if self.var_coeffs.get(var, 0) < coeff:
                return None
        for var, coeff in self.var_coeffs.items():
            extra = coeff - other.var_coeffs.get(var, 0)
            total = total + w0.scale(extra)
        return total

    def greater(self, other, w0):
        """True when self > other under every grounding substitution."""
        total = self._excess(other, w0)
        return total is not None and total > other.constant

    def greater_equal(self, other, w0):
        total = self._excess(other, w0)
        return total is not None and total >= other.constant


def default_weights(signature):
    weights = {}
    for decl in signature.symbols.values():
        if decl.computable:
            weights[decl.name] = OrdinalWeight(0, 1)
        else:
            weights[decl.name] = OrdinalWeight(1, 1)
    return weights


def validate_weights(signature, precedence, weights):
    for name, weight in weights.items():
        if name not in signature:
            raise ConfigurationError(
                "Unknown symbol in weights: {0}".format(name))
        decl = signature.decl(name)
        if decl.computable and weight.omega_coeff != 0:
            raise ConfigurationError(
                "Computable symbol {0} must have a finite weight".format(name))
        if not decl.computable and weight.omega_coeff < 1:
            raise ConfigurationError(
                "Uncomputable symbol {0} must weigh at least w".format(name))
        if decl.arity == 1 and weight == ZERO_WEIGHT and\
                precedence.names[0] != name:
            raise ConfigurationError(
                "Unary symbol {0} of weight 0 must be greatest in the "
                "precedence".format(name))
    constant_weights = [weights[decl.name]
                        for decl in signature.symbols.values()
                        if decl.arity == 0]
    if not constant_weights or min(constant_weights) <= ZERO_WEIGHT:
        raise ConfigurationError("The smallest constant weight must be > 0")


class TKBOrder(object):
    """Transfinite Knuth-Bendix order."""

    name = ORDERING_TKBO

    def __init__(self, precedence, weights, w0=None):
        self.precedence = precedence
        self.weights = weights
        if w0 is None:
            w0 = min(weight for weight in weights.values()
                     if weight > ZERO_WEIGHT)
        # lower bound of the weight of any ground instance of a variable
        self.w0 = w0
        self._weight_cache = {}

    @classmethod
    def build(cls, signature, precedence, overrides=None):
        weights = default_weights(signature)
        for name, weight in (overrides or {}).items():
            weights[name] = OrdinalWeight(*weight)
        validate_weights(signature, precedence, weights)
        w0 = min(weights[decl.name] for decl in signature.symbols.values()
                 if decl.arity == 0)
        return cls(precedence, weights, w0)

    def weight(self, term):
        expr = self._weight_cache.get(term)
        if expr is None:
            expr = LinearWeightExpr.of_term(term, self.weights)
            self._weight_cache[term] = expr
        return expr

    def greater(self, s, t):
        if isinstance(s, Var) or s == t:
            return False
        s_weight = self.weight(s)
        t_weight = self.weight(t)
        if s_weight.greater(t_weight, self.w0):
            return True
        if not s_weight.greater_equal(t_weight, self.w0):
            return False
        if isinstance(t, Var):
            return occurs(t, s)
        if s.symbol != t.symbol:
            return self.precedence.greater(s.symbol, t.symbol)
        for s_arg, t_arg in zip(s.args, t.args):
            if s_arg != t_arg:
                return self.greater(s_arg, t_arg)
        return False

    def compare(self, s, t):
        if s == t:
            return EQUAL
        if self.greater(s, t):
            return GREATER
        if self.greater(t, s):
            return LESS
        return INCOMPARABLE


def lpo_compare(s, t, precedence):
    return LPOrder(precedence).compare(s, t)


def tkbo_compare(s, t, precedence, weights):
    """weights maps symbol names to OrdinalWeight."""
    order = TKBOrder(precedence, weights)
    return order.compare(s, t)


def build_order(ordering, signature, precedence, weights=None):
    if ordering == ORDERING_TKBO:
        return TKBOrder.build(signature, precedence, weights)
    return LPOrder(precedence)


def bag_compare(xs, ys, elem_compare):
    """Multiset extension of elem_compare."""
    xs = list(xs)
    ys = list(ys)
    remaining = []
    for x in xs:
        for index, y in enumerate(ys):
            if elem_compare(x, y) == EQUAL:
                del ys[index]
                break
        else:
            remaining.append(x)
    xs = remaining
    if not xs and not ys:
        return EQUAL

    def dominates(big, small):
        return all(any(elem_compare(b, s) == GREATER for b in big)
                   for s in small)

    if xs and dominates(xs, ys):
        return GREATER
    if ys and dominates(ys, xs):
        return LESS
    return INCOMPARABLE


def literal_bag(literal):
    if literal.positive:
        return [literal.lhs, literal.rhs]
    return [literal.lhs, literal.lhs, literal.rhs, literal.rhs]


def literal_compare(left, right, order):
    return bag_compare(literal_bag(left), literal_bag(right), order.compare)


def clause_compare(left, right, order):
    return bag_compare(
        left.literals, right.literals,
        lambda l1, l2: literal_compare(l1, l2, order))


def _maximal(indexes, literals, order):
    selected = []
    for index in indexes:
        if not any(literal_compare(literals[other], literals[index], order) ==
                   GREATER for other in indexes if other != index):
            selected.append(index)
    return selected


def selected_indexes(clause, order, selection=SELECTION_MAXIMAL):
    """Returns the indexes of the selected literals of a non-empty clause."""
    literals = clause.literals
    if not literals:
        raise PreconditionError("Cannot select literals of the empty clause")
    if selection == SELECTION_NEGATIVE:
        negatives = [index for index, literal in enumerate(literals)
                     if not literal.positive]
        if negatives:
            return _maximal(negatives, literals, order)
    return _maximal(range(len(literals)), literals, order)


def selected_literals(clause, order, selection=SELECTION_MAXIMAL):
    return [clause.literals[index]
            for index in selected_indexes(clause, order, selection)]
