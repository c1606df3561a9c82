# -*- coding: utf-8 -*-
"""
Spec file parsing and printing, plus the infix syntax used for programs and
clauses (``ite(x = fri, vamp, paar)``, ``f(X0) = a | X0 != b``).

A spec file is a list of s-expression sections::

    ; comment
    (sorts day workshop)
    (computable (fri day) (sat day) (paar workshop) (vamp workshop))
    (uncomputable (ws workshop bool))
    (inputs (x day))
    (output (y workshop))
    (precedence ws vamp paar sat fri)
    (formula (=> (and ...) (ws y)))

A declaration lists the symbol name, its argument sorts and its result sort.
"""
from __future__ import unicode_literals, absolute_import

from collections import namedtuple
import re

from supra.models import BOOL_SORT, TRUE_SYMBOL, FALSE_SYMBOL, \
    SpecificationError
from supra.clauses import (
    Specification, Literal, Clause, Equals, Atom, Constant, Not, Connective,
    Quantifier, AND, OR, IMPLIES, IFF, FORALL, EXISTS)
from supra.terms import Signature, Var, App, Ite, format_term


SECTIONS = ("sorts", "computable", "uncomputable", "inputs", "output",
            "precedence", "formula")

CONNECTIVES = {"and": AND, "or": OR, "=>": IMPLIES, "<=>": IFF}

QUANTIFIERS = {"forall": FORALL, "exists": EXISTS}

RESERVED = set(CONNECTIVES) | set(QUANTIFIERS) | set(
    ["=", "distinct", "not", "ite"])


Token = namedtuple("Token", ["text", "line", "column"])


class Node(namedtuple("Node", ["items", "line", "column"])):
    """A parenthesized list of Tokens and Nodes."""
    __slots__ = ()


def _error(message, where):
    return SpecificationError(message, where.line, where.column)


def tokenize(text):
    tokens = []
    line = 1
    column = 1
    index = 0
    length = len(text)
    while index < length:
        char = text[index]
        if char == "\n":
            line += 1
            column = 1
            index += 1
        elif char.isspace():
            index += 1
            column += 1
        elif char == ";":
            while index < length and text[index] != "\n":
                index += 1
        elif char in "()":
            tokens.append(Token(char, line, column))
            index += 1
            column += 1
        else:
            start = index
            while index < length and not text[index].isspace() and\
                    text[index] not in "();":
                index += 1
            tokens.append(Token(text[start:index], line, column))
            column += index - start
    return tokens


def parse_sexprs(text):
    """Returns the top-level Nodes and Tokens of text."""
    stack = [Node([], 1, 1)]
    for token in tokenize(text):
        if token.text == "(":
            stack.append(Node([], token.line, token.column))
        elif token.text == ")":
            if len(stack) == 1:
                raise _error("Unbalanced ')'", token)
            node = stack.pop()
            stack[-1].items.append(node)
        else:
            stack[-1].items.append(token)
    if len(stack) > 1:
        raise _error("Unclosed '('", stack[-1])
    return stack[0].items


def _name(item, what):
    if not isinstance(item, Token):
        raise _error("Expected {0}".format(what), item)
    return item.text


class _SpecParser(object):

    def __init__(self, text):
        self.text = text
        self.signature = Signature()
        self.inputs = []
        self.output = None
        self.precedence = ()
        self.formula = None

    def parse(self):
        sections = {}
        for item in parse_sexprs(self.text):
            if not isinstance(item, Node) or not item.items:
                raise _error("Expected a section", item)
            name = _name(item.items[0], "a section name")
            if name not in SECTIONS:
                raise _error("Unknown section: {0}".format(name), item)
            if name in sections:
                raise _error("Duplicate section: {0}".format(name), item)
            sections[name] = item

        for name in ("output", "formula"):
            if name not in sections:
                raise SpecificationError(
                    "Missing section: {0}".format(name), 1, 1)

        if "sorts" in sections:
            for token in sections["sorts"].items[1:]:
                self._sort(token)
        for name in ("computable", "uncomputable"):
            if name in sections:
                for declaration in sections[name].items[1:]:
                    self._declare(declaration, name == "computable")
        if "inputs" in sections:
            self.inputs = [self._variable(item)
                           for item in sections["inputs"].items[1:]]
        output = sections["output"].items[1:]
        if len(output) != 1:
            raise _error("Exactly one output variable expected",
                         sections["output"])
        self.output = self._variable(output[0])
        names = [var.name for var in self.inputs] + [self.output.name]
        if len(set(names)) != len(names):
            raise _error("Duplicate input/output variable",
                         sections["output"])
        if "precedence" in sections:
            self.precedence = tuple(
                _name(item, "a symbol name")
                for item in sections["precedence"].items[1:])

        body = sections["formula"].items[1:]
        if len(body) != 1:
            raise _error("Exactly one formula expected", sections["formula"])
        env = dict((var.name, var) for var in self.inputs + [self.output])
        self.formula = self._formula(body[0], env)

        return Specification(
            self.signature, tuple(self.inputs), self.output, self.formula,
            self.precedence, self.text)

    def _sort(self, token):
        name = _name(token, "a sort name")
        if name == BOOL_SORT:
            raise _error("bool is predeclared", token)
        try:
            self.signature.add_sort(name)
        except SpecificationError as e:
            raise _error(e.message, token)

    def _known_sort(self, item):
        name = _name(item, "a sort name")
        if name not in self.signature.sorts:
            raise _error("Unknown sort: {0}".format(name), item)
        return name

    def _declare(self, node, computable):
        if not isinstance(node, Node) or len(node.items) < 2:
            raise _error("Expected (name arg-sort... result-sort)", node)
        name = _name(node.items[0], "a symbol name")
        if name in RESERVED:
            raise _error("Reserved name: {0}".format(name), node)
        sorts = [self._known_sort(item) for item in node.items[1:]]
        try:
            self.signature.declare(name, sorts[:-1], sorts[-1], computable)
        except SpecificationError as e:
            raise _error(e.message, node)

    def _variable(self, node):
        if not isinstance(node, Node) or len(node.items) != 2:
            raise _error("Expected (variable sort)", node)
        name = _name(node.items[0], "a variable name")
        if name in self.signature:
            raise _error(
                "Variable {0} clashes with a symbol".format(name), node)
        return Var(name, self._known_sort(node.items[1]))

    def _term(self, item, env):
        if isinstance(item, Token):
            if item.text in env:
                return env[item.text]
            if item.text not in self.signature:
                raise _error("Undeclared symbol: {0}".format(item.text),
                             item)
            args = []
        else:
            if not item.items:
                raise _error("Empty term", item)
            head = item.items[0]
            name = _name(head, "a function symbol")
            if name not in self.signature:
                raise _error("Undeclared symbol: {0}".format(name), head)
            args = [self._term(arg, env) for arg in item.items[1:]]
            item = head
        try:
            return self.signature.make(item.text, *args)
        except SpecificationError as e:
            raise _error(e.message, item)

    def _formula(self, item, env):
        if isinstance(item, Token):
            if item.text == TRUE_SYMBOL:
                return Constant(True)
            if item.text == FALSE_SYMBOL:
                return Constant(False)
            return self._atom(item, env)
        if not item.items:
            raise _error("Empty formula", item)
        head = item.items[0]
        op = head.text if isinstance(head, Token) else None
        args = item.items[1:]
        if op in ("=", "distinct"):
            if len(args) != 2:
                raise _error("{0} takes two terms".format(op), item)
            lhs, rhs = [self._term(arg, env) for arg in args]
            if lhs.sort != rhs.sort:
                raise _error("Sort mismatch: {0} has sort {1}, {2} has sort "
                             "{3}".format(format_term(lhs), lhs.sort,
                                          format_term(rhs), rhs.sort), item)
            if op == "=":
                return Equals(lhs, rhs)
            return Not(Equals(lhs, rhs))
        if op == "not":
            if len(args) != 1:
                raise _error("not takes one formula", item)
            return Not(self._formula(args[0], env))
        if op in CONNECTIVES:
            if op in ("=>", "<=>") and len(args) != 2:
                raise _error("{0} takes two formulas".format(op), item)
            if not args:
                return Constant(op == "and")
            parts = tuple(self._formula(arg, env) for arg in args)
            if len(parts) == 1:
                return parts[0]
            return Connective(CONNECTIVES[op], parts)
        if op in QUANTIFIERS:
            if len(args) != 2 or not isinstance(args[0], Node):
                raise _error("Expected ({0} ((var sort) ...) formula)"
                             .format(op), item)
            bound = [self._variable(node) for node in args[0].items]
            if not bound:
                raise _error("No bound variables", item)
            inner = dict(env)
            for var in bound:
                inner[var.name] = var
            return Quantifier(QUANTIFIERS[op], tuple(bound),
                              self._formula(args[1], inner))
        return self._atom(item, env)

    def _atom(self, item, env):
        term = self._term(item, env)
        if term.sort != BOOL_SORT:
            raise _error("Expected a formula, found the {0} term {1}".format(
                term.sort, format_term(term)), item)
        return Atom(term)


def parse_spec(text):
    """Parses and validates a spec file.

    :raises SpecificationError: with the line and column of the problem.
    """
    return _SpecParser(text).parse()


def read_spec(path):
    """Reads a UTF-8 spec file.

    :raises SpecificationError: also for bytes that are not valid UTF-8.
    """
    with open(path, "rb") as spec_file:
        data = spec_file.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise SpecificationError(
            "Invalid UTF-8 byte 0x{0:02x}".format(
                bytearray(data[e.start:e.start + 1])[0]), line, column)
    return parse_spec(text)


def _sexpr_term(term):
    if isinstance(term, Var) or not term.args:
        return format_term(term)
    return "({0} {1})".format(
        term.symbol, " ".join(_sexpr_term(arg) for arg in term.args))


def print_formula(formula):
    if isinstance(formula, Equals):
        return "(= {0} {1})".format(_sexpr_term(formula.lhs),
                                    _sexpr_term(formula.rhs))
    if isinstance(formula, Atom):
        return _sexpr_term(formula.term)
    if isinstance(formula, Constant):
        return TRUE_SYMBOL if formula.value else FALSE_SYMBOL
    if isinstance(formula, Not):
        return "(not {0})".format(print_formula(formula.body))
    if isinstance(formula, Connective):
        return "({0} {1})".format(formula.op, " ".join(
            print_formula(part) for part in formula.parts))
    return "({0} ({1}) {2})".format(
        formula.op,
        " ".join("({0} {1})".format(var.name, var.sort)
                 for var in formula.variables),
        print_formula(formula.body))


def print_spec(spec):
    """Renders a Specification in the spec file syntax."""
    signature = spec.signature
    lines = []
    sorts = [sort for sort in signature.sorts if sort != BOOL_SORT]
    if sorts:
        lines.append("(sorts {0})".format(" ".join(sorts)))
    for section, computable in (("computable", True),
                                ("uncomputable", False)):
        decls = [decl for decl in signature.symbols.values()
                 if decl.computable == computable and
                 decl.name not in (TRUE_SYMBOL, FALSE_SYMBOL)]
        if decls:
            lines.append("({0}".format(section))
            for decl in decls:
                lines.append("  ({0} {1})".format(decl.name, " ".join(
                    list(decl.arg_sorts) + [decl.result_sort])))
            lines.append(")")
    if spec.inputs:
        lines.append("(inputs {0})".format(" ".join(
            "({0} {1})".format(var.name, var.sort) for var in spec.inputs)))
    lines.append("(output ({0} {1}))".format(spec.output.name,
                                             spec.output.sort))
    if spec.precedence:
        lines.append("(precedence {0})".format(" ".join(spec.precedence)))
    lines.append("(formula {0})".format(print_formula(spec.formula)))
    return "\n".join(lines) + "\n"


# Infix syntax

INFIX_TOKEN = re.compile(r"\s*(!=|[A-Za-z_][A-Za-z0-9_']*|\[\]|[(),=|])")


def _infix_tokens(text):
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = INFIX_TOKEN.match(text, position)
        if not match:
            raise SpecificationError(
                "Unexpected character in {0!r}".format(text), 1,
                position + 1)
        tokens.append((match.group(1), match.start(1) + 1))
        position = match.end()
    return tokens


class _InfixParser(object):

    def __init__(self, text, signature, variables=None, variable_sort=None):
        self.text = text
        self.tokens = _infix_tokens(text)
        self.index = 0
        self.signature = signature
        self.variables = dict(variables or {})
        self.variable_sort = variable_sort

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def next(self):
        if self.index >= len(self.tokens):
            raise SpecificationError(
                "Unexpected end of {0!r}".format(self.text), 1,
                len(self.text) + 1)
        token = self.tokens[self.index]
        self.index += 1
        return token[0]

    def expect(self, text):
        column = self.tokens[self.index][1] if self.index < len(
            self.tokens) else len(self.text) + 1
        token = self.next()
        if token != text:
            raise SpecificationError(
                "Expected {0!r}, found {1!r}".format(text, token), 1, column)

    def done(self):
        if self.index != len(self.tokens):
            raise SpecificationError(
                "Trailing input in {0!r}".format(self.text), 1,
                self.tokens[self.index][1])

    def term(self, sort=None):
        name = self.next()
        if self.peek() == "(":
            self.next()
            decl = self.signature.decl(name)
            args = []
            for index, arg_sort in enumerate(decl.arg_sorts):
                if index:
                    self.expect(",")
                args.append(self.term(arg_sort))
            self.expect(")")
            return self.signature.make(name, *args)
        if name in self.variables:
            return self.variables[name]
        if name in self.signature:
            return self.signature.make(name)
        var_sort = sort or self.variable_sort
        if var_sort is None:
            raise SpecificationError(
                "Unknown identifier {0} of unknown sort".format(name))
        var = Var(name, var_sort)
        self.variables[name] = var
        return var

    def program(self, sort=None):
        if self.peek() == "ite" and "ite" not in self.signature:
            self.next()
            self.expect("(")
            cond_lhs = self.term()
            self.expect("=")
            cond_rhs = self.term(cond_lhs.sort)
            self.expect(",")
            then = self.program(sort)
            self.expect(",")
            otherwise = self.program(then.sort)
            self.expect(")")
            return Ite(cond_lhs, cond_rhs, then, otherwise)
        return self.term(sort)

    def literal(self):
        lhs = self.term()
        operator = self.next()
        if operator not in ("=", "!="):
            raise SpecificationError(
                "Expected = or != in {0!r}".format(self.text))
        rhs = self.term(lhs.sort)
        return Literal(lhs, rhs, operator == "=")

    def clause(self):
        if self.peek() == "[]":
            self.next()
            return Clause(())
        literals = [self.literal()]
        while self.peek() == "|":
            self.next()
            literals.append(self.literal())
        return Clause(tuple(literals))


def parse_term(text, signature, variables=None, variable_sort=None):
    """Parses ``f(x, a)``. Unknown identifiers become variables of the
    expected sort (or variable_sort)."""
    parser = _InfixParser(text, signature, variables, variable_sort)
    term = parser.term()
    parser.done()
    return term


def parse_program(text, signature, variables=None, variable_sort=None):
    """Parses a program term such as ``ite(x = fri, vamp, paar)``."""
    parser = _InfixParser(text, signature, variables, variable_sort)
    program = parser.program()
    parser.done()
    return program


def parse_clause(text, signature, variables=None, variable_sort=None):
    """Parses ``f(X0) = a | X0 != b`` or ``[]``."""
    parser = _InfixParser(text, signature, variables, variable_sort)
    clause = parser.clause()
    parser.done()
    return clause


def parse_literal(text, signature, variables=None, variable_sort=None):
    parser = _InfixParser(text, signature, variables, variable_sort)
    literal = parser.literal()
    parser.done()
    return literal
