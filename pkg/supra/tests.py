# -*- coding: utf-8 -*-
"""
Unit and integration tests for supra
"""
from __future__ import unicode_literals, absolute_import

import codecs
from collections import Counter
import itertools
import json
import logging
import os
import random
import sys
from tempfile import mkstemp
import unittest

from supra import api
from supra.calculus import InferenceSite, SynthesisCalculus
from supra.cli import execute_from_command_line, get_logger
from supra.clauses import (
    AnswerClause, Clause, Literal, preprocess, normalize, is_tautology,
    merge_duplicate_literals, rename_apart, variant_key, clause_key,
    encode_predicates)
from supra.models import (
    Config, SaturationConfig, Limits, ConfigurationError, SpecificationError,
    InvalidSubstitutionError, UnificationFailure, EnumerationLimitError,
    ExtractionError, parse_weight, STATUS_SUCCESS, STATUS_SATURATED,
    STATUS_LIMIT, STATUS_ERROR, SELECTION_NEGATIVE, ORDERING_TKBO, RULE_ABS,
    RULE_INPUT, RULE_SUPC, RULE_SUPU, RULE_EQRES, RULE_EQFAC, EXIT_SUCCESS,
    EXIT_SATURATED, EXIT_LIMIT, EXIT_INPUT_ERROR, EXIT_REPLAY_MISMATCH)
from supra.oracle import (
    Interpretation, count_interpretations, enumerate_interpretations,
    UndefinedEntry, random_interpretation, eval_term, eval_program,
    eval_formula, holds_clause, holds_clauses, holds_formula,
    holds_answer_clause, check_solution)
from supra.orders import (
    GREATER, LESS, EQUAL, INCOMPARABLE, OrdinalWeight, Precedence, LPOrder,
    TKBOrder, lpo_compare, tkbo_compare, bag_compare, literal_compare,
    clause_compare, make_partitioned_precedence, selected_indexes,
    selected_literals)
from supra.saturation import (
    Synthesizer, build_calculus, build_precedence, clause_priority,
    extract_program, simplify_program, saturate)
from supra.specfile import (
    read_spec, parse_spec, print_spec, print_formula, parse_program,
    parse_clause, parse_term)
from supra.terms import (
    Var, Ite, Signature, apply_subst, mgu, unify, is_computable,
    format_term, substitute, iter_subterms, variables)
from supra.trace import TraceWriter, replay, read_trace


TEST_FILES_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)),
                              'testfiles')

# Quiet all logging
logging.basicConfig(level=logging.CRITICAL)


# UTILITY FUNCTIONS ###

def spec_path(name):
    return os.path.join(TEST_FILES_DIR, name + ".spec")


def load_problem(name, **options):
    """Returns (problem, calculus) for a test spec; options go to
    SaturationConfig. The spec's precedence section is used unless
    precedence_hints is given."""
    spec = read_spec(spec_path(name))
    problem = preprocess(spec)
    options.setdefault("precedence_hints", list(spec.precedence))
    _, calculus = build_calculus(problem, SaturationConfig(**options))
    return problem, calculus


def answer_clause(text, answer, signature, variables=None):
    """Parses an answer clause, variables mapping names to Vars."""
    variables = variables or {}
    return AnswerClause(
        parse_clause(text, signature, variables),
        parse_program(answer, signature, variables))


def u_variables(names):
    return dict((name, Var(name, "u")) for name in names.split())


def random_ground_term(signature, sort, depth, rng, computable=None):
    decls = [decl for decl in signature.symbols.values()
             if decl.result_sort == sort and
             (computable is None or decl.computable == computable)]
    if depth <= 0:
        decls = [decl for decl in decls if decl.arity == 0] or decls
    decl = rng.choice(decls)
    args = [random_ground_term(signature, arg_sort, depth - 1, rng,
                               computable)
            for arg_sort in decl.arg_sorts]
    return signature.make(decl.name, *args)


def random_term(signature, names, depth, rng):
    """Random term of sort u mixing the variables names."""
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return Var(rng.choice(names), "u")
    decls = [decl for decl in signature.symbols.values()
             if decl.result_sort == "u"]
    if depth <= 0:
        decls = [decl for decl in decls if decl.arity == 0]
    decl = rng.choice(decls)
    return signature.make(decl.name, *[
        random_term(signature, names, depth - 1, rng)
        for _ in decl.arg_sorts])


def mixed_signature():
    """Computable a and binary k, uncomputable c and unary f, all on u."""
    sig = Signature()
    sig.add_sort("u")
    sig.declare("a", (), "u", True)
    sig.declare("k", ("u", "u"), "u", True)
    sig.declare("c", (), "u", False)
    sig.declare("f", ("u",), "u", False)
    return sig


def all_terms(signature, leaves, depth):
    """Every term of sort u with at most depth nested applications of
    non-constant symbols over the leaves."""
    terms = list(leaves)
    for _ in range(depth):
        deeper = list(leaves)
        for decl in signature.symbols.values():
            if decl.result_sort != "u" or decl.arity == 0:
                continue
            for args in itertools.product(terms, repeat=decl.arity):
                deeper.append(signature.make(decl.name, *args))
        terms = deeper
    return terms


def multiset_greater(big, small, compare):
    """Multiset extension by search: small is big with a non-empty part
    replaced by elements each below some replaced one."""
    for size in range(1, len(big) + 1):
        for removed in itertools.combinations(range(len(big)), size):
            kept = Counter(x for i, x in enumerate(big) if i not in removed)
            if kept - Counter(small):
                continue
            rest = list((Counter(small) - kept).elements())
            dropped = [big[i] for i in removed]
            if all(any(compare(x, y) == GREATER for x in dropped)
                   for y in rest):
                return True
    return False


def random_premise(pool, answers, rng):
    literals = []
    for _ in range(rng.randint(1, 3)):
        literals.append(Literal(rng.choice(pool), rng.choice(pool),
                                rng.random() < 0.5))
    answer = rng.choice(answers)
    if rng.random() < 0.2:
        answer = Ite(rng.choice(answers), rng.choice(answers), answer,
                     rng.choice(answers))
    return AnswerClause(Clause(tuple(literals)), answer)


def synthesize(name, **options):
    problem, _ = load_problem(name)
    spec = problem.spec
    options.setdefault("precedence_hints", list(spec.precedence))
    synthesizer = Synthesizer(problem, SaturationConfig(**options))
    return synthesizer, synthesizer.synthesize()


# UNIT AND INTEGRATION TESTS ###


class ConfigTest(unittest.TestCase):

    def setUp(self):
        self.argv = sys.argv

    def tearDown(self):
        sys.argv = self.argv

    def test_cli_config(self):
        sys.argv = ['supra', '-O', 'tkbo', '-p', 'ws,vamp', '--no-abs',
                    '--weights', 'ws=w+2,fri=3', spec_path("workshop")]
        config = Config()
        config.parse_cli_config()

        saturation_config = config.saturation_config
        self.assertEqual(ORDERING_TKBO, saturation_config.ordering)
        self.assertEqual(["ws", "vamp"], saturation_config.precedence_hints)
        self.assertFalse(saturation_config.abstraction)
        self.assertTrue(saturation_config.partitioned)
        self.assertEqual({"ws": (1, 2), "fri": (0, 3)},
                         saturation_config.weights)

    def test_replay_command(self):
        config = Config()
        config.parse_api_config(["replay", "run.trace"])
        self.assertEqual("replay", config.command)
        self.assertEqual("run.trace", config.trace_path)

    def test_bad_config(self):
        config = Config()
        self.assertRaises(ConfigurationError, config.parse_api_config, [])
        self.assertRaises(
            ConfigurationError, config.parse_api_config,
            [spec_path("workshop")], {"max-iterations": 0})
        self.assertRaises(
            ConfigurationError, config.parse_api_config,
            [spec_path("workshop")], {"ordering": "rpo"})

    def test_parse_weight(self):
        self.assertEqual((0, 3), parse_weight("3"))
        self.assertEqual((1, 0), parse_weight("w"))
        self.assertEqual((1, 2), parse_weight("w+2"))
        self.assertEqual((2, 1), parse_weight("2w+1"))
        self.assertRaises(ConfigurationError, parse_weight, "x+1")
        self.assertRaises(ConfigurationError, parse_weight, "")


class TermsTest(unittest.TestCase):

    def setUp(self):
        self.problem, _ = load_problem("abs")
        self.signature = self.problem.signature
        self.x = Var("x", "u")
        self.a = self.signature.make("a")

    def test_apply_subst(self):
        sig = Signature()
        sig.add_sort("u")
        sig.declare("a", (), "u", True)
        sig.declare("f", ("u", "u"), "u", True)
        x = Var("x", "u")
        a = sig.make("a")
        term = sig.make("f", x, x)

        self.assertEqual("f(a, a)", format_term(apply_subst({x: a}, term)))
        self.assertEqual(term, apply_subst({}, term))
        self.assertRaises(InvalidSubstitutionError, apply_subst,
                          {Var("z", "bool"): a}, term)

    def test_apply_subst_program(self):
        problem, _ = load_problem("workshop")
        x = Var("x", "day")
        program = parse_program("ite(x = fri, vamp, paar)",
                                problem.signature, {"x": x})
        fri = problem.signature.make("fri")
        self.assertEqual("ite(fri = fri, vamp, paar)",
                         format_term(apply_subst({x: fri}, program)))

    def test_mgu(self):
        f_x = self.signature.make("f", self.x)
        f_a = self.signature.make("f", self.a)
        self.assertEqual({self.x: self.a}, mgu([(f_x, f_a)]))
        self.assertEqual(None, mgu([(self.x, f_x)]))
        self.assertEqual(None, mgu([(f_a, self.signature.make("g",
                                                              self.a))]))

        try:
            unify([(self.x, f_x)])
            self.fail("occurs check expected")
        except UnificationFailure as e:
            self.assertEqual(UnificationFailure.REASON_OCCURS_CHECK, e.reason)

        try:
            unify([(f_a, self.signature.make("g", self.a))])
            self.fail("clash expected")
        except UnificationFailure as e:
            self.assertEqual(UnificationFailure.REASON_CLASH, e.reason)

    def test_mgu_workshop(self):
        problem, _ = load_problem("workshop")
        y = Var("y", "workshop")
        ws_y = problem.signature.make("ws", y)
        ws_vamp = parse_term("ws(vamp)", problem.signature)
        self.assertEqual({y: problem.signature.make("vamp")},
                         mgu([(ws_y, ws_vamp)]))

    def test_random_unifiers(self):
        rng = random.Random(7)
        names = ["X", "Y", "Z"]
        unified = 0
        for _ in range(500):
            s = random_term(self.signature, names, 3, rng)
            t = random_term(self.signature, names, 3, rng)
            sigma = mgu([(s, t)])
            if sigma is None:
                continue
            unified += 1
            self.assertEqual(substitute(sigma, s), substitute(sigma, t))
            for var, term in sigma.items():
                self.assertEqual(term, substitute(sigma, term))
        self.assertTrue(unified > 0)

    def test_mgu_is_most_general(self):
        rng = random.Random(13)
        names = ["X", "Y"]
        x, y = Var("X", "u"), Var("Y", "u")
        ground = [parse_term(text, self.signature)
                  for text in ("a", "b", "f(a)", "g(b)", "f(f(a))")]
        factored = 0
        for _ in range(300):
            s = random_term(self.signature, names, 2, rng)
            t = random_term(self.signature, names, 2, rng)
            sigma = mgu([(s, t)])
            for values in itertools.product(ground, repeat=2):
                theta = dict(zip((x, y), values))
                if substitute(theta, s) != substitute(theta, t):
                    continue
                self.assertNotEqual(None, sigma, "{0} = {1}".format(s, t))
                factored += 1
                for var in (x, y):
                    self.assertEqual(
                        substitute(theta, var),
                        substitute(theta, substitute(sigma, var)))
        self.assertTrue(factored > 0)

    def test_is_computable(self):
        problem, _ = load_problem("workshop")
        signature = problem.signature
        x = Var("x", "day")
        self.assertFalse(is_computable(parse_term("ws(vamp)", signature),
                                       signature))
        self.assertTrue(is_computable(parse_program(
            "ite(x = fri, vamp, paar)", signature, {"x": x}), signature))
        self.assertTrue(is_computable(x, signature))
        self.assertFalse(is_computable(
            Ite(parse_term("ws(vamp)", signature), signature.make("true"),
                signature.make("vamp"), signature.make("paar")), signature))

    def test_has_uncomputable_term(self):
        problem, _ = load_problem("workshop")
        signature = problem.signature
        self.assertTrue(signature.has_uncomputable_term("bool"))
        self.assertFalse(signature.has_uncomputable_term("day"))
        self.assertFalse(signature.has_uncomputable_term("workshop"))
        self.assertTrue(self.signature.has_uncomputable_term("u"))


class OrdersTest(unittest.TestCase):

    def setUp(self):
        self.problem, _ = load_problem("workshop")
        self.signature = self.problem.signature
        self.example_precedence = build_precedence(
            self.problem, ["sat", "fri", "paar", "vamp", "ws", "x"],
            partitioned=False)

    def term(self, text):
        return parse_term(text, self.signature)

    def test_lpo(self):
        self.assertEqual(GREATER, lpo_compare(
            self.term("sat"), self.term("fri"), self.example_precedence))

        sig = Signature()
        sig.add_sort("u")
        sig.declare("f", ("u",), "u", True)
        x = Var("x", "u")
        precedence = Precedence(["f", "true", "false"])
        self.assertEqual(GREATER, lpo_compare(sig.make("f", x), x,
                                              precedence))
        self.assertEqual(INCOMPARABLE, lpo_compare(x, Var("z", "u"),
                                                   precedence))

        partitioned = build_precedence(self.problem, ["ws"])
        self.assertEqual(LESS, lpo_compare(
            self.term("paar"), self.term("ws(paar)"), partitioned))

    def test_tkbo(self):
        sig = Signature()
        sig.add_sort("u")
        sig.declare("a", (), "u", True)
        sig.declare("f", ("u", "u"), "u", True)
        x = Var("x", "u")
        precedence = Precedence(["f", "a", "true", "false"])
        weights = {"f": OrdinalWeight(0, 2), "a": OrdinalWeight(0, 1),
                   "true": OrdinalWeight(0, 1),
                   "false": OrdinalWeight(0, 1)}
        f_xx = sig.make("f", x, x)
        self.assertEqual(GREATER, tkbo_compare(f_xx, x, precedence, weights))
        self.assertEqual(EQUAL, tkbo_compare(f_xx, f_xx, precedence,
                                             weights))
        self.assertEqual(LESS, tkbo_compare(x, f_xx, precedence, weights))

    def test_tkbo_weight_validation(self):
        precedence = build_precedence(self.problem)
        self.assertRaises(ConfigurationError, TKBOrder.build,
                          self.signature, precedence, {"ws": (0, 1)})
        self.assertRaises(ConfigurationError, TKBOrder.build,
                          self.signature, precedence, {"fri": (1, 0)})
        self.assertRaises(ConfigurationError, TKBOrder.build,
                          self.signature, precedence, {"nope": (0, 1)})

    def test_ground_totality_and_partition(self):
        problem, _ = load_problem("abs")
        signature = problem.signature
        precedence = build_precedence(problem)
        orders = [LPOrder(precedence), TKBOrder.build(signature, precedence)]
        rng = random.Random(11)
        for _ in range(2000):
            s = random_ground_term(signature, "u", 3, rng)
            t = random_ground_term(signature, "u", 3, rng)
            computable = random_ground_term(signature, "u", 2, rng, True)
            for order in orders:
                self.assertNotEqual(INCOMPARABLE, order.compare(s, t))
                if not is_computable(s, signature):
                    self.assertEqual(LESS, order.compare(computable, s))

    def test_order_properties(self):
        signature = mixed_signature()
        precedence = make_partitioned_precedence(signature)
        names = ["X", "Y"]
        x, y = Var("X", "u"), Var("Y", "u")
        rng = random.Random(5)
        for order in (LPOrder(precedence),
                      TKBOrder.build(signature, precedence)):
            greater = 0
            for _ in range(10000):
                s = random_term(signature, names, 3, rng)
                t = random_term(signature, names, 3, rng)
                self.assertFalse(order.greater(s, s), str(s))
                for position, sub in iter_subterms(s):
                    if position:
                        self.assertTrue(order.greater(s, sub),
                                        "{0} > {1}".format(s, sub))
                if not order.greater(s, t):
                    continue
                greater += 1
                self.assertFalse(order.greater(t, s))

                u = random_term(signature, names, 3, rng)
                if order.greater(t, u):
                    self.assertTrue(order.greater(s, u))

                sigma = {x: random_term(signature, names, 2, rng),
                         y: random_term(signature, names, 2, rng)}
                self.assertTrue(order.greater(substitute(sigma, s),
                                              substitute(sigma, t)))

                r = random_term(signature, names, 2, rng)
                for context in (lambda hole: signature.make("f", hole),
                                lambda hole: signature.make("k", hole, r),
                                lambda hole: signature.make("k", r, hole)):
                    self.assertTrue(order.greater(context(s), context(t)))
            self.assertTrue(greater > 500)

    def test_partition_exhaustive(self):
        signature = mixed_signature()
        precedence = make_partitioned_precedence(signature)
        terms = all_terms(signature, [signature.make("a"),
                                      signature.make("c")], 2)
        self.assertEqual(74, len(terms))
        for order in (LPOrder(precedence),
                      TKBOrder.build(signature, precedence)):
            for s in terms:
                for t in terms:
                    relation = order.compare(s, t)
                    if s == t:
                        self.assertEqual(EQUAL, relation)
                    else:
                        self.assertIn(relation, (GREATER, LESS))
                    if is_computable(s, signature) and\
                            not is_computable(t, signature):
                        self.assertEqual(LESS, relation,
                                         "{0} < {1}".format(s, t))

    def test_bag_compare(self):
        def compare(x, y):
            if x == y:
                return EQUAL
            return GREATER if x > y else LESS

        self.assertEqual(GREATER, bag_compare([1, 1, 2, 2], [1, 2],
                                              compare))
        self.assertEqual(LESS, bag_compare([1, 2], [3], compare))
        self.assertEqual(EQUAL, bag_compare([2, 1], [1, 2], compare))
        self.assertEqual(GREATER, bag_compare([3], [2, 2, 2, 1], compare))

    def test_bag_compare_by_search(self):
        def componentwise(x, y):
            if x == y:
                return EQUAL
            if x[0] >= y[0] and x[1] >= y[1]:
                return GREATER
            if x[0] <= y[0] and x[1] <= y[1]:
                return LESS
            return INCOMPARABLE

        rng = random.Random(23)
        elements = list(itertools.product(range(3), repeat=2))
        for _ in range(2000):
            m = [rng.choice(elements) for _ in range(rng.randint(0, 4))]
            n = [rng.choice(elements) for _ in range(rng.randint(0, 4))]
            if sorted(m) == sorted(n):
                expected = EQUAL
            elif multiset_greater(m, n, componentwise):
                expected = GREATER
            elif multiset_greater(n, m, componentwise):
                expected = LESS
            else:
                expected = INCOMPARABLE
            self.assertEqual(expected, bag_compare(m, n, componentwise),
                             "{0} vs {1}".format(m, n))

    def test_literal_and_clause_compare(self):
        order = LPOrder(self.example_precedence)
        a_eq = Literal(self.term("sat"), self.term("fri"), True)
        a_neq = a_eq.negated()
        other = Literal(self.term("paar"), self.term("vamp"), True)
        self.assertEqual(GREATER, literal_compare(a_neq, a_eq, order))
        self.assertEqual(GREATER, literal_compare(a_eq, other, order))
        self.assertEqual(EQUAL, literal_compare(a_eq, a_eq, order))

        clause = Clause((other,))
        self.assertEqual(GREATER, clause_compare(
            Clause((other, a_eq)), clause, order))
        self.assertEqual(LESS, clause_compare(Clause(()), clause, order))

        partitioned = LPOrder(build_precedence(self.problem))
        uncomputable = Clause((Literal(self.term("ws(paar)"),
                                       self.term("true"), True),))
        computable = Clause((Literal(self.term("sat"), self.term("fri"),
                                     False), other))
        self.assertEqual(GREATER, clause_compare(uncomputable, computable,
                                                 partitioned))

    def test_partitioned_precedence(self):
        precedence = make_partitioned_precedence(
            self.signature, ["vamp", "paar", "sat", "fri"])
        self.assertEqual("ws", precedence.names[0])
        ranks = [precedence.rank[name]
                 for name in ("ws", "vamp", "paar", "sat", "fri")]
        self.assertEqual(sorted(ranks, reverse=True), ranks)
        for computable in self.signature.computable_symbols():
            self.assertTrue(precedence.greater("ws", computable))

        self.assertRaises(ConfigurationError, make_partitioned_precedence,
                          self.signature, ["fri", "ws"])
        self.assertRaises(ConfigurationError, make_partitioned_precedence,
                          self.signature, ["unknown"])

        sig = Signature()
        sig.add_sort("u")
        for name in ("b", "c", "a"):
            sig.declare(name, (), "u", True)
        precedence = make_partitioned_precedence(sig)
        self.assertEqual(["true", "false", "c", "b", "a"], precedence.names)

    def test_selection(self):
        order = LPOrder(self.example_precedence)
        clause = parse_clause("in_x = fri | in_x = sat", self.signature)
        self.assertEqual([1], selected_indexes(clause, order))

        single = parse_clause("in_x != sat", self.signature)
        self.assertEqual([0], selected_indexes(single, order))

        partitioned = LPOrder(build_precedence(
            self.problem, ["ws", "vamp", "paar", "sat", "fri"]))
        clause = parse_clause("in_x != sat | ws(paar) = true",
                              self.signature)
        self.assertEqual([1], selected_indexes(clause, partitioned))
        self.assertEqual([0], selected_indexes(clause, partitioned,
                                               SELECTION_NEGATIVE))
        self.assertEqual([clause.literals[1]],
                         selected_literals(clause, partitioned))


class PreprocessTest(unittest.TestCase):

    def test_workshop(self):
        problem, _ = load_problem("workshop")
        self.assertEqual(
            ["<in_x = fri | in_x = sat, y>",
             "<in_x != fri | ws(vamp) = true, y>",
             "<in_x != sat | ws(paar) = true, y>",
             "<ws(y) != true, y>"],
            [str(clause) for clause in problem.clauses])
        self.assertTrue(problem.signature.is_computable_symbol("in_x"))

    def test_encode_predicates(self):
        spec = read_spec(spec_path("workshop"))
        self.assertNotIn("(= (ws y) true)", print_formula(spec.formula))

        encoded = print_formula(encode_predicates(spec).formula)
        self.assertIn("(= (ws y) true)", encoded)
        self.assertIn("(= (ws vamp) true)", encoded)
        self.assertIn("(= x fri)", encoded)

    def test_abs(self):
        problem, _ = load_problem("abs")
        self.assertEqual(
            ["<f(d) = e, y>",
             "<d = c | g(y) != g(a), y>",
             "<f(c) != e | h(y) != h(b), y>"],
            [str(clause) for clause in problem.clauses])

    def test_identity(self):
        problem, _ = load_problem("identity")
        self.assertEqual(["<y != in_x, y>"],
                         [str(clause) for clause in problem.clauses])

    def test_skolem(self):
        problem, _ = load_problem("skolem")
        self.assertIn("sk0", problem.signature)
        self.assertFalse(problem.signature.is_computable_symbol("sk0"))
        self.assertIn("<p(sk0) = true, y>",
                      [str(clause) for clause in problem.clauses])

    def test_bool_axiom(self):
        spec = read_spec(spec_path("identity"))
        problem = preprocess(spec, inject_bool_axiom=True)
        self.assertEqual("<true != false, y>", str(problem.clauses[-1]))

    def test_initial_clauses_hold(self):
        problem, _ = load_problem("workshop")
        for interpretation in enumerate_interpretations(
                problem.signature, 2):
            for clause in problem.clauses:
                self.assertTrue(holds_answer_clause(
                    clause, problem, interpretation))

    def test_clauses_are_equisatisfiable(self):
        # the negated formula holds iff some Skolem expansion models the
        # clauses
        specs = [read_spec(spec_path(name)) for name in (
            "workshop", "abs", "universal", "skolem", "case_split",
            "two_inputs")]
        specs.extend(parse_spec(text) for text in (
            "(sorts u)\n(uncomputable (p u bool))\n(output (y u))\n"
            "(formula (p y))",
            "(sorts u)\n(uncomputable (f u u))\n(inputs (x u))\n"
            "(output (y u))\n(formula (forall ((z u)) (= (f z) y)))",
            "(sorts u)\n(computable (a u))\n(inputs (x u))\n"
            "(output (y u))\n(formula (and (distinct y a) (distinct y x)))",
            "(sorts u)\n(uncomputable (r u u bool))\n(inputs (x u))\n"
            "(output (y u))\n"
            "(formula (=> (exists ((z u)) (r x z)) (r x y)))"))
        outcomes = set()
        for spec in specs:
            problem = preprocess(spec)
            base = set(spec.signature.symbols) | set(
                skolem.symbol for skolem in problem.input_skolems.values())
            clauses = [clause.clause for clause in problem.clauses]
            expansions = {}
            negated = {}
            for interpretation in enumerate_interpretations(
                    problem.signature, 2):
                key = (tuple(sorted(interpretation.carriers.items())),
                       tuple(sorted(
                           (symbol, tuple(sorted(table.items())))
                           for symbol, table in
                           interpretation.tables.items()
                           if symbol in base)))
                expansions[key] = expansions.get(key, False) or\
                    holds_clauses(clauses, interpretation)
                if key in negated:
                    continue
                env = dict((var, eval_term(skolem, interpretation, {}))
                           for var, skolem in problem.input_skolems.items())
                satisfied = False
                for value in interpretation.carrier(spec.output.sort):
                    env[spec.output] = value
                    if eval_formula(problem.formula, interpretation, env):
                        satisfied = True
                        break
                negated[key] = not satisfied
            self.assertEqual(negated, expansions, print_formula(
                spec.formula))
            outcomes.update(negated.values())
        self.assertEqual(set([True, False]), outcomes)

    def test_normalization(self):
        problem, _ = load_problem("abs")
        signature = problem.signature
        variables = u_variables("Y Z")
        self.assertTrue(is_tautology(parse_clause("a = a", signature)))
        self.assertTrue(is_tautology(parse_clause(
            "d = c | c != d", signature)))
        self.assertFalse(is_tautology(parse_clause(
            "g(Y) != g(a)", signature, variables)))

        merged = merge_duplicate_literals(parse_clause(
            "d = c | c = d | a != b", signature))
        self.assertEqual("d = c | a != b", str(merged))

        first = answer_clause("g(Y) != a | Z = b", "Y", signature,
                              variables)
        second = answer_clause("b = Y | g(Z) != a", "Z", signature,
                               variables)
        self.assertEqual(variant_key(first), variant_key(second))
        self.assertEqual("<g(X0) != a | X1 = b, X0>", str(normalize(first)))
        self.assertEqual("<g(Y') != a | Z' = b, Y'>",
                         str(rename_apart(first)))

        resolved = answer_clause("d = c | a != a", "ite(a = a, Y, b)",
                                 signature, variables)
        self.assertEqual("<d = c, X0>", str(normalize(resolved)))
        self.assertEqual("<[], a>", str(normalize(answer_clause(
            "b != b", "ite(c = d, a, a)", signature))))

    def test_variant_key_sorts(self):
        def clause_over(sort):
            x, y = Var("X", sort), Var("Y", sort)
            return AnswerClause(Clause((Literal(x, y, False),)), x)

        self.assertNotEqual(variant_key(clause_over("u")),
                            variant_key(clause_over("v")))
        self.assertNotEqual(clause_key(clause_over("u").clause),
                            clause_key(clause_over("v").clause))
        self.assertEqual(variant_key(clause_over("u")),
                         variant_key(clause_over("u")))


class CalculusTest(unittest.TestCase):

    def setUp(self):
        self.problem, self.calculus = load_problem("abs")
        self.signature = self.problem.signature
        self.variables = u_variables("x y A0")

    def clause(self, text, answer):
        return answer_clause(text, answer, self.signature, self.variables)

    def test_sup_c(self):
        left = self.clause("d = c", "a")
        right = self.clause("f(d) = e", "y")
        site = InferenceSite(0, False, 0, False, (0,))
        conclusion = self.calculus.sup_c(left, right, site)
        self.assertEqual("<f(c) = e, ite(d = c, X0, a)>",
                         str(normalize(conclusion)))

        uncomputable = self.clause("d = c", "f(a)")
        self.assertEqual(None, self.calculus.sup_c(uncomputable, right,
                                                   site))

        ite_left = self.clause("f(c) = e", "ite(d = c, y, a)")
        target = self.clause("f(c) != e", "b")
        self.assertEqual(None, self.calculus.sup_c(
            ite_left, target, InferenceSite(0, False, 0, False, ())))

    def test_sup_u(self):
        left = self.clause("d = c", "a")
        right = self.clause("f(d) = e", "y")
        site = InferenceSite(0, False, 0, False, (0,))
        self.assertEqual("<f(c) = e, a>",
                         str(self.calculus.sup_u(left, right, site)))

        ite_left = self.clause("f(c) = e", "ite(d = c, y, a)")
        target = self.clause("f(c) != e", "b")
        self.assertEqual(None, self.calculus.sup_u(
            ite_left, target, InferenceSite(0, False, 0, False, ())))

    def test_sup_u_workshop(self):
        problem, calculus = load_problem("workshop")
        variables = {"y": Var("y", "workshop")}
        rewriter = answer_clause("ws(vamp) = true", "paar",
                                 problem.signature, variables)
        goal = answer_clause("ws(y) != true", "y", problem.signature,
                             variables)
        site = InferenceSite(0, False, 0, False, ())
        self.assertEqual(None, calculus.sup_u(rewriter, goal, site))

        rewriter = answer_clause("ws(vamp) = true", "vamp",
                                 problem.signature, variables)
        self.assertEqual("<true != true, vamp>",
                         str(calculus.sup_u(rewriter, goal, site)))

        fixed = answer_clause("ws(y) != true", "vamp", problem.signature,
                              variables)
        paar = answer_clause("ws(paar) = true", "paar", problem.signature,
                             variables)
        self.assertEqual(None, calculus.sup_u(paar, fixed, site))

    def test_superposition_needs_selection(self):
        left = self.clause("d = c", "a")
        right = self.clause("f(d) = e | h(y) != h(b)", "y")
        site = InferenceSite(0, False, 0, False, (0,))
        self.assertEqual(None, self.calculus.sup_c(left, right, site))

    def test_eq_res(self):
        premise = self.clause("d = c | g(y) != g(a)", "y")
        self.assertEqual([1], self.calculus.selected(premise))
        self.assertEqual("<d = c, a>", str(self.calculus.eq_res(
            premise, InferenceSite(1))))

        self.assertEqual("<[], a>", str(self.calculus.eq_res(
            self.clause("x != a", "x"), InferenceSite(0))))
        self.assertEqual(None, self.calculus.eq_res(
            self.clause("x != f(c)", "x"), InferenceSite(0)))
        self.assertEqual(None, self.calculus.eq_res(
            self.clause("d = c", "x"), InferenceSite(0)))

    def test_eq_factor(self):
        premise = self.clause("f(x) = a | f(b) = a", "x")
        conclusion = self.calculus.eq_factor(
            premise, InferenceSite(0, False, 1, False))
        self.assertEqual("<f(b) = a | a != a, b>", str(conclusion))

        single = self.clause("f(x) = a | x != b", "x")
        self.assertEqual(None, self.calculus.eq_factor(
            single, InferenceSite(0, False, 1, False)))

        self.assertEqual(None, self.calculus.eq_factor(
            premise, InferenceSite(0, True, 1, True)))

    def test_abstract_step(self):
        premise = self.clause("f(d) = e", "y")
        self.assertEqual("<f(A0) = e | A0 != d, y>",
                         str(self.calculus.abstract_step(premise)))

        premise = self.clause("d = c | g(y) != g(a)", "y")
        self.assertEqual("<d = c | g(y) != g(A0) | A0 != a, y>",
                         str(self.calculus.abstract_step(premise)))

        problem, calculus = load_problem("constant")
        self.assertEqual(None, calculus.abstract_step(answer_clause(
            "y = a", "y", problem.signature, {"y": Var("y", "u")})))

    def test_abstract_fixpoint(self):
        premise = self.clause("f(c) != e | x != b", "x")
        self.assertEqual("<f(A0) != e | A0 != c | x != b, x>",
                         str(self.calculus.abstract_fixpoint(premise)))

        done = self.clause("f(A0) = e | A0 != d", "y")
        self.assertEqual(done, self.calculus.abstract_fixpoint(done))

        sig = Signature()
        sig.add_sort("u")
        sig.declare("a", (), "u", True)
        sig.declare("b", (), "u", True)
        sig.declare("g", ("u", "u"), "u", False)
        sig.declare("ws", ("u",), "bool", False)
        problem = self.problem._replace(signature=sig)
        _, calculus = build_calculus(problem, SaturationConfig())
        premise = answer_clause("ws(g(a, b)) = true", "y", sig,
                                {"y": Var("y", "u")})
        steps = calculus.abstraction_steps(premise)
        self.assertEqual(3, len(steps))
        self.assertEqual("<ws(g(A0, A1)) = true | A1 != b | A0 != a, y>",
                         str(steps[-1]))

    def test_abstraction_is_equivalence(self):
        pairs = [(original.clause,
                  self.calculus.abstract_fixpoint(original).clause)
                 for original in self.problem.clauses]
        self.assertTrue(all(original != abstracted
                            for original, abstracted in pairs))
        count = 0
        for interpretation in enumerate_interpretations(
                self.signature, 2, min_size=2):
            count += 1
            for original, abstracted in pairs:
                self.assertEqual(holds_clause(original, interpretation),
                                 holds_clause(abstracted, interpretation))
        self.assertEqual(2 ** 5 * 4 ** 3, count)

    def test_abstractable_matches_instances(self):
        # abstractable(s, k) iff some ground instance makes s uncomputable
        # while k stays computable
        sig = mixed_signature()
        calculus = SynthesisCalculus(
            sig, LPOrder(make_partitioned_precedence(sig)))
        leaves = [sig.make("a"), sig.make("c"), Var("X", "u"),
                  Var("Y", "u")]
        ground = all_terms(sig, leaves[:2], 1)
        sides = all_terms(sig, leaves, 2)
        self.assertEqual(604, len(sides))
        for s in sides:
            free = variables(s)
            instances = [dict(zip(free, values)) for values in
                         itertools.product(ground, repeat=len(free))]
            for _, k in iter_subterms(s):
                if isinstance(k, Var):
                    continue
                expected = any(
                    not is_computable(substitute(theta, s), sig) and
                    is_computable(substitute(theta, k), sig)
                    for theta in instances)
                self.assertEqual(expected, calculus.abstractable(s, k),
                                 "{0} in {1}".format(k, s))

    def test_rules_are_sound(self):
        rng = random.Random(17)
        names = ["X", "Y"]
        constants = [self.signature.make(name) for name in "abcde"]
        answers = [Var("X", "u"), Var("Y", "u"), Var("Z", "u")] +\
            constants[:3]
        checked = dict((rule, 0) for rule in (
            RULE_SUPC, RULE_SUPU, RULE_EQRES, RULE_EQFAC, RULE_ABS))
        attempts = 0
        while min(checked.values()) < 1000 and attempts < 30000:
            attempts += 1
            interpretation = random_interpretation(self.signature, 2, rng)
            if holds_formula(self.problem.formula, interpretation):
                continue
            pool = [random_term(self.signature, names, 2, rng),
                    random_term(self.signature, names, 1, rng),
                    rng.choice(constants), Var(rng.choice(names), "u")]
            premises = []
            while len(premises) < 2:
                premise = random_premise(pool, answers, rng)
                if holds_answer_clause(premise, self.problem,
                                       interpretation):
                    premises.append(premise)
            left, right = premises
            conclusions = []
            for first, second in ((left, right), (right, left)):
                for inference in itertools.chain(
                        self.calculus.unary_inferences(0, first),
                        self.calculus.superposition_inferences(
                            0, first, 1, second)):
                    conclusions.append((inference.rule,
                                        inference.conclusion))
                abstracted = self.calculus.abstract_step(first)
                if abstracted is not None:
                    conclusions.append((RULE_ABS, abstracted))
            for rule, conclusion in conclusions:
                checked[rule] += 1
                self.assertTrue(holds_answer_clause(
                    conclusion, self.problem, interpretation),
                    "{0} from {1} and {2}: {3}".format(
                        rule, left, right, conclusion))
        for rule, count in checked.items():
            self.assertTrue(count >= 1000, "{0}: {1}".format(rule, count))

    def test_abstraction_disabled(self):
        _, calculus = load_problem("abs", abstraction=False)
        premise = self.clause("f(d) = e", "y")
        self.assertEqual([premise], calculus.abstraction_steps(premise))

    def test_apply(self):
        left = self.clause("d = c", "a")
        right = self.clause("f(d) = e", "y")
        site = InferenceSite(0, False, 0, False, (0,))
        self.assertEqual(self.calculus.sup_c(left, right, site),
                         self.calculus.apply("SupC", [left, right], site))
        self.assertEqual(self.calculus.abstract_step(right),
                         self.calculus.apply(RULE_ABS, [right], None))

    def test_generated_inferences_are_sound(self):
        synthesizer, result = synthesize("workshop")
        self.assertEqual(STATUS_SUCCESS, result.status)
        rng = random.Random(3)
        problem = synthesizer.problem
        for _ in range(10):
            interpretation = random_interpretation(problem.signature, 2, rng)
            for clause in synthesizer.clauses.values():
                self.assertTrue(holds_answer_clause(
                    clause, problem, interpretation), str(clause))


class OracleTest(unittest.TestCase):

    def test_count_interpretations(self):
        sig = Signature()
        sig.add_sort("u")
        sig.declare("a", (), "u", True)
        self.assertEqual(1, count_interpretations(sig, 1))

        sig.declare("b", (), "u", True)
        sig.declare("f", ("u",), "u", False)
        self.assertEqual(16, count_interpretations(sig, 2, min_size=2))
        self.assertEqual(16, len(list(enumerate_interpretations(
            sig, 2, min_size=2))))

    def test_enumeration_limit(self):
        problem, _ = load_problem("abs")
        self.assertRaises(EnumerationLimitError, list,
                          enumerate_interpretations(problem.signature, 6))

    def test_eval_program(self):
        problem, _ = load_problem("workshop")
        x = Var("x", "day")
        interpretation = Interpretation(
            {"bool": (0, 1), "day": (0, 1), "workshop": (0, 1)},
            {"fri": {(): 0}, "sat": {(): 1}, "paar": {(): 0},
             "vamp": {(): 1}})
        program = parse_program("ite(x = fri, vamp, paar)",
                                problem.signature, {"x": x})
        self.assertEqual(1, eval_program(program, interpretation, {x: 0}))
        self.assertEqual(0, eval_program(program, interpretation, {x: 1}))
        self.assertEqual(0, eval_program(
            parse_program("ite(fri = fri, paar, vamp)", problem.signature),
            interpretation, {}))

    def test_check_solution(self):
        spec = read_spec(spec_path("workshop"))
        x = spec.inputs[0]
        program = parse_program("ite(x = fri, vamp, paar)", spec.signature,
                                {"x": x})
        verdict = check_solution(spec, program, 3)
        self.assertTrue(verdict.verified)
        self.assertEqual(3, verdict.max_size)

        verdict = check_solution(spec, parse_program(
            "vamp", spec.signature), 3)
        self.assertFalse(verdict.verified)
        counterexample = verdict.counterexample
        self.assertEqual(
            counterexample.tables["sat"][()], counterexample.inputs["x"])

    def test_undefined_entry(self):
        interpretation = Interpretation(
            {"bool": (0, 1), "workshop": (0, 1)},
            {"vamp": {(): 1}})
        problem, _ = load_problem("workshop")
        term = parse_term("ws(vamp)", problem.signature)
        try:
            eval_term(term, interpretation, {})
            self.fail("undefined entry expected")
        except UndefinedEntry as e:
            self.assertEqual("ws", e.symbol)
            self.assertEqual((1,), e.arguments)

    def test_check_abs_solution(self):
        spec = read_spec(spec_path("abs"))
        program = parse_program("ite(d = c, b, a)", spec.signature)
        self.assertTrue(check_solution(spec, program, 3).verified)
        self.assertFalse(check_solution(
            spec, parse_program("a", spec.signature), 3).verified)


class SaturationTest(unittest.TestCase):

    def test_workshop(self):
        synthesizer, result = synthesize("workshop")
        self.assertEqual(STATUS_SUCCESS, result.status)
        self.assertTrue(isinstance(result.program, Ite))
        spec = synthesizer.problem.spec
        self.assertTrue(check_solution(spec, result.program, 3).verified)

        _, last = result.proof[-1]
        self.assertTrue(last.conclusion.clause.is_empty())
        self.assertEqual(RULE_INPUT, result.proof[0][1].rule)

    def test_workshop_tkbo(self):
        synthesizer, result = synthesize("workshop", ordering=ORDERING_TKBO)
        self.assertEqual(STATUS_SUCCESS, result.status)
        self.assertTrue(check_solution(
            synthesizer.problem.spec, result.program, 3).verified)

    def test_abs(self):
        synthesizer, result = synthesize("abs")
        self.assertEqual(STATUS_SUCCESS, result.status)
        self.assertTrue(check_solution(
            synthesizer.problem.spec, result.program, 3).verified)
        self.assertIn(RULE_ABS, [inference.rule
                                 for _, inference in result.proof])

    def test_abs_without_abstraction(self):
        _, result = synthesize("abs", abstraction=False)
        self.assertIn(result.status, (STATUS_SATURATED, STATUS_LIMIT))
        self.assertEqual(None, result.program)

    def test_unpartitioned_workshop_is_stuck(self):
        synthesizer, result = synthesize(
            "workshop", precedence_hints=["sat", "fri", "paar", "vamp",
                                          "ws", "x"],
            partitioned=False, selection=SELECTION_NEGATIVE,
            abstraction=False)
        self.assertEqual(STATUS_SATURATED, result.status)
        self.assertIn("stuck", result.reason)
        self.assertIn("<ws(vamp) = true, paar>",
                      [str(clause) for clause in
                       synthesizer.clauses.values()])

    def test_curated_suite(self):
        expected = {
            "identity": "x",
            "constant": "a",
            "function": "g(x)",
            "nested": "h(a)",
            "universal": "g(x)",
            "skolem": "a",
        }
        for name in ("identity", "constant", "function", "three_branch",
                     "nested", "universal", "two_inputs", "case_split",
                     "skolem"):
            synthesizer, result = synthesize(name)
            self.assertEqual(STATUS_SUCCESS, result.status, name)
            if name in expected:
                self.assertEqual(expected[name],
                                 format_term(result.program))
            self.assertTrue(check_solution(
                synthesizer.problem.spec, result.program, 3).verified, name)

    def test_saturate(self):
        problem, _ = load_problem("identity")
        result = saturate(problem)
        self.assertEqual(STATUS_SUCCESS, result.status)
        self.assertEqual("x", format_term(result.program))

    def test_all_solutions(self):
        _, result = synthesize("workshop", all_solutions=True,
                               limits=Limits(max_iterations=200))
        self.assertEqual(STATUS_SUCCESS, result.status)
        self.assertEqual(result.program, result.programs[0])
        self.assertEqual(len(set(result.programs)), len(result.programs))

    def test_limits(self):
        _, result = synthesize("abs", limits=Limits(max_iterations=1))
        self.assertEqual(STATUS_LIMIT, result.status)
        self.assertEqual("iterations", result.reason)

        _, result = synthesize("abs", limits=Limits(max_clauses=1))
        self.assertEqual(STATUS_LIMIT, result.status)
        self.assertEqual("clauses", result.reason)

    def test_extract_program(self):
        problem, _ = load_problem("workshop")
        precedence = build_precedence(problem, list(problem.spec.precedence))
        signature = problem.signature
        raw = parse_program("ite(in_x = fri, vamp, paar)", signature)
        self.assertEqual("ite(x = fri, vamp, paar)", format_term(
            extract_program(AnswerClause(Clause(()), raw), problem,
                            precedence)))
        self.assertEqual("paar", format_term(extract_program(
            AnswerClause(Clause(()), Var("Z", "workshop")), problem,
            precedence)))
        self.assertEqual("vamp", format_term(extract_program(
            AnswerClause(Clause(()), signature.make("vamp")), problem,
            precedence)))

    def test_simplify_program(self):
        problem, _ = load_problem("workshop")
        variables = {"x": Var("x", "day")}
        signature = problem.signature

        def simplified(text):
            return format_term(simplify_program(parse_program(
                text, signature, variables)))

        self.assertEqual("vamp", simplified("ite(x = fri, vamp, vamp)"))
        self.assertEqual("vamp", simplified("ite(sat = sat, vamp, paar)"))
        self.assertEqual("ite(x = fri, vamp, paar)",
                         simplified("ite(x = fri, vamp, paar)"))
        self.assertEqual("ite(x = fri, vamp, paar)", simplified(
            "ite(x = fri, ite(x = fri, vamp, paar), paar)"))
        self.assertEqual("ite(x = fri, vamp, paar)", simplified(
            "ite(x = fri, ite(fri = x, vamp, paar), paar)"))
        self.assertEqual("paar", simplified(
            "ite(x = fri, paar, ite(fri = x, vamp, paar))"))
        self.assertEqual("ite(x = fri, vamp, ite(x = sat, paar, vamp))",
                         simplified("ite(x = fri, vamp, "
                                    "ite(x = sat, paar, vamp))"))

    def test_clause_priority(self):
        problem, _ = load_problem("abs")
        signature = problem.signature
        empty = AnswerClause(Clause(()), signature.make("a"))
        small = answer_clause("a = b", "a", signature)
        large = answer_clause("f(a) = b", "a", signature)
        self.assertTrue(clause_priority(empty, 100) <
                        clause_priority(small, 0))
        self.assertTrue(clause_priority(small, 5) <
                        clause_priority(large, 5))
        self.assertTrue(clause_priority(small, 4) <
                        clause_priority(small, 5))
        branching = answer_clause("a = b", "ite(c = d, a, b)", signature)
        self.assertTrue(clause_priority(small, 5) <
                        clause_priority(branching, 5))

    def test_redundancy(self):
        problem, _ = load_problem("workshop")
        signature = problem.signature
        synthesizer = Synthesizer(problem)
        simple = answer_clause("in_x = fri", "paar", signature)
        self.assertEqual(None, synthesizer.redundant(simple))
        self.assertEqual("Duplicate", synthesizer.redundant(simple))
        self.assertEqual("Answer variant", synthesizer.redundant(
            answer_clause("in_x = fri", "ite(in_x = sat, vamp, paar)",
                          signature)))
        self.assertEqual(None, synthesizer.redundant(
            answer_clause("in_x = fri", "vamp", signature)))
        self.assertEqual(None, synthesizer.redundant(
            answer_clause("in_x = sat", "ite(in_x = fri, vamp, paar)",
                          signature)))
        self.assertEqual("Tautology", synthesizer.redundant(
            answer_clause("paar = paar", "vamp", signature)))

    def test_three_branch(self):
        synthesizer, result = synthesize("three_branch")
        self.assertEqual(STATUS_SUCCESS, result.status)
        self.assertTrue(check_solution(
            synthesizer.problem.spec, result.program, 3).verified)
        self.assertTrue(format_term(result.program).count("ite(") >= 2)


class SpecFileTest(unittest.TestCase):

    def test_workshop(self):
        spec = read_spec(spec_path("workshop"))
        signature = spec.signature
        self.assertEqual(
            set(["true", "false", "fri", "sat", "paar", "vamp"]),
            set(signature.computable_symbols()))
        self.assertEqual(["ws"], signature.uncomputable_symbols())
        self.assertEqual(("ws", "vamp", "paar", "sat", "fri"),
                         spec.precedence)
        self.assertEqual(["x"], [var.name for var in spec.inputs])
        self.assertEqual(Var("y", "workshop"), spec.output)

    def test_abs(self):
        spec = read_spec(spec_path("abs"))
        self.assertEqual(set(["f", "g", "h"]),
                         set(spec.signature.uncomputable_symbols()))
        self.assertEqual((), spec.inputs)

    def test_located_errors(self):
        try:
            read_spec(spec_path("bad_undeclared"))
            self.fail("undeclared symbol expected")
        except SpecificationError as e:
            self.assertEqual((5, 9), (e.line, e.column))

        try:
            parse_spec("(sorts u)\n(output (y u)\n")
            self.fail("unclosed parenthesis expected")
        except SpecificationError as e:
            self.assertEqual(2, e.line)

        self.assertRaises(SpecificationError, parse_spec,
                          "(sorts u)\n(output (y v))\n(formula true)")
        self.assertRaises(SpecificationError, parse_spec,
                          "(sorts u)\n(output (y u))\n(formula y)")

    def test_print_spec(self):
        for name in ("workshop", "abs", "universal", "skolem"):
            spec = read_spec(spec_path(name))
            reparsed = parse_spec(print_spec(spec))
            self.assertEqual(spec.formula, reparsed.formula)
            self.assertEqual(list(spec.signature.symbols.values()),
                             list(reparsed.signature.symbols.values()))
            self.assertEqual(spec.precedence, reparsed.precedence)

    def test_infix(self):
        problem, _ = load_problem("abs")
        clause = parse_clause("f(X0) = a | X0 != b", problem.signature,
                              variable_sort="u")
        self.assertEqual("f(X0) = a | X0 != b", str(clause))
        self.assertEqual(Clause(()), parse_clause("[]", problem.signature))
        self.assertRaises(SpecificationError, parse_term, "f(a",
                          problem.signature)

    def test_invalid_utf8(self):
        (handle, path) = mkstemp(suffix=".spec")
        try:
            os.write(handle, b"(sorts u)\n(output (y \xff))\n")
            os.close(handle)
            read_spec(path)
            self.fail("invalid UTF-8 expected")
        except SpecificationError as e:
            self.assertEqual((2, 12), (e.line, e.column))
            self.assertIn("0xff", str(e))
        finally:
            os.remove(path)


class TraceTest(unittest.TestCase):

    def setUp(self):
        (_, self.trace_path) = mkstemp(suffix=".trace")

    def tearDown(self):
        os.remove(self.trace_path)

    def test_replay(self):
        for name in ("identity", "constant", "function", "three_branch",
                     "nested", "universal", "two_inputs", "case_split",
                     "skolem", "workshop", "abs"):
            run = api.synthesize_with_options(
                spec_path(name), {"trace": self.trace_path},
                logger_builder=get_logger)
            self.assertEqual(STATUS_SUCCESS, run.result.status, name)

            report = replay(self.trace_path)
            self.assertEqual((), report.mismatches, name)
            self.assertEqual(format_term(run.result.program), report.program)
            self.assertTrue(report.checked > 0, name)

    def test_extraction_error_is_traced(self):
        spec = parse_spec("(sorts u)\n(uncomputable (f u u))\n"
                          "(output (y u))\n(formula (= y y))")
        problem = preprocess(spec)
        with codecs.open(self.trace_path, "w", "utf-8") as trace_file:
            trace = TraceWriter(trace_file)
            synthesizer = Synthesizer(problem, trace=trace)
            trace.header(spec, synthesizer.config, synthesizer.precedence)
            self.assertRaises(ExtractionError, synthesizer.synthesize)

        last = read_trace(self.trace_path)[-1]
        self.assertEqual("result", last["type"])
        self.assertEqual(STATUS_ERROR, last["status"])
        self.assertTrue(last["reason"])

    def test_tampered_replay(self):
        api.synthesize_with_options(spec_path("workshop"),
                                    {"trace": self.trace_path})
        records = read_trace(self.trace_path)
        for record in records:
            if record.get("type") == "inference":
                record["answer"] = "tampered"
                break
        with codecs.open(self.trace_path, "w", "utf-8") as trace_file:
            for record in records:
                trace_file.write(json.dumps(record) + "\n")

        report = api.replay(self.trace_path)
        self.assertEqual(1, len(report.mismatches))


class CommandLineTest(unittest.TestCase):

    def setUp(self):
        self.argv = sys.argv
        (_, self.output_path) = mkstemp(suffix=".json")

    def tearDown(self):
        sys.argv = self.argv
        os.remove(self.output_path)

    def run_cli(self, *args):
        sys.argv = ['supra'] + list(args)
        try:
            execute_from_command_line()
        except SystemExit as e:
            return e.code
        self.fail("supra did not exit")

    def read_report(self):
        with codecs.open(self.output_path, "r", "utf-8") as output_file:
            return json.loads(output_file.read())

    def test_verify(self):
        code = self.run_cli(spec_path("abs"), "--verify", "-f", "json",
                            "-o", self.output_path)
        self.assertEqual(EXIT_SUCCESS, code)
        report = self.read_report()
        self.assertEqual("SUCCESS", report["meta"]["global_status"])
        self.assertTrue(report["verification"]["verified"])
        self.assertTrue(report["proof"])

    def test_no_abs(self):
        code = self.run_cli(spec_path("abs"), "--no-abs", "-f", "json",
                            "-o", self.output_path)
        self.assertIn(code, (EXIT_SATURATED, EXIT_LIMIT))
        report = self.read_report()
        self.assertEqual("ERROR", report["meta"]["global_status"])
        self.assertTrue(report["meta"]["reason"])

    def test_input_errors(self):
        self.assertEqual(EXIT_INPUT_ERROR,
                         self.run_cli(spec_path("bad_undeclared")))
        self.assertEqual(EXIT_INPUT_ERROR,
                         self.run_cli(spec_path("does_not_exist")))
        self.assertEqual(EXIT_INPUT_ERROR,
                         self.run_cli(spec_path("workshop"), "-O", "rpo"))

    def test_junit(self):
        code = self.run_cli(spec_path("workshop"), "--verify", "-f",
                            "junit", "-o", self.output_path)
        self.assertEqual(EXIT_SUCCESS, code)
        with codecs.open(self.output_path, "r", "utf-8") as output_file:
            content = output_file.read()
        self.assertIn("synthesis", content)
        self.assertIn("verification", content)

    def test_replay_command(self):
        (_, trace_path) = mkstemp(suffix=".trace")
        try:
            self.assertEqual(EXIT_SUCCESS, self.run_cli(
                spec_path("workshop"), "-t", trace_path, "-o",
                self.output_path))
            self.assertEqual(EXIT_SUCCESS, self.run_cli("replay",
                                                        trace_path))

            with codecs.open(trace_path, "a", "utf-8") as trace_file:
                trace_file.write(json.dumps({
                    "type": "input", "id": 10 ** 6, "clause": "[]",
                    "answer": "a"}) + "\n")
            self.assertEqual(EXIT_REPLAY_MISMATCH,
                             self.run_cli("replay", trace_path))
        finally:
            os.remove(trace_path)

    def test_api(self):
        run = api.synthesize(spec_path("identity"))
        self.assertEqual(EXIT_SUCCESS, run.exit_code)
        self.assertEqual("x", format_term(run.result.program))


if __name__ == '__main__':
    unittest.main()
