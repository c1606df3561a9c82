# -*- coding: utf-8 -*-
"""
Inference rules over answer clauses: superposition with a computable ite
answer (SupC), superposition unifying the answers (SupU), equality resolution,
equality factoring and abstraction of computable subterms (Abs).

Rule application is a pure function of the premises and an InferenceSite, so a
recorded inference can be re-applied by the trace replayer.
"""
from __future__ import unicode_literals, absolute_import

from collections import namedtuple

from supra.models import (
    namedtuple_with_defaults, RULE_SUPC, RULE_SUPU, RULE_EQRES, RULE_EQFAC,
    RULE_ABS, SELECTION_MAXIMAL, AbstractionLimitError, PreconditionError)
from supra.clauses import Literal, Clause, AnswerClause, rename_apart
from supra.orders import GREATER, EQUAL, LESS, selected_indexes
from supra.terms import (
    Var, Ite, iter_subterms, subterm_at, replace_at, variables, mgu,
    substitute, is_computable, is_simple, term_size)


InferenceSite = namedtuple_with_defaults(
    "InferenceSite",
    ["literal", "flip", "other_literal", "other_flip", "position"],
    {"flip": False, "other_flip": False, "position": ()})
"""Where a rule applies.

For SupC/SupU, literal and flip pick l = r in the left premise, other_literal
and other_flip pick s[l'] = t in the right premise and position is the path of
l' in s. For EqRes only literal is used. For EqFac literal/flip pick s = t and
other_literal/other_flip pick l = r. Abs ignores the site.
"""


Inference = namedtuple_with_defaults(
    "Inference", ["rule", "premises", "unifier", "site", "conclusion"],
    {"unifier": {}, "site": None})


def oriented(literal, flip):
    if flip:
        return literal.rhs, literal.lhs
    return literal.lhs, literal.rhs


def _literal(lhs, rhs, positive, flip):
    if flip:
        return Literal(rhs, lhs, positive)
    return Literal(lhs, rhs, positive)


def _flips(literal):
    if literal.lhs == literal.rhs:
        return (False,)
    return (False, True)


class SynthesisCalculus(object):
    """Applies the rules with a fixed signature, simplification order and
    literal selection."""

    def __init__(self, signature, order, selection=SELECTION_MAXIMAL,
                 abstraction=True):
        self.signature = signature
        self.order = order
        self.selection = selection
        self.abstraction = abstraction

    def selected(self, answer_clause):
        return selected_indexes(answer_clause.clause, self.order,
                                self.selection)

    def _not_greater_equal(self, s, t):
        """s is not >= t"""
        return self.order.compare(s, t) not in (GREATER, EQUAL)

    # Superposition

    def _superpose(self, rule, left, right, site):
        right = rename_apart(right)
        left_literals = left.clause.literals
        right_literals = right.clause.literals
        if site.literal >= len(left_literals) or\
                site.other_literal >= len(right_literals):
            return None
        rewriter = left_literals[site.literal]
        if not rewriter.positive:
            return None
        l, r = oriented(rewriter, site.flip)
        target = right_literals[site.other_literal]
        s, t = oriented(target, site.other_flip)
        try:
            l_prime = subterm_at(s, site.position)
        except (AttributeError, IndexError):
            return None
        if isinstance(l_prime, Var) or l_prime.sort != l.sort:
            return None

        p, q = left.answer, right.answer
        pairs = [(l, l_prime)]
        if rule == RULE_SUPU:
            if isinstance(p, Ite) or isinstance(q, Ite) or p.sort != q.sort:
                return None
            pairs.append((p, q))
        sigma = mgu(pairs)
        if sigma is None:
            return None

        l_s, r_s = substitute(sigma, l), substitute(sigma, r)
        s_s, t_s = substitute(sigma, s), substitute(sigma, t)
        if not self._not_greater_equal(r_s, l_s) or\
                not self._not_greater_equal(t_s, s_s):
            return None

        if rule == RULE_SUPC:
            answer = substitute(sigma, Ite(l, r, q, p))
            if not is_computable(answer, self.signature):
                return None
        else:
            answer = substitute(sigma, p)
            if not is_simple(answer) or\
                    not is_computable(answer, self.signature):
                return None

        rewritten = _literal(replace_at(s, site.position, r), t,
                             target.positive, site.other_flip)
        literals = [rewritten]
        literals.extend(left.clause.without(site.literal))
        literals.extend(right.clause.without(site.other_literal))
        conclusion = AnswerClause(Clause(tuple(literals)), answer)
        return substitute(sigma, conclusion), sigma

    def _selected_at(self, premise, index):
        return index < len(premise.clause.literals) and\
            index in self.selected(premise)

    def sup_c(self, left, right, site):
        """Superposition of left's l = r into right; the answer becomes
        ite(l = r, q, p) and must be computable."""
        if not self._selected_at(left, site.literal) or\
                not self._selected_at(right, site.other_literal):
            return None
        result = self._superpose(RULE_SUPC, left, right, site)
        return result[0] if result else None

    def sup_u(self, left, right, site):
        """Superposition that also unifies both answers; the answer must stay
        a computable simple term."""
        if not self._selected_at(left, site.literal) or\
                not self._selected_at(right, site.other_literal):
            return None
        result = self._superpose(RULE_SUPU, left, right, site)
        return result[0] if result else None

    # Unary rules

    def _eq_res(self, premise, site):
        literals = premise.clause.literals
        if site.literal >= len(literals):
            return None
        literal = literals[site.literal]
        if literal.positive:
            return None
        sigma = mgu([(literal.lhs, literal.rhs)])
        if sigma is None:
            return None
        answer = substitute(sigma, premise.answer)
        if not is_computable(answer, self.signature):
            return None
        conclusion = AnswerClause(
            Clause(tuple(premise.clause.without(site.literal))),
            premise.answer)
        return substitute(sigma, conclusion), sigma

    def eq_res(self, premise, site):
        if not self._selected_at(premise, site.literal):
            return None
        result = self._eq_res(premise, site)
        return result[0] if result else None

    def _eq_factor(self, premise, site):
        literals = premise.clause.literals
        if site.literal == site.other_literal or\
                max(site.literal, site.other_literal) >= len(literals):
            return None
        first = literals[site.literal]
        second = literals[site.other_literal]
        if not first.positive or not second.positive:
            return None
        s, t = oriented(first, site.flip)
        l, r = oriented(second, site.other_flip)
        if s.sort != l.sort:
            return None
        sigma = mgu([(s, l)])
        if sigma is None:
            return None
        s_s, t_s = substitute(sigma, s), substitute(sigma, t)
        r_s = substitute(sigma, r)
        if not self._not_greater_equal(t_s, s_s) or\
                self.order.compare(r_s, t_s) == GREATER:
            return None
        answer = substitute(sigma, premise.answer)
        if not is_computable(answer, self.signature):
            return None
        conclusion_literals = [Literal(s, t, True), Literal(t, r, False)]
        conclusion_literals.extend(
            premise.clause.without(site.literal, site.other_literal))
        conclusion = AnswerClause(Clause(tuple(conclusion_literals)),
                                  premise.answer)
        return substitute(sigma, conclusion), sigma

    def eq_factor(self, premise, site):
        if not self._selected_at(premise, site.literal):
            return None
        result = self._eq_factor(premise, site)
        return result[0] if result else None

    # Abstraction

    def abstractable(self, s, k):
        """Whether abstracting the computable subterm k of s can help: some
        instance of s is uncomputable while the same instance of k is not."""
        if isinstance(k, Var) or not is_computable(k, self.signature):
            return False
        if not is_computable(s, self.signature):
            return True
        inner = set(variables(k))
        return any(var not in inner and
                   self.signature.has_uncomputable_term(var.sort)
                   for var in variables(s))

    def _fresh_variable(self, premise, sort):
        used = set(var.name for var in variables(premise))
        counter = 0
        while "A{0}".format(counter) in used:
            counter += 1
        return Var("A{0}".format(counter), sort)

    def abstract_step(self, premise):
        """Replaces the leftmost-outermost computable subterm k of a literal
        side s (s not below the other side) whose instances can make s
        uncomputable while k stays computable, adding x != k.

        Returns None when no literal admits abstraction.
        """
        literals = premise.clause.literals
        for index, literal in enumerate(literals):
            for flip in (False, True):
                s, t = oriented(literal, flip)
                if self.order.compare(s, t) in (LESS, EQUAL):
                    continue
                for position, k in iter_subterms(s):
                    if not self.abstractable(s, k):
                        continue
                    fresh = self._fresh_variable(premise, k.sort)
                    rewritten = _literal(replace_at(s, position, fresh), t,
                                         literal.positive, flip)
                    new_literals = list(literals[:index])
                    new_literals.append(rewritten)
                    new_literals.append(Literal(fresh, k, False))
                    new_literals.extend(literals[index + 1:])
                    return AnswerClause(Clause(tuple(new_literals)),
                                        premise.answer)
        return None

    def abstract_fixpoint(self, premise):
        """Applies abstract_step until it no longer applies."""
        return self.abstraction_steps(premise)[-1]

    def abstraction_steps(self, premise, normalizer=None):
        """Returns [premise, step1, ..., fixpoint]. normalizer, when given,
        is applied to every step before the next one is taken."""
        steps = [premise]
        if not self.abstraction:
            return steps
        bound = 10 * max(term_size(premise), 1)
        while True:
            conclusion = self.abstract_step(steps[-1])
            if conclusion is None:
                return steps
            if len(steps) > bound:
                raise AbstractionLimitError(
                    "Abstraction did not terminate after {0} steps on {1}"
                    .format(bound, premise))
            steps.append(normalizer(conclusion) if normalizer else conclusion)

    # Generation

    def unary_inferences(self, premise_id, premise):
        """All EqRes and EqFac inferences on one clause."""
        literals = premise.clause.literals
        for index in self.selected(premise):
            literal = literals[index]
            if not literal.positive:
                site = InferenceSite(index)
                result = self._eq_res(premise, site)
                if result:
                    yield Inference(RULE_EQRES, (premise_id,), result[1],
                                    site, result[0])
                continue
            for flip in _flips(literal):
                for other_index, other in enumerate(literals):
                    if other_index == index or not other.positive:
                        continue
                    for other_flip in _flips(other):
                        site = InferenceSite(index, flip, other_index,
                                             other_flip)
                        result = self._eq_factor(premise, site)
                        if result:
                            yield Inference(
                                RULE_EQFAC, (premise_id,), result[1], site,
                                result[0])

    def superposition_inferences(self, left_id, left, right_id, right):
        """All SupC and SupU inferences rewriting right with left."""
        right_renamed = rename_apart(right)
        left_selected = self.selected(left)
        right_selected = self.selected(right)
        for index in left_selected:
            rewriter = left.clause.literals[index]
            if not rewriter.positive:
                continue
            for flip in _flips(rewriter):
                l, _ = oriented(rewriter, flip)
                for other_index in right_selected:
                    target = right_renamed.clause.literals[other_index]
                    for other_flip in _flips(target):
                        s, _ = oriented(target, other_flip)
                        for position, sub in iter_subterms(s):
                            if isinstance(sub, Var) or sub.sort != l.sort:
                                continue
                            site = InferenceSite(index, flip, other_index,
                                                 other_flip, position)
                            for rule in (RULE_SUPC, RULE_SUPU):
                                result = self._superpose(
                                    rule, left, right, site)
                                if result:
                                    yield Inference(
                                        rule, (left_id, right_id), result[1],
                                        site, result[0])

    def generate(self, given_id, given, active):
        """Yields the inferences between the given clause and the active
        clauses (pairs of id and clause), in both premise orders, and the
        given clause with itself."""
        for inference in self.unary_inferences(given_id, given):
            yield inference
        for inference in self.superposition_inferences(
                given_id, given, given_id, given):
            yield inference
        for active_id, clause in active:
            if active_id == given_id:
                continue
            for inference in self.superposition_inferences(
                    given_id, given, active_id, clause):
                yield inference
            for inference in self.superposition_inferences(
                    active_id, clause, given_id, given):
                yield inference

    def apply(self, rule, premises, site):
        """Re-applies a rule at a recorded site. Returns the conclusion or
        None when the rule is not applicable there."""
        if rule == RULE_ABS:
            return self.abstract_step(premises[0])
        if rule in (RULE_SUPC, RULE_SUPU):
            if len(premises) != 2:
                raise PreconditionError(
                    "{0} needs two premises".format(rule))
            if rule == RULE_SUPC:
                return self.sup_c(premises[0], premises[1], site)
            return self.sup_u(premises[0], premises[1], site)
        if rule == RULE_EQRES:
            return self.eq_res(premises[0], site)
        if rule == RULE_EQFAC:
            return self.eq_factor(premises[0], site)
        raise PreconditionError("Unknown rule: {0}".format(rule))
