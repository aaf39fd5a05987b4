from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import product
from typing import Mapping

from lark import Token, Tree

from .config import DEFAULT_VARIABLE_CAP
from .parse import parse_chain_source, parse_term_source
from .semigroup import FiniteSemigroup, LimitExceeded, SemigroupError


logger = logging.getLogger(__name__)


class UnboundVariable(SemigroupError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"variable {name!r} has no value")


class VariableCapExceeded(LimitExceeded):
    def __init__(self, count: int, cap: int) -> None:
        super().__init__(
            f"pseudoidentity uses {count} variables, the cap is {cap}; raise it with --variable-cap"
        )


class TermBuildError(SemigroupError):
    pass


class PseudoTerm(ABC):

    @abstractmethod
    def evaluate(self, sg: FiniteSemigroup, assignment: Mapping[str, int]) -> int:
        pass

    @abstractmethod
    def variables(self) -> tuple[str, ...]:
        """Variable names in order of first appearance."""
        pass


@dataclass(frozen=True)
class Variable(PseudoTerm):
    name: str

    def evaluate(self, sg: FiniteSemigroup, assignment: Mapping[str, int]) -> int:
        try:
            return assignment[self.name]
        except KeyError:
            raise UnboundVariable(self.name) from None

    def variables(self) -> tuple[str, ...]:
        return (self.name,)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Concat(PseudoTerm):
    left: PseudoTerm
    right: PseudoTerm

    def evaluate(self, sg: FiniteSemigroup, assignment: Mapping[str, int]) -> int:
        return sg.mul(self.left.evaluate(sg, assignment), self.right.evaluate(sg, assignment))

    def variables(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.left.variables() + self.right.variables()))

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Concat) else str(self.right)
        return f"{self.left} {right}"


@dataclass(frozen=True)
class OmegaPower(PseudoTerm):
    child: PseudoTerm

    def evaluate(self, sg: FiniteSemigroup, assignment: Mapping[str, int]) -> int:
        return sg.omega(self.child.evaluate(sg, assignment))

    def variables(self) -> tuple[str, ...]:
        return self.child.variables()

    def __str__(self) -> str:
        if isinstance(self.child, Concat):
            return f"({self.child})^w"
        return f"{self.child}^w"


@dataclass(frozen=True)
class Pseudoidentity:
    lhs: PseudoTerm
    rhs: PseudoTerm

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.lhs.variables() + self.rhs.variables()))

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


class TermBuilder:
    """Turns pseudo.lark parse trees into PseudoTerm values."""

    def build(self, node: Tree | Token) -> PseudoTerm:
        if not isinstance(node, Tree):
            raise TermBuildError(f"Unknown node {node!r}")
        fn = getattr(self, f"build_{node.data}", None)
        if not fn:
            raise TermBuildError(f"No builder for {node.data}")
        return fn(node.children)

    def build_var(self, children) -> PseudoTerm:
        return Variable(str(children[0]))

    def build_concat(self, children) -> PseudoTerm:
        left, right = children
        return Concat(self.build(left), self.build(right))

    def build_omega(self, children) -> PseudoTerm:
        # children: [factor, OMEGA token]
        return OmegaPower(self.build(children[0]))

    def build_chain(self, children) -> tuple[PseudoTerm, ...]:
        return tuple(self.build(c) for c in children if isinstance(c, Tree))


def parse_term(src: str) -> PseudoTerm:
    return TermBuilder().build(parse_term_source(src))


def parse_pseudoidentities(src: str) -> tuple[Pseudoidentity, ...]:
    """"u = v = w" gives the consecutive equalities u = v and v = w."""
    terms = TermBuilder().build_chain(parse_chain_source(src).children)
    return tuple(Pseudoidentity(a, b) for a, b in zip(terms, terms[1:]))


def eval_term(sg: FiniteSemigroup, term: PseudoTerm, assignment: Mapping[str, int]) -> int:
    return term.evaluate(sg, assignment)


@dataclass(frozen=True)
class Satisfaction:
    holds: bool
    identity: Pseudoidentity
    counterexample: Mapping[str, int] | None = None
    values: tuple[int, int] | None = None   # (lhs, rhs) at the counterexample

    def __bool__(self) -> bool:
        return self.holds


def satisfies(
    sg: FiniteSemigroup, identity: Pseudoidentity, *, variable_cap: int = DEFAULT_VARIABLE_CAP
) -> Satisfaction:
    """Evaluate both sides under all |S|^k assignments of the k variables."""
    names = identity.variables
    if len(names) > variable_cap:
        raise VariableCapExceeded(len(names), variable_cap)
    for values in product(sg.elements, repeat=len(names)):
        assignment = dict(zip(names, values))
        left = identity.lhs.evaluate(sg, assignment)
        right = identity.rhs.evaluate(sg, assignment)
        if left != right:
            logger.debug("%r violates %s at %s", sg, identity, assignment)
            return Satisfaction(False, identity, assignment, (left, right))
    return Satisfaction(True, identity)


def satisfies_all(
    sg: FiniteSemigroup, identities: tuple[Pseudoidentity, ...], *, variable_cap: int = DEFAULT_VARIABLE_CAP
) -> Satisfaction:
    """The first failing equality of a chain, or a holding verdict for the last."""
    result = None
    for identity in identities:
        result = satisfies(sg, identity, variable_cap=variable_cap)
        if not result:
            return result
    if result is None:
        raise ValueError("no pseudoidentities given")
    return result
