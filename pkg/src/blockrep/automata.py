from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .config import DEFAULT_CLOSURE_CAP
from .generate import generate_from_transformations
from .semigroup import FiniteSemigroup, ValidationError


logger = logging.getLogger(__name__)


class DfaError(ValidationError):
    pass


class EmptyAlphabet(ValidationError):
    def __init__(self) -> None:
        super().__init__("the automaton has an empty alphabet")


@dataclass(frozen=True)
class Dfa:
    """A complete DFA on states 0..state_count-1; transition[q][i] is the
    state reached from q on alphabet[i]."""
    state_count: int
    alphabet: tuple[str, ...]
    transition: tuple[tuple[int, ...], ...]
    initial: int
    accepting: frozenset[int]

    def __post_init__(self) -> None:
        n = self.state_count
        if n < 1:
            raise DfaError("an automaton needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise DfaError(f"repeated symbols in alphabet {list(self.alphabet)}")
        if not 0 <= self.initial < n:
            raise DfaError(f"initial state {self.initial} is not a state")
        if any(not 0 <= q < n for q in self.accepting):
            raise DfaError(f"accepting states {sorted(self.accepting)} are not all states")
        if len(self.transition) != n or any(len(row) != len(self.alphabet) for row in self.transition):
            raise DfaError("transition function is not total")
        if any(not 0 <= q < n for row in self.transition for q in row):
            raise DfaError("transition leads outside the state set")

    @classmethod
    def from_edges(
        cls,
        state_count: int,
        alphabet: Sequence[str],
        edges: Mapping[tuple[int, str], int],
        initial: int,
        accepting: Iterable[int],
    ) -> "Dfa":
        rows = []
        for q in range(state_count):
            row = []
            for a in alphabet:
                if (q, a) not in edges:
                    raise DfaError(f"no transition from state {q} on {a!r}")
                row.append(edges[(q, a)])
            rows.append(tuple(row))
        unknown = {a for _, a in edges} - set(alphabet)
        if unknown:
            raise DfaError(f"transitions use symbols outside the alphabet: {sorted(unknown)}")
        return cls(state_count, tuple(alphabet), tuple(rows), initial, frozenset(accepting))

    def step(self, q: int, symbol: str) -> int:
        return self.transition[q][self.alphabet.index(symbol)]

    def accepts(self, word: Iterable[str]) -> bool:
        q = self.initial
        for symbol in word:
            q = self.step(q, symbol)
        return q in self.accepting


def _reachable(dfa: Dfa) -> list[int]:
    order = [dfa.initial]
    seen = {dfa.initial}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for r in dfa.transition[q]:
            if r not in seen:
                seen.add(r)
                order.append(r)
                queue.append(r)
    return order


def minimize(dfa: Dfa) -> Dfa:
    """
    Drop unreachable states, then refine the accepting/rejecting split by
    successor blocks until it is stable (Moore). States of the result are
    numbered by first appearance in breadth-first order, so the initial
    state is 0.
    """
    states = _reachable(dfa)
    block = {q: int(q in dfa.accepting) for q in states}
    count = len(set(block.values()))
    while True:
        signatures: dict[tuple, int] = {}
        refined = {}
        for q in states:
            sig = (block[q], tuple(block[r] for r in dfa.transition[q]))
            refined[q] = signatures.setdefault(sig, len(signatures))
        block = refined
        if len(signatures) == count:
            break
        count = len(signatures)

    # renumber by breadth-first first appearance
    renumber: dict[int, int] = {}
    for q in states:
        renumber.setdefault(block[q], len(renumber))
    rows: dict[int, tuple[int, ...]] = {}
    for q in states:
        rows.setdefault(renumber[block[q]], tuple(renumber[block[r]] for r in dfa.transition[q]))
    minimal = Dfa(
        state_count=len(renumber),
        alphabet=dfa.alphabet,
        transition=tuple(rows[i] for i in range(len(renumber))),
        initial=renumber[block[dfa.initial]],
        accepting=frozenset(renumber[block[q]] for q in states if q in dfa.accepting),
    )
    logger.debug("minimized %d states to %d", dfa.state_count, minimal.state_count)
    return minimal


def syntactic_monoid(dfa: Dfa, *, closure_cap: int = DEFAULT_CLOSURE_CAP) -> FiniteSemigroup:
    """
    Transition monoid of the minimal automaton. The empty word's action (the
    identity, labelled "1") is element 0 unless a letter acts the same way;
    other elements are labelled by the shortest word reaching them.
    """
    if not dfa.alphabet:
        raise EmptyAlphabet()
    m = minimize(dfa)
    identity = tuple(range(m.state_count))
    letters = [tuple(m.transition[q][i] for q in range(m.state_count)) for i in range(len(m.alphabet))]
    generators = [identity]
    names = ["1"]
    for action, symbol in zip(letters, m.alphabet):
        if action not in generators:
            generators.append(action)
            names.append(symbol)
    return generate_from_transformations(m.state_count, generators, names=names, closure_cap=closure_cap)


def _example(alphabet: Sequence[str], rows: Sequence[Sequence[int]], accepting: Iterable[int]) -> Dfa:
    return Dfa(len(rows), tuple(alphabet), tuple(tuple(r) for r in rows), 0, frozenset(accepting))


EXAMPLE_DFAS = {
    "a*": _example("a", [[0]], [0]),
    "(aa)*": _example("a", [[1], [0]], [0]),
    "ends-in-b": _example("ab", [[0, 1], [0, 1]], [1]),
    # (ab)* over {a, b}: its syntactic monoid is B2 with an identity
    "(ab)*": _example("ab", [[1, 2], [2, 0], [2, 2]], [0]),
}
