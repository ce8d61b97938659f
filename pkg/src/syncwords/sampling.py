"""Seeded random automaton instances for experiments and cross-checks."""

from __future__ import annotations

import random
import string

from .automata import (Alphabet, Automaton, DFA, NFA, PFA, Pair, augmenting_pairs)
from .search import FOUND, shortest_careful_reset, shortest_subset_reset


def _letters(count: int) -> tuple[str, ...]:
    return tuple(string.ascii_lowercase[:count])


def random_dfa(rng: random.Random, n: int, letters: int) -> Automaton:
    delta = tuple(
        tuple(frozenset((rng.randrange(n),)) for _ in range(letters))
        for _ in range(n)
    )
    return Automaton(DFA, n, Alphabet(_letters(letters)), delta)


def random_pfa(rng: random.Random, n: int, letters: int,
               defined: float = 0.85) -> Automaton:
    delta = tuple(
        tuple(
            frozenset((rng.randrange(n),)) if rng.random() < defined else frozenset()
            for _ in range(letters)
        )
        for _ in range(n)
    )
    return Automaton(PFA, n, Alphabet(_letters(letters)), delta)


def random_nfa(rng: random.Random, n: int, letters: int,
               density: float = 0.3) -> Automaton:
    delta = tuple(
        tuple(
            frozenset(t for t in range(n) if rng.random() < density)
            for _ in range(letters)
        )
        for _ in range(n)
    )
    return Automaton(NFA, n, Alphabet(_letters(letters)), delta)


def random_subset(rng: random.Random, n: int, min_size: int = 2) -> frozenset[int]:
    size = rng.randint(min(min_size, n), n)
    return frozenset(rng.sample(range(n), size))


def random_synchronizable_subset_dfa(rng: random.Random, n: int, letters: int,
                                     ) -> tuple[Automaton, frozenset[int]]:
    """A dfa with a synchronizable subset of at least two states."""
    while True:
        a = random_dfa(rng, n, letters)
        s = random_subset(rng, n)
        if shortest_subset_reset(a, s).found:
            return a, s


def random_careful_subset_pfa(rng: random.Random, n: int, letters: int,
                              ) -> tuple[Automaton, frozenset[int]]:
    """A pfa with a carefully synchronizable subset of at least two states."""
    while True:
        a = random_pfa(rng, n, letters)
        s = random_subset(rng, n)
        if shortest_subset_reset(a, s).found:
            return a, s


def random_carefully_synchronizing_pfa(rng: random.Random, n: int,
                                       letters: int) -> Automaton:
    """A pfa whose whole state set has a careful reset word."""
    while True:
        a = random_pfa(rng, n, letters)
        if shortest_careful_reset(a).status == FOUND:
            return a


def random_connectable_pairs(rng: random.Random, a: Automaton,
                             min_arcs: int = 0) -> list[Pair]:
    """Arcs making the automaton strongly connected, padded to min_arcs.

    Extra arcs keep the augmented graph strongly connected, so the result
    is always a valid witness for the class of automata connectable with
    len(result) arcs.
    """
    pairs = augmenting_pairs(a)
    while len(pairs) < min_arcs:
        pairs.append((rng.randrange(a.n), rng.randrange(a.n)))
    return pairs
