"""Shared test helpers: independent acceptance oracle, brute-force word
enumeration, and seeded random generators for automata and rewriting systems.
"""
import itertools
import random

import pytest

from wordshift.automata import EPSILON, Dfa, Nfa
from wordshift.rewriting import RewritingSystem


def w(text):
    """Word from a string of one-character atoms."""
    return tuple(text)


def all_words(alphabet, max_len):
    """Every word up to max_len, length-then-lex in the given order."""
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def oracle_accepts(nfa, word):
    """Recursive-descent acceptance, independent of the subset simulation."""
    word = tuple(word)
    moves = {}
    eps = {}
    for (src, label, dst) in nfa.transitions:
        if label is EPSILON:
            eps.setdefault(src, []).append(dst)
        else:
            moves.setdefault((src, label), []).append(dst)
    dead = set()

    def walk(state, pos):
        if (state, pos) in dead:
            return False
        dead.add((state, pos))
        if pos == len(word) and state in nfa.finals:
            return True
        if pos < len(word):
            for dst in moves.get((state, word[pos]), ()):
                if walk(dst, pos + 1):
                    return True
        for dst in eps.get(state, ()):
            if walk(dst, pos):
                return True
        return False

    return any(walk(q, 0) for q in nfa.start)


def language(automaton, max_len):
    """Accepted words up to max_len via direct membership runs."""
    return {word for word in all_words(automaton.alphabet, max_len)
            if automaton.accepts(word)}


def rand_nfa(rng, n_states, alphabet, edge_p=0.25, eps_p=0.06):
    transitions = set()
    for src in range(n_states):
        for symbol in alphabet:
            for dst in range(n_states):
                if rng.random() < edge_p:
                    transitions.add((src, symbol, dst))
        for dst in range(n_states):
            if rng.random() < eps_p:
                transitions.add((src, EPSILON, dst))
    finals = {q for q in range(n_states) if rng.random() < 0.4}
    return Nfa(alphabet, range(n_states), {0}, finals, transitions)


def rand_dfa(rng, n_states, alphabet, final_p=0.4):
    delta = {}
    for q in range(n_states):
        for symbol in alphabet:
            delta[(q, symbol)] = rng.randrange(n_states)
    finals = {q for q in range(n_states) if rng.random() < final_p}
    return Dfa(alphabet, range(n_states), 0, finals, delta)


def rand_system(rng, alphabet=("a", "b"), max_rules=3, max_side=2):
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        length = rng.randint(1, max_side)
        lhs = tuple(rng.choice(alphabet) for _ in range(length))
        rhs = tuple(rng.choice(alphabet) for _ in range(length))
        rules.append((lhs, rhs))
    return RewritingSystem(alphabet, rules)


@pytest.fixture
def rng():
    return random.Random(0x5EED)
