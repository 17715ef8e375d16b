"""Tiny regular-expression builder compiled to epsilon-NFAs.

Just enough algebra to write the languages the constructions need verbatim:
symbol-set atoms, literal words, concatenation, union, star and plus.
Expressions are plain frozen dataclasses; ``regex_assemble`` compiles one to
an :class:`~wordshift.automata.Nfa` over a caller-supplied alphabet by the
usual inductive construction with spontaneous moves.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automata import EPSILON, Nfa


@dataclass(frozen=True)
class Regex:
    pass


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Never(Regex):
    """The empty language."""


@dataclass(frozen=True)
class OneOf(Regex):
    """A single symbol drawn from a finite set."""
    symbols: tuple


@dataclass(frozen=True)
class Literal(Regex):
    """A fixed word."""
    word: tuple


@dataclass(frozen=True)
class Concat(Regex):
    parts: tuple


@dataclass(frozen=True)
class Alt(Regex):
    parts: tuple


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


@dataclass(frozen=True)
class Plus(Regex):
    inner: Regex


epsilon = Epsilon()
never = Never()


def one_of(*symbols) -> Regex:
    return OneOf(tuple(symbols)) if symbols else never


def lit(word) -> Regex:
    return Literal(tuple(word))


def seq(*parts: Regex) -> Regex:
    return Concat(tuple(parts)) if parts else epsilon


def alt(*parts: Regex) -> Regex:
    return Alt(tuple(parts)) if parts else never


def star(inner: Regex) -> Regex:
    return Star(inner)


def plus(inner: Regex) -> Regex:
    return Plus(inner)


class _Builder:
    def __init__(self):
        self.transitions = set()
        self.count = 0

    def fresh(self) -> int:
        self.count += 1
        return self.count - 1

    def edge(self, src, label, dst):
        self.transitions.add((src, label, dst))

    def compile(self, expr: Regex):
        """Return (entry, exit) of a fragment recognizing expr."""
        entry, exit_ = self.fresh(), self.fresh()
        if isinstance(expr, Epsilon):
            self.edge(entry, EPSILON, exit_)
        elif isinstance(expr, Never):
            pass
        elif isinstance(expr, OneOf):
            for symbol in expr.symbols:
                self.edge(entry, symbol, exit_)
        elif isinstance(expr, Literal):
            cur = entry
            for symbol in expr.word:
                nxt = self.fresh()
                self.edge(cur, symbol, nxt)
                cur = nxt
            self.edge(cur, EPSILON, exit_)
        elif isinstance(expr, Concat):
            cur = entry
            for part in expr.parts:
                i, o = self.compile(part)
                self.edge(cur, EPSILON, i)
                cur = o
            self.edge(cur, EPSILON, exit_)
        elif isinstance(expr, Alt):
            for part in expr.parts:
                i, o = self.compile(part)
                self.edge(entry, EPSILON, i)
                self.edge(o, EPSILON, exit_)
        elif isinstance(expr, Star):
            i, o = self.compile(expr.inner)
            self.edge(entry, EPSILON, exit_)
            self.edge(entry, EPSILON, i)
            self.edge(o, EPSILON, exit_)
            self.edge(o, EPSILON, i)
        elif isinstance(expr, Plus):
            i, o = self.compile(expr.inner)
            self.edge(entry, EPSILON, i)
            self.edge(o, EPSILON, exit_)
            self.edge(o, EPSILON, i)
        else:
            raise TypeError(f"not a regex node: {expr!r}")
        return entry, exit_


def regex_assemble(expr: Regex, alphabet) -> Nfa:
    """Compile ``expr`` to an NFA whose alphabet is exactly ``alphabet``.

    Every symbol used by the expression must appear in the alphabet; the
    alphabet may be larger (the extra symbols simply never occur).
    """
    b = _Builder()
    entry, exit_ = b.compile(expr)
    return Nfa(alphabet, range(b.count), {entry}, {exit_}, b.transitions)
