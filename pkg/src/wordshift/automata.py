"""Finite automata over ordered alphabets of atoms and atom pairs.

A symbol is either an atom (a non-empty string without whitespace) or an
ordered pair of atoms; pair symbols carry the two tracks of a convolved word
and are written ``x|y`` in the text format.  Every automaton stores its
alphabet as a tuple, and that declaration order is the total order used by
every lexicographic operation (shortest-word tie breaks, lexleast, witness
ordering).  Automata are immutable once constructed; all operations here are
pure and return fresh values, so sharing across threads is safe.
"""
from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, Optional, Union

Atom = str
Symbol = Union[str, tuple]
Word = tuple

#: Transition label standing for a spontaneous move.
EPSILON = None

_FORBIDDEN_CHARS = set("|#")


def check_atom(atom: object) -> Atom:
    """Validate a plain atom and return it."""
    if not isinstance(atom, str) or not atom:
        raise ValueError(f"atom must be a non-empty string, got {atom!r}")
    if atom == "@":
        raise ValueError("'@' is reserved for epsilon in the text format")
    if any(ch.isspace() or ch in _FORBIDDEN_CHARS for ch in atom):
        raise ValueError(f"atom {atom!r} contains whitespace or a reserved character")
    return atom


def check_symbol(symbol: object) -> Symbol:
    """Validate an atom or pair symbol and return it."""
    if isinstance(symbol, tuple):
        if len(symbol) != 2:
            raise ValueError(f"pair symbol must have exactly two components: {symbol!r}")
        check_atom(symbol[0])
        check_atom(symbol[1])
        return symbol
    return check_atom(symbol)


def pair_alphabet(base: Iterable[Atom]) -> tuple:
    """All ordered pairs over ``base``, in product order of the base order."""
    atoms = tuple(check_atom(a) for a in base)
    if len(set(atoms)) != len(atoms):
        raise ValueError("base alphabet has duplicate atoms")
    return tuple(itertools.product(atoms, atoms))


def _check_alphabet(alphabet: Iterable[Symbol]) -> tuple:
    symbols = tuple(alphabet)
    for s in symbols:
        check_symbol(s)
    if len(set(symbols)) != len(symbols):
        raise ValueError("alphabet has duplicate symbols")
    return symbols


class Nfa:
    """Nondeterministic finite automaton, possibly with epsilon moves.

    ``transitions`` is a set of ``(state, label, state)`` triples where a
    label is an alphabet symbol or :data:`EPSILON`.  State ids are opaque
    integers; any provenance (subset contents, pair labels) lives in ``meta``
    and never affects the language.
    """

    __slots__ = ("alphabet", "states", "start", "finals", "transitions",
                 "meta", "_moves", "_eps", "_start_closure", "_index")

    def __init__(self, alphabet, states, start, finals, transitions, meta=None):
        self.alphabet = _check_alphabet(alphabet)
        self.states = frozenset(states)
        self.start = frozenset(start)
        self.finals = frozenset(finals)
        self.transitions = frozenset(transitions)
        self.meta = meta
        if not all(isinstance(q, int) for q in self.states):
            raise ValueError("state ids must be integers")
        if not self.start <= self.states:
            raise ValueError("start states not declared")
        if not self.finals <= self.states:
            raise ValueError("final states not declared")
        symbols = set(self.alphabet)
        moves: dict = {}
        eps: dict = {}
        for (src, label, dst) in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ValueError(f"transition {(src, label, dst)!r} uses an undeclared state")
            if label is EPSILON:
                eps.setdefault(src, set()).add(dst)
            elif label in symbols:
                moves.setdefault((src, label), set()).add(dst)
            else:
                raise ValueError(f"transition label {label!r} not in alphabet")
        self._moves = {k: frozenset(v) for k, v in moves.items()}
        self._eps = {k: frozenset(v) for k, v in eps.items()}
        self._index = {s: i for i, s in enumerate(self.alphabet)}
        self._start_closure = self.closure(self.start)

    def closure(self, subset: Iterable[int]) -> frozenset:
        """Epsilon closure of a set of states."""
        seen = set(subset)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for r in self._eps.get(q, ()):
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return frozenset(seen)

    def step(self, subset: frozenset, symbol: Symbol) -> frozenset:
        """One closed transition step on a closed subset."""
        out = set()
        for q in subset:
            out |= self._moves.get((q, symbol), frozenset())
        return self.closure(out)

    def accepts(self, word: Iterable[Symbol]) -> bool:
        current = self._start_closure
        for symbol in word:
            if symbol not in self._index:
                raise ValueError(f"symbol {symbol!r} not in alphabet")
            current = self.step(current, symbol)
            if not current:
                return False
        return bool(current & self.finals)

    def symbol_index(self, symbol: Symbol) -> int:
        return self._index[symbol]

    def __repr__(self):
        return (f"Nfa(states={len(self.states)}, alphabet={len(self.alphabet)}, "
                f"finals={len(self.finals)})")


class Dfa:
    """Complete deterministic finite automaton.

    ``delta`` must be a total function on states x alphabet; completeness is
    what makes :func:`complement` a plain final-flip.
    """

    __slots__ = ("alphabet", "states", "start", "finals", "delta", "meta", "_index")

    def __init__(self, alphabet, states, start, finals, delta, meta=None):
        self.alphabet = _check_alphabet(alphabet)
        self.states = frozenset(states)
        self.start = start
        self.finals = frozenset(finals)
        self.delta = dict(delta)
        self.meta = meta
        if not all(isinstance(q, int) for q in self.states):
            raise ValueError("state ids must be integers")
        if start not in self.states:
            raise ValueError("start state not declared")
        if not self.finals <= self.states:
            raise ValueError("final states not declared")
        for q in self.states:
            for s in self.alphabet:
                if (q, s) not in self.delta:
                    raise ValueError(f"delta is not total: missing ({q!r}, {s!r})")
                if self.delta[(q, s)] not in self.states:
                    raise ValueError(f"delta target {self.delta[(q, s)]!r} not declared")
        if len(self.delta) != len(self.states) * len(self.alphabet):
            extra = set(self.delta) - {(q, s) for q in self.states for s in self.alphabet}
            raise ValueError(f"delta has entries outside states x alphabet: {sorted(map(repr, extra))[:3]}")
        self._index = {s: i for i, s in enumerate(self.alphabet)}

    def run(self, state: int, word: Iterable[Symbol]) -> int:
        for symbol in word:
            state = self.delta[(state, symbol)]
        return state

    def accepts(self, word: Iterable[Symbol]) -> bool:
        for symbol in word:
            if symbol not in self._index:
                raise ValueError(f"symbol {symbol!r} not in alphabet")
        return self.run(self.start, word) in self.finals

    def symbol_index(self, symbol: Symbol) -> int:
        return self._index[symbol]

    def to_nfa(self) -> Nfa:
        transitions = {(q, s, r) for (q, s), r in self.delta.items()}
        return Nfa(self.alphabet, self.states, {self.start}, self.finals, transitions)

    def __repr__(self):
        return (f"Dfa(states={len(self.states)}, alphabet={len(self.alphabet)}, "
                f"finals={len(self.finals)})")


def determinize(n: Nfa) -> Dfa:
    """Subset construction; reachable subsets only, complete via the empty sink.

    Subset contents are kept in ``meta['origin']`` for debugging; they are
    never consulted by any operation.
    """
    start = n._start_closure
    ids: dict = {start: 0}
    order = [start]
    delta = {}
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        src = ids[subset]
        for symbol in n.alphabet:
            nxt = n.step(subset, symbol)
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            delta[(src, symbol)] = ids[nxt]
    finals = {ids[sub] for sub in order if sub & n.finals}
    return Dfa(n.alphabet, range(len(order)), 0, finals, delta,
               meta={"origin": {i: sub for i, sub in enumerate(order)}})


_MODES = {
    "intersect": lambda fa, fb: fa and fb,
    "union": lambda fa, fb: fa or fb,
    "difference": lambda fa, fb: fa and not fb,
}


def product(a: Dfa, b: Dfa, mode: str) -> Dfa:
    """Boolean combination of two complete DFAs over the same alphabet."""
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {sorted(_MODES)}, got {mode!r}")
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet!r} vs {b.alphabet!r}")
    combine = _MODES[mode]
    start = (a.start, b.start)
    ids = {start: 0}
    order = [start]
    delta = {}
    queue = deque([start])
    while queue:
        (qa, qb) = queue.popleft()
        src = ids[(qa, qb)]
        for symbol in a.alphabet:
            nxt = (a.delta[(qa, symbol)], b.delta[(qb, symbol)])
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            delta[(src, symbol)] = ids[nxt]
    finals = {ids[p] for p in order if combine(p[0] in a.finals, p[1] in b.finals)}
    return Dfa(a.alphabet, range(len(order)), 0, finals, delta,
               meta={"origin": {i: p for i, p in enumerate(order)}})


def complement(a: Dfa) -> Dfa:
    """Flip acceptance of every word; sound because DFAs here are complete."""
    return Dfa(a.alphabet, a.states, a.start, a.states - a.finals, a.delta)


def _as_nfa(a) -> Nfa:
    return a.to_nfa() if isinstance(a, Dfa) else a


def is_empty(a) -> bool:
    """True iff the automaton accepts no word.  Plain graph reachability."""
    n = _as_nfa(a)
    adj: dict = {}
    for (src, _label, dst) in n.transitions:
        adj.setdefault(src, set()).add(dst)
    seen = set(n._start_closure)
    todo = list(seen)
    while todo:
        q = todo.pop()
        if q in n.finals:
            return False
        for r in adj.get(q, ()):
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return True


def shortest_word(a) -> Optional[Word]:
    """A minimum-length accepted word, lexicographically least among those.

    Breadth-first search over closed subsets, expanding symbols in alphabet
    order, so the first accepting subset reached carries exactly the
    length-then-lex least accepted word.  Returns None on the empty language.
    """
    n = _as_nfa(a)
    start = n._start_closure
    if start & n.finals:
        return ()
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for symbol in n.alphabet:
            nxt = n.step(subset, symbol)
            if not nxt or nxt in parent:
                continue
            parent[nxt] = (subset, symbol)
            if nxt & n.finals:
                out = []
                cur = nxt
                while parent[cur] is not None:
                    cur, sym = parent[cur]
                    out.append(sym)
                return tuple(reversed(out))
            queue.append(nxt)
    return None


def is_subset(a: Dfa, b: Dfa):
    """Language inclusion test; on failure also returns a shortest word in a - b."""
    witness = shortest_word(product(a, b, "difference"))
    return (witness is None, witness)


def minimize(d: Dfa) -> Dfa:
    """Optional normalization: drop unreachable states, merge equivalent ones.

    Moore partition refinement.  Never required for correctness anywhere in
    this package; useful to compare construction sizes.
    """
    reach = {d.start}
    queue = deque([d.start])
    while queue:
        q = queue.popleft()
        for symbol in d.alphabet:
            r = d.delta[(q, symbol)]
            if r not in reach:
                reach.add(r)
                queue.append(r)
    block = {q: (q in d.finals) for q in reach}
    while True:
        signature = {
            q: (block[q],) + tuple(block[d.delta[(q, s)]] for s in d.alphabet)
            for q in reach
        }
        labels = {}
        for q in sorted(reach):
            labels.setdefault(signature[q], len(labels))
        new_block = {q: labels[signature[q]] for q in reach}
        if new_block == block:
            break
        block = new_block
    # Renumber blocks in BFS order from the start block for stable output.
    ids = {block[d.start]: 0}
    order = [d.start]
    delta = {}
    queue = deque([d.start])
    while queue:
        q = queue.popleft()
        src = ids[block[q]]
        for symbol in d.alphabet:
            r = d.delta[(q, symbol)]
            if block[r] not in ids:
                ids[block[r]] = len(ids)
                order.append(r)
                queue.append(r)
            delta[(src, symbol)] = ids[block[r]]
    finals = {ids[block[q]] for q in reach if q in d.finals}
    return Dfa(d.alphabet, range(len(ids)), 0, finals, delta)


def co_reachable(a) -> frozenset:
    """States from which some final state is reachable."""
    n = _as_nfa(a)
    back: dict = {}
    for (src, _label, dst) in n.transitions:
        back.setdefault(dst, set()).add(src)
    seen = set(n.finals)
    todo = list(seen)
    while todo:
        q = todo.pop()
        for r in back.get(q, ()):
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return frozenset(seen)


def accepted_words(a, max_len: int) -> Iterator[Word]:
    """Yield every accepted word of length <= max_len in length-then-lex order.

    Walks the live prefix tree of the automaton, so the cost is proportional
    to the number of live prefixes rather than |alphabet|^max_len.  Prefixes
    whose state set cannot reach a final state are pruned.
    """
    n = _as_nfa(a)
    live = co_reachable(n)
    level = [((), n._start_closure & live)]
    if not level[0][1]:
        return
    for length in range(max_len + 1):
        for word, subset in level:
            if subset & n.finals:
                yield word
        if length == max_len:
            return
        nxt = []
        for word, subset in level:
            for symbol in n.alphabet:
                stepped = n.step(subset, symbol) & live
                if stepped:
                    nxt.append((word + (symbol,), stepped))
        if not nxt:
            return
        level = nxt


def relabel(n: Nfa, mapping: dict, alphabet=None) -> Nfa:
    """Rename symbols through a bijective mapping, preserving the language shape.

    ``alphabet`` fixes the order of the result's alphabet; by default the
    source order is carried over through the mapping.
    """
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("symbol mapping is not injective")
    missing = [s for s in n.alphabet if s not in mapping]
    if missing:
        raise ValueError(f"mapping misses alphabet symbols: {missing[:3]!r}")
    new_alphabet = tuple(mapping[s] for s in n.alphabet) if alphabet is None else tuple(alphabet)
    if set(new_alphabet) != {mapping[s] for s in n.alphabet}:
        raise ValueError("provided alphabet order does not match the mapped symbols")
    transitions = {
        (src, EPSILON if label is EPSILON else mapping[label], dst)
        for (src, label, dst) in n.transitions
    }
    return Nfa(new_alphabet, n.states, n.start, n.finals, transitions)


def with_alphabet_order(a, order):
    """Same automaton with its alphabet tuple reordered (same symbol set)."""
    order = tuple(order)
    if set(order) != set(a.alphabet) or len(order) != len(a.alphabet):
        raise ValueError(f"order {order!r} is not a permutation of {a.alphabet!r}")
    if isinstance(a, Dfa):
        return Dfa(order, a.states, a.start, a.finals, a.delta, meta=a.meta)
    return Nfa(order, a.states, a.start, a.finals, a.transitions, meta=a.meta)
