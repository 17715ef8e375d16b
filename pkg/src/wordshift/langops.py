"""Regular-language operators: per-length lexicographic minima, conjugate
closure, and the completion language used by the distinct-conjugates
procedure.
"""
from __future__ import annotations

from collections import deque

from .automata import EPSILON, Dfa, Nfa, Word, complement, product
from .words import primitive_root


def lexleast(m: Dfa) -> Dfa:
    """Keep, for each length, the lexicographically least accepted word.

    Product states (q, S): q tracks the run of the word read so far, S the
    set of states reachable by strictly smaller words of the same length.
    A smaller word stays smaller whatever follows, so on symbol a the S
    component steps by every symbol and picks up delta(q, b) for each b < a;
    accept iff q is final and S contains no final state.  Only reachable
    (q, S) pairs are materialized.
    """
    start = (m.start, frozenset())
    ids = {start: 0}
    order = [start]
    delta = {}
    queue = deque([start])
    while queue:
        q, smaller = queue.popleft()
        src = ids[(q, smaller)]
        below = []
        for symbol in m.alphabet:
            stepped = frozenset(m.delta[(s, sigma)]
                                for s in smaller for sigma in m.alphabet) | \
                frozenset(m.delta[(q, b)] for b in below)
            nxt = (m.delta[(q, symbol)], stepped)
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            delta[(src, symbol)] = ids[nxt]
            below.append(symbol)
    finals = {
        ids[(q, smaller)]
        for (q, smaller) in order
        if q in m.finals and not (smaller & m.finals)
    }
    return Dfa(m.alphabet, range(len(order)), 0, finals, delta,
               meta={"origin": {i: p for i, p in enumerate(order)}})


def cyc(m: Dfa) -> Nfa:
    """Closure of L(m) under cyclic shifts: accepts vu whenever uv is accepted.

    Nondeterministically guess the pivot state q reached by u; phase 1 runs v
    from q to a final state, then a spontaneous move restarts at the real
    start state, and phase 2 runs u back to the guessed q.  States are
    (pivot, current, phase) triples, reachable ones only.  The empty word is
    accepted exactly when m accepts it.
    """
    ids = {}
    order = []
    transitions = set()

    def intern(state):
        if state not in ids:
            ids[state] = len(order)
            order.append(state)
            queue.append(state)
        return ids[state]

    queue = deque()
    starts = set()
    for pivot in sorted(m.states):
        starts.add(intern((pivot, pivot, 1)))
    while queue:
        state = queue.popleft()
        pivot, cur, phase = state
        src = ids[state]
        for symbol in m.alphabet:
            transitions.add((src, symbol, intern((pivot, m.delta[(cur, symbol)], phase))))
        if phase == 1 and cur in m.finals:
            transitions.add((src, EPSILON, intern((pivot, m.start, 2))))
    finals = {ids[(pivot, cur, phase)] for (pivot, cur, phase) in order
              if phase == 2 and cur == pivot}
    return Nfa(m.alphabet, range(len(order)), starts, finals, transitions,
               meta={"origin": {i: s for i, s in enumerate(order)}})


def _root_star_dfa(alphabet, root: Word) -> Dfa:
    # Complete DFA for root*, with a dead state for any deviation.
    n = len(root)
    dead = n
    delta = {}
    for i in range(n):
        for symbol in alphabet:
            delta[(i, symbol)] = ((i + 1) % n) if symbol == root[i] else dead
    for symbol in alphabet:
        delta[(dead, symbol)] = dead
    return Dfa(alphabet, range(n + 1), 0, {0}, delta)


def distinct_conjugate_completions(m: Dfa, x: Word) -> Dfa:
    """Language of y with xy and yx both accepted and xy != yx.

    Intersection of three machines: m with its start advanced over x, m with
    finals redefined to the states that reach a final via x, and the
    complement of t* for t the primitive root of x (commuting with x means
    being a power of its root, so the complement enforces xy != yx).
    """
    x = tuple(x)
    if not x:
        raise ValueError("x must be nonempty")
    for symbol in x:
        if symbol not in m._index:
            raise ValueError(f"symbol {symbol!r} not in the automaton's alphabet")
    after_x = Dfa(m.alphabet, m.states, m.run(m.start, x), m.finals, m.delta)
    before_x = Dfa(m.alphabet, m.states, m.start,
                   {q for q in m.states if m.run(q, x) in m.finals}, m.delta)
    root, _ = primitive_root(x)
    non_commuting = complement(_root_star_dfa(m.alphabet, root))
    return product(product(after_x, before_x, "intersect"), non_commuting, "intersect")
