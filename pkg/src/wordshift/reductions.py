"""Constructive reductions between rewriting reachability and automaton
shift acceptance, plus digit renamings and the binary block recoding.

The central construction turns a length-preserving rewriting system into a
pair-alphabet automaton whose accepted words of shape (x shifted against
itself by a block of a fresh padding letter) encode entire derivations: one
track carries each derivation word, the other the previous one, separated by
a fresh delimiter, and a single-step language ties consecutive words
together.  Everything here is a pure construction; the searches are bounded
and can only answer yes-with-witness or unknown.
"""
from __future__ import annotations

from collections import deque
from typing import Optional

from .automata import (Atom, Nfa, Word, check_atom, co_reachable, determinize,
                       is_empty, pair_alphabet, product, relabel)
from .outcome import DecisionOutcome, unknown, yes
from .regex import alt, lit, one_of, plus, regex_assemble, seq, star
from .rewriting import RewritingSystem
from .words import convolve


class ShiftInstance:
    """An automaton over the pair alphabet of gamma plus a padding letter c.

    The alphabet of the automaton must be exactly the pair alphabet of
    gamma + (c,), in that canonical product order; the constructor reorders a
    matching alphabet if needed.
    """

    __slots__ = ("gamma", "c", "automaton")

    def __init__(self, gamma, c: Atom, automaton: Nfa):
        self.gamma = tuple(check_atom(g) for g in gamma)
        self.c = check_atom(c)
        if self.c in self.gamma:
            raise ValueError(f"padding letter {c!r} must not be in gamma")
        canonical = pair_alphabet(self.gamma + (self.c,))
        if set(automaton.alphabet) != set(canonical):
            raise ValueError("automaton alphabet is not the pair alphabet of gamma + c")
        if automaton.alphabet != canonical:
            automaton = Nfa(canonical, automaton.states, automaton.start,
                            automaton.finals, automaton.transitions)
        self.automaton = automaton

    def __repr__(self):
        return f"ShiftInstance(gamma={self.gamma!r}, c={self.c!r}, {self.automaton!r})"


class Morphism:
    """A map from atoms to words, applied letter by letter."""

    def __init__(self, images: dict):
        self.images = {check_atom(k): tuple(v) for k, v in images.items()}
        for atom, image in self.images.items():
            if not image:
                raise ValueError(f"image of {atom!r} is empty")

    def __getitem__(self, atom: Atom) -> Word:
        return self.images[atom]

    def apply(self, word) -> Word:
        out = []
        for atom in word:
            out.extend(self.images[atom])
        return tuple(out)

    def image_length(self) -> int:
        """Common image length; raises if the images are not length-uniform."""
        lengths = {len(v) for v in self.images.values()}
        if len(lengths) != 1:
            raise ValueError("images are not length-uniform")
        return lengths.pop()


def block_morphism(symbols, c: Atom) -> Morphism:
    """Binary block images: the i-th symbol maps to 1^i 0^(m-i) 1 and the
    padding letter to 0^(m+1), where m is the number of symbols.

    Every symbol image starts and ends with a 1 while the padding image is
    all zeros, so maximal zero runs can only come from padding.
    """
    symbols = tuple(symbols)
    m = len(symbols)
    images = {c: ("0",) * (m + 1)}
    for i, atom in enumerate(symbols, start=1):
        if atom in images:
            raise ValueError(f"duplicate atom {atom!r}")
        images[atom] = ("1",) * i + ("0",) * (m - i) + ("1",)
    return Morphism(images)


def fresh_atom(taken, prefix: str = "_d") -> Atom:
    """First atom of the form prefix0, prefix1, ... not already taken."""
    taken = set(taken)
    i = 0
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def diagonal_pairs(symbols) -> tuple:
    """The pair symbols (e, e) for each e, in the given order."""
    return tuple((e, e) for e in symbols)


def _one_step_regex(s: RewritingSystem, encode=None):
    # Diagonal* rule-convolution Diagonal*, one convolution (right column
    # over left column) per rule.  ``encode`` optionally maps each atom to a
    # word before convolving.
    if encode is None:
        encode = tuple
    diag = alt(*(lit(convolve(encode((e,)), encode((e,)))) for e in s.alphabet))
    rules = alt(*(lit(convolve(encode(r), encode(l))) for (l, r) in s.rules))
    return seq(star(diag), rules, star(diag))


def one_step_language(s: RewritingSystem, base=None) -> Nfa:
    """Automaton for the convolutions (v over u) with u rewriting to v in one
    step.  ``base`` widens the pair alphabet; it defaults to the system's own
    alphabet."""
    base = tuple(base) if base is not None else s.alphabet
    return regex_assemble(_one_step_regex(s), pair_alphabet(base))


def rewrite_to_shift(s: RewritingSystem, a: Atom, b: Atom) -> ShiftInstance:
    """Encode "a^(n-1) rewrites to b^(n-1)" as shift acceptance.

    gamma extends the system's alphabet with a fresh delimiter d; the
    automaton accepts exactly the words

        (d over c) (a over c)^+ (d over d)
        (one-step-block (d over d))* (c over b)^+ (c over d)

    whose shifted-by-c^n fixed points spell out derivations from a-blocks to
    b-blocks.
    """
    if a not in s.alphabet or b not in s.alphabet:
        raise ValueError("a and b must be alphabet atoms")
    d = fresh_atom(set(s.alphabet) | {a, b, "c"})
    gamma = s.alphabet + (d,)
    c = "c" if "c" not in set(gamma) else fresh_atom(set(gamma) | {a, b}, "_c")
    expr = seq(
        lit([(d, c)]),
        plus(one_of((a, c))),
        lit([(d, d)]),
        star(seq(_one_step_regex(s), lit([(d, d)]))),
        plus(one_of((c, b))),
        lit([(c, d)]),
    )
    automaton = regex_assemble(expr, pair_alphabet(gamma + (c,)))
    return ShiftInstance(gamma, c, automaton)


def shift_search_at(inst: ShiftInstance, n: int,
                    max_x_len: Optional[int] = None) -> Optional[Word]:
    """Least x (length-then-lex over gamma) with x c^n x c^n convolved into
    the instance's language, or None.

    Walks the product of the determinized automaton with a window of the last
    n letters, which is exactly the set of second-track letters still owed.
    With no length cap the walk saturates the finite product space, so None
    is then definitive for this n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    d = determinize(inst.automaton)
    live = co_reachable(d.to_nfa())
    c = inst.c

    def completion_accepts(state, window) -> bool:
        for _ in range(n - len(window)):
            state = d.delta[(state, (c, c))]
        for owed in window:
            state = d.delta[(state, (c, owed))]
        return state in d.finals

    start = (d.start, ())
    if completion_accepts(*start):
        return ()
    seen = {start}
    queue = deque([((), start)])
    while queue:
        x, (state, window) = queue.popleft()
        if max_x_len is not None and len(x) >= max_x_len:
            continue
        for g in inst.gamma:
            fed = (g, c) if len(window) < n else (g, window[0])
            nxt_state = d.delta[(state, fed)]
            if nxt_state not in live:
                continue
            nxt_window = window + (g,) if len(window) < n else window[1:] + (g,)
            nxt = (nxt_state, nxt_window)
            if nxt in seen:
                continue
            seen.add(nxt)
            if completion_accepts(*nxt):
                return x + (g,)
            queue.append((x + (g,), nxt))
    return None


def shift_search(inst: ShiftInstance, max_len: int) -> DecisionOutcome:
    """Bounded search for a witness (x, n) with |x| <= max_len and
    1 <= n <= max_len; yes or unknown, never no.

    The witness is the length-then-lex least x over all n, with the smallest
    n for that x, so output is reproducible.
    """
    best = None
    for n in range(1, max_len + 1):
        x = shift_search_at(inst, n, max_x_len=max_len)
        if x is None:
            continue
        key = (len(x), tuple(inst.gamma.index(g) for g in x), n)
        if best is None or key < best[0]:
            best = (key, x, n)
    if best is None:
        return unknown(bound=max_len)
    _, x, n = best
    witness_word = convolve(x + (inst.c,) * n, (inst.c,) * n + x)
    assert inst.automaton.accepts(witness_word)
    return yes(x=x, n=n, word=witness_word)


class PowerInstance:
    """A digit-renamed shift instance: base k and the renamed automaton."""

    __slots__ = ("k", "automaton", "digit_of")

    def __init__(self, k: int, automaton: Nfa, digit_of: dict):
        self.k = k
        self.automaton = automaton
        self.digit_of = dict(digit_of)

    def __repr__(self):
        return f"PowerInstance(k={self.k}, {self.automaton!r})"


def shift_to_power(inst: ShiftInstance, digit_cap: int = 8) -> PowerInstance:
    """Rename gamma to the digits 1..|gamma| and c to 0; k is |gamma| + 1.

    The renaming is a bijection on symbols, so acceptance is preserved
    verbatim.  ``digit_cap`` bounds |gamma| purely as a guard; raise it for
    wider alphabets.
    """
    ell = len(inst.gamma)
    if ell > digit_cap:
        raise ValueError(f"gamma has {ell} symbols, above digit_cap={digit_cap}; "
                         "pass a larger digit_cap to allow this")
    digit_of = {inst.c: "0"}
    for i, g in enumerate(inst.gamma, start=1):
        digit_of[g] = str(i)
    pair_map = {(u, v): (digit_of[u], digit_of[v])
                for (u, v) in inst.automaton.alphabet}
    digits = tuple(str(i) for i in range(ell + 1))
    automaton = relabel(inst.automaton, pair_map, alphabet=pair_alphabet(digits))
    return PowerInstance(ell + 1, automaton, digit_of)


def _binary_pieces(s: RewritingSystem, a: Atom, b: Atom):
    if a not in s.alphabet or b not in s.alphabet:
        raise ValueError("a and b must be alphabet atoms")
    d = fresh_atom(set(s.alphabet) | {a, b, "c"})
    c = "c" if "c" not in set(s.alphabet) | {d} else \
        fresh_atom(set(s.alphabet) | {d, a, b}, "_c")
    # The delimiter joins the enumeration, so every block (including the
    # padding image) shares one uniform length and stays uniquely decodable.
    phi = block_morphism(s.alphabet + (d,), c)
    return phi, d, c


def binary_morphism(s: RewritingSystem, a: Atom, b: Atom) -> Morphism:
    """The block morphism actually used by :func:`recode_binary`, covering
    the system's alphabet, the fresh delimiter and the padding letter."""
    phi, _d, _c = _binary_pieces(s, a, b)
    return phi


def binary_one_step_language(s: RewritingSystem, a: Atom, b: Atom) -> Nfa:
    """Binary-coded analogue of :func:`one_step_language`, over {0,1} pairs."""
    phi, _d, _c = _binary_pieces(s, a, b)
    return regex_assemble(_one_step_regex(s, encode=phi.apply),
                          pair_alphabet(("1", "0")))


def recode_binary(s: RewritingSystem, a: Atom, b: Atom) -> ShiftInstance:
    """Binary-coded variant of :func:`rewrite_to_shift` over the pair
    alphabet of {0,1}, for use with the fixed-base power search at k = 2.

    Every atom of the unrecoded construction is replaced by its block image;
    blocks for real symbols are bordered by 1s while the padding block is all
    zeros, so zero runs on either track can only come from padding.
    """
    phi, d, c = _binary_pieces(s, a, b)
    enc = phi.apply
    expr = seq(
        lit(convolve(enc((d,)), enc((c,)))),
        plus(lit(convolve(enc((a,)), enc((c,))))),
        lit(convolve(enc((d,)), enc((d,)))),
        star(seq(_one_step_regex(s, encode=enc),
                 lit(convolve(enc((d,)), enc((d,)))))),
        plus(lit(convolve(enc((c,)), enc((b,))))),
        lit(convolve(enc((c,)), enc((d,)))),
    )
    automaton = regex_assemble(expr, pair_alphabet(("1", "0")))
    return ShiftInstance(("1",), "0", automaton)


def _projection_constraint_dfa(alphabet, gamma, c: Atom):
    # First track must be gamma* c+, second track c+ gamma*; built as one
    # small product of two three-phase machines plus a shared dead state.
    from .automata import Dfa
    states = {}
    order = []

    def intern(p):
        if p not in states:
            states[p] = len(order)
            order.append(p)
        return states[p]

    dead = intern("dead")
    start = intern((0, 0))
    delta = {}
    gamma_set = set(gamma)

    def step_first(phase, atom):
        if phase == 0:
            return 0 if atom in gamma_set else 1 if atom == c else None
        return 1 if atom == c else None

    def step_second(phase, atom):
        if phase == 0:
            return 1 if atom == c else None
        if phase == 1:
            return 1 if atom == c else 2 if atom in gamma_set else None
        return 2 if atom in gamma_set else None

    pending = deque([(0, 0)])
    seen = {(0, 0)}
    while pending:
        p = pending.popleft()
        for (u, v) in alphabet:
            f = step_first(p[0], u)
            g = step_second(p[1], v)
            nxt = "dead" if f is None or g is None else (f, g)
            if nxt != "dead" and nxt not in seen:
                seen.add(nxt)
                pending.append(nxt)
            delta[(intern(p), (u, v))] = intern(nxt)
    for (u, v) in alphabet:
        delta[(dead, (u, v))] = dead
    finals = {states[p] for p in order
              if p != "dead" and p[0] == 1 and p[1] in (1, 2)}
    return Dfa(alphabet, range(len(order)), start, finals, delta)


def general_shift_restrict(inst: ShiftInstance):
    """Diagonal pre-check plus restriction to single-padding-block words.

    Returns (diagonal_hit, restricted): diagonal_hit reports whether the
    instance accepts some x convolved with itself over gamma, and restricted
    is the intersection with the words whose first track lies in gamma* c+
    and whose second track lies in c+ gamma*.
    """
    from .automata import Dfa
    d = determinize(inst.automaton)
    alphabet = d.alphabet
    gamma_set = set(inst.gamma)
    diag_delta = {}
    for (u, v) in alphabet:
        diag_delta[(0, (u, v))] = 0 if (u == v and u in gamma_set) else 1
        diag_delta[(1, (u, v))] = 1
    diag = Dfa(alphabet, (0, 1), 0, {0}, diag_delta)
    diagonal_hit = not is_empty(product(d, diag, "intersect"))
    restrictor = _projection_constraint_dfa(alphabet, inst.gamma, inst.c)
    restricted = product(d, restrictor, "intersect").to_nfa()
    return diagonal_hit, restricted
