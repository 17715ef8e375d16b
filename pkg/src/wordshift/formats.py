"""Line-oriented text formats for automata, rewriting systems and machines.

All three formats are `key: value` lines with `#` comments.  Automata use
`@` for spontaneous transitions and `x|y` for pair symbols.  Printing is
canonical (sorted states, declared alphabet order, sorted transition lines),
so printing a parsed canonical file reproduces it byte for byte.
"""
from __future__ import annotations

from typing import Optional

from .automata import EPSILON, Dfa, Nfa, Symbol, Word
from .rewriting import TuringMachine, RewritingSystem


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _keyed(line: str, lineno: int, source: str):
    if ":" not in line:
        raise ParseError("expected 'key: value'", lineno, source)
    key, _, value = line.partition(":")
    return key.strip(), value.strip()


def parse_symbol(token: str) -> Symbol:
    if "|" in token:
        parts = token.split("|")
        if len(parts) != 2 or not all(parts):
            raise ValueError(f"malformed pair symbol {token!r}")
        return (parts[0], parts[1])
    return token


def format_symbol(symbol: Symbol) -> str:
    if isinstance(symbol, tuple):
        return f"{symbol[0]}|{symbol[1]}"
    return symbol


def parse_word(text: str) -> Word:
    """Words on the command line: one-character atoms concatenate; multi
    character atoms and pair symbols are comma-separated."""
    if not text:
        return ()
    if "," in text:
        return tuple(parse_symbol(tok) for tok in text.split(","))
    if "|" in text:
        return (parse_symbol(text),)
    return tuple(text)


def format_word(word: Word) -> str:
    symbols = tuple(word)
    if not symbols:
        return ""
    plain = all(isinstance(s, str) and len(s) == 1 for s in symbols)
    if plain:
        return "".join(symbols)
    return ",".join(format_symbol(s) for s in symbols)


def parse_automaton(text: str, source: str = "<input>") -> Nfa:
    """Parse the automaton format.

    Pair symbols may be declared on the alphabet line as ``x|y`` tokens; a
    pair used only on a transition line is accepted too, provided both of its
    components are declared atoms, and joins the alphabet in first-use order.
    """
    alphabet = []
    states = []
    start = []
    finals = []
    transitions = []
    declared = set()
    for lineno, line in _content_lines(text):
        key, value = _keyed(line, lineno, source)
        tokens = value.split()
        try:
            if key == "alphabet":
                for tok in tokens:
                    sym = parse_symbol(tok)
                    if sym in declared:
                        raise ValueError(f"duplicate alphabet symbol {tok!r}")
                    declared.add(sym)
                    alphabet.append(sym)
            elif key == "states":
                states.extend(int(tok) for tok in tokens)
            elif key == "start":
                start.extend(int(tok) for tok in tokens)
            elif key == "finals":
                finals.extend(int(tok) for tok in tokens)
            elif key == "trans":
                if len(tokens) != 3:
                    raise ValueError("expected 'trans: src symbol dst'")
                src, label, dst = tokens
                if label == "@":
                    symbol = EPSILON
                else:
                    symbol = parse_symbol(label)
                    if symbol not in declared:
                        if (isinstance(symbol, tuple)
                                and symbol[0] in declared and symbol[1] in declared):
                            declared.add(symbol)
                            alphabet.append(symbol)
                        else:
                            raise ValueError(f"symbol {label!r} is not declared")
                transitions.append((int(src), symbol, int(dst)))
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ParseError(str(exc), lineno, source) from None
    try:
        return Nfa(alphabet, states, start, finals, transitions)
    except ValueError as exc:
        raise ParseError(str(exc), None, source) from None


def format_automaton(a, header=()) -> str:
    """Canonical text for an automaton; ``header`` lines become comments."""
    n = a.to_nfa() if isinstance(a, Dfa) else a
    lines = [f"# {h}" for h in header]
    lines.append("alphabet: " + " ".join(format_symbol(s) for s in n.alphabet))
    lines.append("states: " + " ".join(str(q) for q in sorted(n.states)))
    lines.append("start: " + " ".join(str(q) for q in sorted(n.start)))
    lines.append("finals: " + " ".join(str(q) for q in sorted(n.finals)))
    order = {s: i for i, s in enumerate(n.alphabet)}
    def trans_key(t):
        src, label, dst = t
        return (src, -1 if label is EPSILON else order[label], dst)
    for (src, label, dst) in sorted(n.transitions, key=trans_key):
        token = "@" if label is EPSILON else format_symbol(label)
        lines.append(f"trans: {src} {token} {dst}")
    return "\n".join(lines) + "\n"


def parse_rewriting(text: str, source: str = "<input>") -> RewritingSystem:
    alphabet = []
    seen = set()
    rules = []
    for lineno, line in _content_lines(text):
        key, value = _keyed(line, lineno, source)
        tokens = value.split()
        try:
            if key == "alphabet":
                for tok in tokens:
                    if tok in seen:
                        raise ValueError(f"duplicate alphabet atom {tok!r}")
                    seen.add(tok)
                    alphabet.append(tok)
            elif key == "rule":
                if "->" not in tokens:
                    raise ValueError("expected 'rule: lhs atoms -> rhs atoms'")
                cut = tokens.index("->")
                rules.append((tuple(tokens[:cut]), tuple(tokens[cut + 1:])))
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ParseError(str(exc), lineno, source) from None
    if not alphabet:
        # Infer the alphabet from the rules, in order of first appearance.
        for (l, r) in rules:
            for atom in l + r:
                if atom not in seen:
                    seen.add(atom)
                    alphabet.append(atom)
    try:
        return RewritingSystem(alphabet, rules)
    except ValueError as exc:
        raise ParseError(str(exc), None, source) from None


def format_rewriting(s: RewritingSystem, header=()) -> str:
    lines = [f"# {h}" for h in header]
    lines.append("alphabet: " + " ".join(s.alphabet))
    for (l, r) in s.rules:
        lines.append("rule: " + " ".join(l) + " -> " + " ".join(r))
    return "\n".join(lines) + "\n"


def parse_tm(text: str, source: str = "<input>") -> TuringMachine:
    fields = {"tm-states": None, "tm-input": None, "tm-tape": None,
              "tm-blank": None, "tm-start": None, "tm-final": None}
    delta: dict = {}
    for lineno, line in _content_lines(text):
        key, value = _keyed(line, lineno, source)
        tokens = value.split()
        try:
            if key == "tm-delta":
                if len(tokens) != 6 or tokens[2] != "->":
                    raise ValueError("expected 'tm-delta: state symbol -> state symbol L|R'")
                q, c, _, q2, d, direction = tokens
                delta.setdefault((q, c), []).append((q2, d, direction))
            elif key in fields:
                fields[key] = tokens
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ParseError(str(exc), lineno, source) from None
    missing = [k for k in ("tm-states", "tm-tape", "tm-blank", "tm-start", "tm-final")
               if fields[k] is None]
    if missing:
        raise ParseError(f"missing lines: {', '.join(missing)}", None, source)
    for single in ("tm-blank", "tm-start", "tm-final"):
        if len(fields[single]) != 1:
            raise ParseError(f"{single} must name exactly one token", None, source)
    try:
        return TuringMachine(
            states=fields["tm-states"],
            input_alphabet=fields["tm-input"] or (),
            tape_alphabet=fields["tm-tape"],
            delta=delta,
            start=fields["tm-start"][0],
            blank=fields["tm-blank"][0],
            final=fields["tm-final"][0],
        )
    except ValueError as exc:
        raise ParseError(str(exc), None, source) from None
