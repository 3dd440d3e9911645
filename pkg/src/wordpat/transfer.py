"""
Transfer-matrix counting with a weighted window automaton.

States are the words of length at most ``w`` (the longest pattern length
minus one); reading a letter moves to the trailing ``w`` letters and carries
the weight y^c, where c is the number of occurrences whose last letter is the
one just read.  Iterating the automaton N times yields the coefficients of
x^0 .. x^N of the bivariate generating function.
"""
from dataclasses import dataclass
from itertools import product

from .algebra import DEFAULT_ORDER, XSeries
from .oracle import GuardExceeded
from .pattern import _reduce_tuple, parse_pattern

DEFAULT_STATE_GUARD = 10 ** 6


@dataclass(frozen=True)
class WeightedAutomaton:
    k: int
    window: int
    states: tuple          # words of length 0..window; index 0 is the empty word
    next_state: tuple      # next_state[s][a - 1]
    weight: tuple          # weight[s][a - 1] = exponent of y on that step

    @property
    def index(self):
        return {s: i for i, s in enumerate(self.states)}

    def step(self, state, letter):
        """(next state, y-exponent) after reading ``letter`` in ``state``."""
        i = self.index[tuple(state)]
        return self.states[self.next_state[i][letter - 1]], self.weight[i][letter - 1]

    def run(self, word):
        """Total weight exponent of a word, i.e. its occurrence count."""
        s, total = 0, 0
        for a in word:
            total += self.weight[s][a - 1]
            s = self.next_state[s][a - 1]
        return total

    def transitions(self):
        for i, s in enumerate(self.states):
            for a in range(1, self.k + 1):
                yield s, a, self.states[self.next_state[i][a - 1]], self.weight[i][a - 1]


def _build(k, window, completed, guard):
    if k < 1:
        raise ValueError("alphabet size must be >= 1")
    if k ** window > guard:
        raise GuardExceeded(f"{k}^{window} window states exceeds the state guard {guard}")
    states = [()]
    for length in range(1, window + 1):
        states.extend(product(range(1, k + 1), repeat=length))
    index = {s: i for i, s in enumerate(states)}
    nxt, wt = [], []
    for s in states:
        row_n, row_w = [], []
        for a in range(1, k + 1):
            ext = s + (a,)
            row_w.append(completed(ext))
            row_n.append(index[ext[max(0, len(ext) - window):] if window else ()])
        nxt.append(tuple(row_n))
        wt.append(tuple(row_w))
    return WeightedAutomaton(k, window, tuple(states), tuple(nxt), tuple(wt))


def _subword_patterns(ps):
    if isinstance(ps, str) or hasattr(ps, "letters"):
        ps = [ps]
    ps = [parse_pattern(p) for p in ps]
    for p in ps:
        if not p.is_subword:
            raise ValueError(f"{p} is hyphenated; the automaton handles subword patterns only")
    if not ps:
        raise ValueError("need at least one pattern")
    return ps


def build_automaton(k, ps, guard=DEFAULT_STATE_GUARD):
    ps = _subword_patterns(ps)
    targets = [p.letters for p in ps]
    window = max(len(t) for t in targets) - 1

    def completed(ext):
        n = len(ext)
        return sum(1 for t in targets if len(t) <= n and _reduce_tuple(ext[n - len(t):]) == t)

    return _build(k, window, completed, guard)


def _iterate(aut, order):
    # vec[s] is a dense list of y-coefficients for words ending in state s
    vec = {0: [1]}
    out = [[1]]
    for _ in range(order):
        new = {}
        for s, poly in vec.items():
            for a in range(aut.k):
                t = aut.next_state[s][a]
                e = aut.weight[s][a]
                acc = new.get(t)
                if acc is None:
                    acc = new[t] = []
                need = len(poly) + e
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for r, c in enumerate(poly):
                    acc[r + e] += c
        vec = new
        total = []
        for poly in vec.values():
            if len(total) < len(poly):
                total.extend([0] * (len(poly) - len(total)))
            for r, c in enumerate(poly):
                total[r] += c
        out.append(total)
    return XSeries(out, order)


def distribution_series(k, ps, order=DEFAULT_ORDER, guard=DEFAULT_STATE_GUARD):
    """Truncated F(x, y; k) for a subword pattern or a set of them."""
    return _iterate(build_automaton(k, ps, guard), order)


def distribution(n, k, ps, guard=DEFAULT_STATE_GUARD):
    """Occurrence distribution over [k]^n as a list indexed by r."""
    return list(distribution_series(k, ps, n, guard)[n]) or [0]


def _literal_strings(strs, k):
    out = []
    for s in strs:
        t = tuple(int(c) for c in s) if isinstance(s, str) else tuple(s)
        if not t:
            raise ValueError("empty string in the avoidance set")
        if any(a < 1 or a > k for a in t):
            raise ValueError(f"string {s!r} uses a letter outside [1, {k}]")
        out.append(t)
    return out


def build_string_automaton(k, strs, guard=DEFAULT_STATE_GUARD):
    strs = _literal_strings(strs, k)
    window = max((len(s) for s in strs), default=1) - 1

    def completed(ext):
        n = len(ext)
        return sum(1 for s in strs if len(s) <= n and ext[n - len(s):] == s)

    return _build(k, window, completed, guard)


def avoid_strings_series(k, strs, order=DEFAULT_ORDER, guard=DEFAULT_STATE_GUARD):
    """
    Series in which y marks factor occurrences of literal strings; the y^0
    slice counts the words avoiding all of them.
    """
    return _iterate(build_string_automaton(k, strs, guard), order)
