"""
Brute-force ground truth: walk every word of [k]^n and count occurrences.

This engine is deliberately naive.  It is the reference the automaton and the
closed forms are checked against, so window matching here compares every pair
of positions directly instead of going through ``pattern.reduce``.
"""
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .pattern import count_occurrences, parse_pattern

DEFAULT_GUARD = 10 ** 8


class GuardExceeded(RuntimeError):
    """A computation would exceed its configured size limit."""


def enumeration_guard():
    """Largest k**n the oracle will enumerate (env ``WORDPAT_GUARD``)."""
    raw = os.environ.get("WORDPAT_GUARD")
    return int(raw) if raw else DEFAULT_GUARD


def check_guard(n, k, guard=None):
    guard = enumeration_guard() if guard is None else guard
    if k ** n > guard:
        raise GuardExceeded(f"{k}^{n} words exceeds the enumeration guard {guard}")


@dataclass(frozen=True)
class DistributionVector:
    n: int
    k: int
    counts: tuple

    def __post_init__(self):
        c = list(self.counts)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "counts", tuple(c or [0]))

    def __getitem__(self, r):
        return self.counts[r] if 0 <= r < len(self.counts) else 0

    def __len__(self):
        return len(self.counts)

    def total(self):
        return sum(self.counts)

    def as_list(self):
        return list(self.counts)


def _shape(s):
    # sign of s[b] - s[a] for every pair a < b; equal shapes <=> order-isomorphic
    n = len(s)
    return tuple((s[b] > s[a]) - (s[b] < s[a]) for a in range(n) for b in range(a + 1, n))


def _as_patterns(ps):
    if isinstance(ps, (str, bytes)) or hasattr(ps, "letters"):
        ps = [ps]
    return [parse_pattern(p) for p in ps]


def _tally(n, k, ps, first=None):
    subword = [(len(p), _shape(p.letters)) for p in ps if p.is_subword]
    general = [p for p in ps if not p.is_subword]
    hist = Counter()
    heads = range(1, k + 1) if first is None else (first,)
    tail_len = n - 1 if n else 0
    for head in heads if n else (None,):
        for tail in product(range(1, k + 1), repeat=tail_len):
            w = tail if head is None else (head,) + tail
            r = 0
            for l, target in subword:
                for i in range(n - l + 1):
                    if _shape(w[i:i + l]) == target:
                        r += 1
            for p in general:
                r += count_occurrences(w, p)
            hist[r] += 1
    return hist


def _tally_star(args):
    return _tally(*args)


def distribution(n, k, ps, workers=None, guard=None):
    """
    Occurrence distribution over [k]^n for a pattern or a set of patterns.

    ``counts[r]`` is the number of words whose total number of occurrences,
    summed over the patterns in ``ps``, equals r.  With ``workers`` > 1 the
    words are split by first letter across processes; the result does not
    depend on the split.
    """
    ps = _as_patterns(ps)
    check_guard(n, k, guard)
    if workers and workers > 1 and n > 0 and k > 1:
        hist = Counter()
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_tally_star, [(n, k, ps, a) for a in range(1, k + 1)]):
                hist.update(part)
    else:
        hist = _tally(n, k, ps)
    top = max(hist) if hist else 0
    return DistributionVector(n, k, tuple(hist.get(r, 0) for r in range(top + 1)))


def distributions_by_pattern(n, k, ps, guard=None):
    """
    One enumeration pass producing a separate distribution for each subword
    pattern in ``ps``.  Used when many patterns are checked at once.
    """
    ps = _as_patterns(ps)
    if not all(p.is_subword for p in ps):
        raise ValueError("distributions_by_pattern handles subword patterns only")
    check_guard(n, k, guard)
    lengths = sorted({len(p) for p in ps})
    hists = {p: Counter() for p in ps}
    shapes = {p: _shape(p.letters) for p in ps}
    for w in product(range(1, k + 1), repeat=n):
        seen = Counter()
        for l in lengths:
            for i in range(n - l + 1):
                seen[_shape(w[i:i + l])] += 1
        for p, target in shapes.items():
            hists[p][seen.get(target, 0)] += 1
    out = {}
    for p, h in hists.items():
        top = max(h) if h else 0
        out[p] = DistributionVector(n, k, tuple(h.get(r, 0) for r in range(top + 1)))
    return out


def _as_strings(strs, k):
    out = []
    for s in strs:
        t = tuple(int(c) for c in s) if isinstance(s, str) else tuple(s)
        if not t:
            raise ValueError("empty string in the avoidance set")
        if any(a < 1 or a > k for a in t):
            raise ValueError(f"string {s!r} uses a letter outside [1, {k}]")
        out.append(t)
    return out


def avoid_strings_count(n, k, strs, guard=None):
    """Words of [k]^n containing none of the literal strings as a factor."""
    strs = _as_strings(strs, k)
    check_guard(n, k, guard)
    total = 0
    for w in product(range(1, k + 1), repeat=n):
        if not any(w[i:i + len(s)] == s for s in strs for i in range(n - len(s) + 1)):
            total += 1
    return total
