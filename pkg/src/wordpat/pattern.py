"""
Patterns, words and occurrence counting.

A word is a tuple of positive integers.  A :class:`Pattern` is a sequence of
letters covering ``1..m`` plus an adjacency flag between each pair of
consecutive letters; ``False`` marks a hyphen.  An occurrence of a pattern is
a choice of positions, consecutive wherever adjacency is required, whose
letters are order-isomorphic to the pattern (equalities included).
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product


class PatternSyntaxError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Pattern:
    letters: tuple
    adjacency: tuple = None

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if not letters:
            raise ValueError("a pattern needs at least one letter")
        adj = self.adjacency
        adj = (True,) * (len(letters) - 1) if adj is None else tuple(bool(a) for a in adj)
        if len(adj) != len(letters) - 1:
            raise ValueError("need one adjacency flag between each pair of letters")
        if set(letters) != set(range(1, max(letters) + 1)):
            raise ValueError(f"pattern {letters} must use every letter 1..{max(letters)}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "adjacency", adj)

    @property
    def m(self):
        return max(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    @property
    def is_subword(self):
        return all(self.adjacency)

    def __str__(self):
        out = [str(self.letters[0])]
        for a, flag in zip(self.letters[1:], self.adjacency):
            out.append(("" if flag else "-") + str(a))
        return "".join(out)

    def __repr__(self):
        return f"Pattern('{self}')"

    def blocks(self):
        """Split into maximal runs of adjacent letters; returns a list of lengths."""
        sizes = [1]
        for flag in self.adjacency:
            if flag:
                sizes[-1] += 1
            else:
                sizes.append(1)
        return sizes


def parse_pattern(text):
    """Parse ``"112"`` or ``"12-1"``.  Letters are single digits 1..9."""
    if isinstance(text, Pattern):
        return text
    text = str(text).strip()
    letters, adj = [], []
    expect_letter = True
    pending_hyphen = False
    for ch in text:
        if ch == "-":
            if expect_letter:
                raise PatternSyntaxError(f"misplaced '-' in {text!r}")
            pending_hyphen = True
            expect_letter = True
            continue
        if not ("1" <= ch <= "9"):
            raise PatternSyntaxError(f"bad character {ch!r} in pattern {text!r}")
        if letters:
            adj.append(not pending_hyphen)
        letters.append(int(ch))
        pending_hyphen = False
        expect_letter = False
    if not letters or expect_letter:
        raise PatternSyntaxError(f"malformed pattern {text!r}")
    try:
        return Pattern(tuple(letters), tuple(adj))
    except ValueError as exc:
        raise PatternSyntaxError(str(exc)) from exc


def parse_patterns(text):
    """Comma-separated list of patterns."""
    items = [t for t in str(text).split(",") if t.strip()]
    if not items:
        raise PatternSyntaxError("empty pattern list")
    return [parse_pattern(t) for t in items]


def parse_word(text):
    text = str(text).strip()
    if not text.isdigit() or "0" in text:
        raise PatternSyntaxError(f"bad word {text!r}")
    return tuple(int(c) for c in text)


def word_str(w):
    return "".join(str(a) for a in w)


@lru_cache(maxsize=1 << 16)
def _reduce_tuple(s):
    rank = {v: i + 1 for i, v in enumerate(sorted(set(s)))}
    return tuple(rank[v] for v in s)


def reduce(s):
    """Order-isomorphism type of ``s`` as a subword pattern (355 -> 122)."""
    s = tuple(s)
    if not s:
        raise ValueError("cannot reduce an empty sequence")
    return Pattern(_reduce_tuple(s))


def count_occurrences(w, p):
    p = parse_pattern(p)
    w = tuple(w)
    l, n = len(p), len(w)
    if l > n:
        return 0
    if p.is_subword:
        target = p.letters
        return sum(1 for i in range(n - l + 1) if _reduce_tuple(w[i:i + l]) == target)
    return _count_generalized(w, p)


def _count_generalized(w, p):
    sizes = p.blocks()
    offsets = [0]
    for s in sizes[:-1]:
        offsets.append(offsets[-1] + s)
    target = p.letters
    n = len(w)
    total = 0

    # start positions of the blocks, strictly increasing and non-overlapping
    def rec(b, pos, picked):
        nonlocal total
        if b == len(sizes):
            if _reduce_tuple(tuple(picked)) == target:
                total += 1
            return
        size = sizes[b]
        rest = sum(sizes[b + 1:])
        for start in range(pos, n - size - rest + 1):
            rec(b + 1, start + size, picked + list(w[start:start + size]))

    rec(0, 0, [])
    return total


def _require_subword(p):
    if not p.is_subword:
        raise ValueError(f"{p} is hyphenated; only subword patterns are allowed")


def reverse(p):
    p = parse_pattern(p)
    _require_subword(p)
    return Pattern(p.letters[::-1])


def complement(p):
    p = parse_pattern(p)
    _require_subword(p)
    m = p.m
    return Pattern(tuple(m + 1 - a for a in p.letters))


def symmetry_class(p):
    """The orbit of ``p`` under reversal and complement, sorted."""
    p = parse_pattern(p)
    c = complement(p)
    return sorted({p, reverse(p), c, reverse(c)})


def _consistent(n, relations):
    """
    Decide whether some word of length ``n`` satisfies every relation.

    ``relations`` holds (i, j, rel) with rel in {'=', '<'} meaning w_i = w_j or
    w_i < w_j.  Equalities are merged into classes; the strict edges between
    classes must form an acyclic graph with no self-loop.
    """
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j, rel in relations:
        if rel == "=":
            parent[find(i)] = find(j)
    edges = {}
    for i, j, rel in relations:
        if rel == "<":
            a, b = find(i), find(j)
            if a == b:
                return False
            edges.setdefault(a, set()).add(b)
    state = {}

    def cyclic(u):
        state[u] = 1
        for v in edges.get(u, ()):
            s = state.get(v, 0)
            if s == 1 or (s == 0 and cyclic(v)):
                return True
        state[u] = 2
        return False

    return not any(state.get(u, 0) == 0 and cyclic(u) for u in list(edges))


def _pattern_relations(letters, base):
    rel = []
    for a, b in combinations(range(len(letters)), 2):
        if letters[a] == letters[b]:
            rel.append((base + a, base + b, "="))
        elif letters[a] < letters[b]:
            rel.append((base + a, base + b, "<"))
        else:
            rel.append((base + b, base + a, "<"))
    return rel


def overlap_possible(p, t):
    """True if two occurrences of ``p`` can share exactly ``t`` letters."""
    p = parse_pattern(p)
    l = len(p)
    s = l - t
    rel = _pattern_relations(p.letters, 0) + _pattern_relations(p.letters, s)
    return _consistent(l + s, rel)


def is_primitive(p):
    """Distinct occurrences of ``p`` can overlap in at most one letter."""
    p = parse_pattern(p)
    _require_subword(p)
    return not any(overlap_possible(p, t) for t in range(2, len(p)))


def enumerate_patterns(l, m):
    """All surjective subword patterns in [m]^l, lexicographically."""
    if m > l:
        raise ValueError(f"no surjective pattern of length {l} over {m} letters")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    full = set(range(1, m + 1))
    return [Pattern(t) for t in product(range(1, m + 1), repeat=l) if set(t) == full]


def is_alternating(letters):
    """Consecutive letters strictly alternate up/down (either way round)."""
    diffs = [b - a for a, b in zip(letters, letters[1:])]
    if any(d == 0 for d in diffs):
        return False
    return all((d > 0) != (e > 0) for d, e in zip(diffs, diffs[1:]))


def generate_td(d):
    """
    Alternating patterns of length d+1 (every surjective alphabet size).

    Each inequality a_i < a_{i+1} > a_{i+2} ... is imposed only where both
    indices exist, which yields ``T_2 = {121, 132, 231, 212, 213, 312}``.
    For d = 1 this gives ``{12, 21}``.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    out = set()
    for m in range(1, d + 2):
        out.update(p for p in enumerate_patterns(d + 1, m) if is_alternating(p.letters))
    return out
