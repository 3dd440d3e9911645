"""
Strong Wilf equivalence: empirical comparison, classification, and the two
occurrence-rewriting bijections.

Equivalence found here is only ever "up to bounds".  A ``distinct`` verdict
always carries the (n, k, r) at which the counts differ.
"""
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import oracle, transfer
from .pattern import (Pattern, enumerate_patterns, is_primitive, parse_pattern, reduce,
                      symmetry_class)

EQUIVALENT = "equivalent-up-to-bounds"
DISTINCT = "distinct"


@dataclass(frozen=True)
class WilfReport:
    patterns: tuple
    verdict: str
    witness: dict = None
    bounds: dict = field(default_factory=dict)

    @property
    def equivalent(self):
        return self.verdict == EQUIVALENT

    def to_dict(self):
        return {"patterns": [str(p) for p in self.patterns], "verdict": self.verdict,
                "witness": self.witness, "bounds": dict(self.bounds)}


@lru_cache(maxsize=4096)
def _transfer_signature(p, k, max_n):
    return tuple(tuple(c) for c in transfer.distribution_series(k, p, max_n).coefficient_lists())


def _oracle_signature(p, k, max_n):
    return tuple(tuple(oracle.distribution(n, k, p).as_list()) for n in range(max_n + 1))


def signature(p, max_n, max_k, engine="transfer"):
    """Distributions for k = 1..max_k and n = 0..max_n, as nested tuples."""
    p = parse_pattern(p)
    fn = _transfer_signature if engine == "transfer" else _oracle_signature
    return tuple(fn(p, k, max_n) for k in range(1, max_k + 1))


def _first_difference(sig1, sig2):
    # k-major scan so the smallest alphabet that tells the patterns apart wins
    for ki, (a, b) in enumerate(zip(sig1, sig2)):
        for n, (da, db) in enumerate(zip(a, b)):
            if da != db:
                top = max(len(da), len(db))
                da = list(da) + [0] * (top - len(da))
                db = list(db) + [0] * (top - len(db))
                r = next(i for i in range(top) if da[i] != db[i])
                return {"n": n, "k": ki + 1, "r": r, "counts": [da[r], db[r]],
                        "distributions": [da, db]}
    return None


def empirically_equivalent(p1, p2, max_n=8, max_k=4, engine="transfer"):
    p1, p2 = parse_pattern(p1), parse_pattern(p2)
    w = _first_difference(signature(p1, max_n, max_k, engine),
                          signature(p2, max_n, max_k, engine))
    bounds = {"max_n": max_n, "max_k": max_k, "engine": engine}
    return WilfReport((p1, p2), DISTINCT if w else EQUIVALENT, w, bounds)


@dataclass(frozen=True)
class PhiMap:
    """A permutation of positions 1..l that fixes both endpoints."""
    perm: tuple

    def __post_init__(self):
        perm = tuple(self.perm)
        l = len(perm)
        if sorted(perm) != list(range(1, l + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{l}")
        if perm[0] != 1 or perm[-1] != l:
            raise ValueError("the permutation must fix the first and last positions")
        object.__setattr__(self, "perm", perm)

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j - 1] = i + 1
        return PhiMap(tuple(inv))

    def apply(self, tau):
        """The pattern ``tau'`` with ``tau'(i) = tau(perm(i))``."""
        tau = parse_pattern(tau)
        if len(tau) != len(self.perm):
            raise ValueError("length mismatch between pattern and permutation")
        return Pattern(tuple(tau.letters[j - 1] for j in self.perm))


def find_phi(tau, tau2):
    """An endpoint-fixing PhiMap carrying ``tau`` to ``tau2``."""
    tau, tau2 = parse_pattern(tau), parse_pattern(tau2)
    if (len(tau) != len(tau2) or sorted(tau.letters) != sorted(tau2.letters)
            or tau[0] != tau2[0] or tau[-1] != tau2[-1]):
        raise ValueError(f"{tau} and {tau2} need the same letters and the same endpoints")
    l = len(tau)
    used = {0, l - 1}
    perm = [1] + [0] * (l - 2) + [l] if l > 1 else [1]
    for i in range(1, l - 1):
        j = next(j for j in range(1, l - 1) if j not in used and tau[j] == tau2[i])
        used.add(j)
        perm[i] = j + 1
    return PhiMap(tuple(perm))


def _occurrences(w, letters):
    l = len(letters)
    return [i for i in range(len(w) - l + 1)
            if reduce(w[i:i + l]).letters == letters]


def phi_map(w, tau, phi):
    """
    Rewrite occurrences of ``tau`` into occurrences of ``tau' = phi(tau)``.

    Inside each occurrence window of ``tau`` the letter at position j becomes
    the letter at position phi(j); windows holding ``tau'`` are sent back
    with phi's inverse.  Windows share at most an endpoint, which phi fixes,
    so the rewrites commute and the map is an involution on words that swaps
    the two occurrence counts.
    """
    tau = parse_pattern(tau)
    if not is_primitive(tau):
        raise ValueError(f"{tau} is not primitive")
    if not isinstance(phi, PhiMap):
        phi = PhiMap(tuple(phi))
    target = phi.apply(tau)
    if not is_primitive(target):
        warnings.warn(f"{target} is not primitive although {tau} is", stacklevel=2)
    w = tuple(w)
    out = list(w)
    fwd = [j - 1 for j in phi.perm]
    for i in _occurrences(w, tau.letters):
        for j, src in enumerate(fwd):
            out[i + j] = w[i + src]
    if target != tau:
        back = [j - 1 for j in phi.inverse().perm]
        for i in _occurrences(w, target.letters):
            for j, src in enumerate(back):
                out[i + j] = w[i + src]
    return tuple(out)


def bump_target(tau):
    """
    For ``tau = 1 2 t 1 3`` with ``1 2 t 1`` primitive, the partner pattern
    ``1 2 t' 2 3`` where t' is t with every 1 replaced by 2.
    """
    tau = parse_pattern(tau)
    t = tau.letters
    if len(t) < 4 or t[:2] != (1, 2) or t[-2:] != (1, 3):
        raise ValueError(f"{tau} is not of the form 12...13")
    head = reduce(t[:-1])
    if not is_primitive(head):
        raise ValueError(f"{head} is not primitive")
    return Pattern((1,) + tuple(2 if a == 1 else a for a in t[1:]))


def bump_map(w, tau):
    """
    In every occurrence of ``tau`` the letters after the first that equal the
    first letter are raised to the value of the second letter (which is the
    first letter plus one whenever k <= 3); occurrences of the partner pattern
    are lowered back.  The result has as many partner occurrences as ``w`` has
    occurrences of ``tau``.
    """
    tau = parse_pattern(tau)
    target = bump_target(tau)
    ones = [j for j in range(1, len(tau)) if tau[j] == 1]
    w = tuple(w)
    out = list(w)
    for i in _occurrences(w, tau.letters):
        for j in ones:
            out[i + j] = w[i + 1]
    for i in _occurrences(w, target.letters):
        for j in ones:
            out[i + j] = w[i]
    return tuple(out)


@dataclass(frozen=True)
class WilfClass:
    representative: Pattern
    members: tuple

    def to_dict(self):
        return {"representative": str(self.representative),
                "members": [str(p) for p in self.members]}


@dataclass(frozen=True)
class Classification:
    length: int
    classes: tuple
    witnesses: dict      # (rep1, rep2) -> witness
    bounds: dict

    def to_dict(self):
        return {
            "length": self.length,
            "bounds": dict(self.bounds),
            "classes": [c.to_dict() for c in self.classes],
            "witnesses": [{"patterns": [str(a), str(b)], "witness": w}
                          for (a, b), w in self.witnesses.items()],
        }

    def class_of(self, p):
        p = parse_pattern(p)
        for c in self.classes:
            if p in c.members:
                return c
        raise KeyError(str(p))


def _sig_job(args):
    p, max_n, max_k = args
    return signature(p, max_n, max_k)


def classify(l, max_m, max_n=8, max_k=4, workers=None):
    """
    Group the surjective subword patterns of length l over [1..max_m] by
    equality of their distributions for n <= max_n and k <= max_k.
    """
    patterns = []
    for m in range(1, min(max_m, l) + 1):
        patterns.extend(enumerate_patterns(l, m))
    guard = transfer.DEFAULT_STATE_GUARD
    if max_k ** (l - 1) > guard:
        raise oracle.GuardExceeded(f"{max_k}^{l - 1} window states exceeds the state guard {guard}")
    jobs = [(p, max_n, max_k) for p in patterns]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            sigs = list(ex.map(_sig_job, jobs))
    else:
        sigs = [_sig_job(j) for j in jobs]
    groups = {}
    for p, s in zip(patterns, sigs):
        groups.setdefault(s, []).append(p)
    by_pattern = {p: s for p, s in zip(patterns, sigs)}
    for p in patterns:
        for q in symmetry_class(p):
            if by_pattern[q] != by_pattern[p]:
                raise RuntimeError(f"symmetric patterns {p} and {q} got different counts")
    classes = sorted((WilfClass(min(ms), tuple(sorted(ms))) for ms in groups.values()),
                     key=lambda c: c.representative)
    witnesses = {}
    for a, b in combinations(classes, 2):
        witnesses[(a.representative, b.representative)] = _first_difference(
            by_pattern[a.representative], by_pattern[b.representative])
    bounds = {"max_m": max_m, "max_n": max_n, "max_k": max_k}
    return Classification(l, tuple(classes), witnesses, bounds)

