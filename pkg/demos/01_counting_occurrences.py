"""Counting pattern occurrences in words, by brute force and by automaton."""
from wordpat import count_occurrences, parse_pattern, reduce
from wordpat import oracle, transfer
from wordpat.transfer import build_automaton

# a pattern is a reduced word; 3 5 5 has the shape 122
print(reduce((3, 5, 5)))

# occurrences are windows of consecutive letters with the pattern's shape
w = (1, 2, 3, 1, 2, 2, 3)
for p in ("12", "123", "122", "112"):
    print(p, count_occurrences(w, p))

# hyphens relax adjacency: 12-1 is a rise followed anywhere later by its bottom letter
print("12-1", count_occurrences((1, 2, 1, 3, 1), "12-1"))

# the distribution over all of [2]^3: seven words avoid 112, one (112 itself) has one copy
print(oracle.distribution(3, 2, "112").as_list())

# the oracle walks k^n words; the automaton remembers only the last l-1 letters
aut = build_automaton(2, "112")
print(len(aut.states), "states")
for state, letter, nxt, weight in list(aut.transitions())[:6]:
    print(state, "--", letter, "->", nxt, "y^%d" % weight)

# both give the same numbers, but the automaton scales to long words
for n in range(6):
    assert transfer.distribution(n, 3, "1213") == oracle.distribution(n, 3, "1213").as_list()
print(transfer.distribution_series(3, "1213", 40)[40].degree, "max copies of 1213 in a word of length 40")

# big integers stay exact
s = transfer.distribution_series(4, "121", 60)
print(s[60](0), "words of length 60 over 4 letters avoid 121")
print(s.at_y(1)[60] == 4 ** 60)

# several patterns at once: occurrences are totalled
print(transfer.distribution(5, 3, ["11", "12"]))
print(parse_pattern("1-2-3"))
