"""Grouping patterns whose occurrence statistics cannot be told apart."""
from itertools import product

from wordpat import count_occurrences
from wordpat.wilf import bump_map, classify, empirically_equivalent, find_phi, phi_map

# 112 and 121 differ first on two-letter words of length five
rep = empirically_equivalent("112", "121")
print(rep.verdict, rep.witness["n"], rep.witness["k"], rep.witness["counts"])

# 1121 and 1221 agree on everything we can compute
print(empirically_equivalent("1121", "1221").verdict)

# length three: 13 patterns, 5 classes
c = classify(3, 3)
for cls in c.classes:
    print(cls.representative, [str(p) for p in cls.members])

# length four: 1132, 1232, 1322 and 1332 share a class, and so do 1432 and 1342
c4 = classify(4, 4, max_n=8, max_k=4)
print(len(c4.classes), "classes")
big = c4.class_of("1132").members
print(len(big), all(c4.class_of(p).members == big for p in ("1232", "1322", "1332")))
print(c4.class_of("1342") == c4.class_of("1432"))

# smaller alphabets see less: with k <= 2 far more patterns look alike
print(len(classify(4, 4, max_n=8, max_k=2).classes), "classes when k <= 2")

# an explicit bijection behind 1232 ~ 1322: permute letters inside each window
phi = find_phi("1232", "1322")
print(phi.perm, phi_map((1, 2, 3, 2, 1, 2, 3, 2), "1232", phi))
words = list(product((1, 2, 3), repeat=6))
images = {phi_map(w, "1232", phi) for w in words}
print(len(images) == len(words))

# and one behind 1213 ~ 1223: raise the repeated first letter inside each window
v = bump_map((1, 2, 1, 3, 1, 2, 1, 3), "1213")
print(v, count_occurrences(v, "1223"))
images = {bump_map(w, "1213") for w in words}
print(len(images) == len(words))
