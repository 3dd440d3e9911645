"""
Variants of the 211...12 formula, compared against enumeration.

Only the canonical variant reproduces the counts; the others are kept so the
disagreement can be shown and re-checked.
"""
from wordpat import closedform as cf
from wordpat import oracle
from wordpat.cli import verify

truth = [oracle.distribution(n, 2, "212").as_list() for n in range(5)]
print("enumeration", truth)
for v in cf.TWOS_VARIANTS:
    got = cf.gf_twos_variant(v, 3, 2, 4).coefficient_lists()
    print(f"{v:18}", got, "ok" if got == truth else "differs")

# the verify harness reports the first divergence
rec = verify("212", max_k=2, max_n=3, variant="printed-th212")
print(rec["agree"], rec["mismatch"])
print(verify("212", max_k=4, max_n=8)["agree"])

# the step family 1 t 2 needs m >= 2; for m = 1 (the pattern 12) it is wrong
try:
    cf.gf_step(1, 2, 3, 6)
except ValueError as e:
    print("refused:", e)
