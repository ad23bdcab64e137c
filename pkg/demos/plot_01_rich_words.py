"""
Rich words and the palindromic tree
===================================

A word of length n has at most n + 1 distinct palindromic factors, the
empty word included. Words reaching the bound are called rich.
"""

from richwords import Eertree, analyze, complete_returns, distinct_palindromes

# abac reaches the bound, abca falls one short
for w in ["abac", "abca"]:
    r = analyze(w)
    print(w, sorted(distinct_palindromes(w), key=len), "defect", r.defect)

###############################################################################
# The eertree adds at most one node per symbol. When a symbol adds none,
# the longest palindromic suffix was already seen and the defect grows.

t = Eertree()
for c in "abca":
    print(c, "new palindromes:", t.push(c))
print(t.dump())

###############################################################################
# Complete returns: factors with exactly two occurrences of u, at both ends.

for r in complete_returns("aabcbaaba", "aa"):
    print(r)
