"""
Example infinite words
======================

Prefixes of morphic, periodic and staircase words, with their defects.
"""

from richwords import (
    Morphism,
    analyze,
    fibonacci_word,
    kleene_staircase,
    morphic_prefix,
    periodic_prefix,
    psi_of_fibonacci,
)
from richwords.generators import psi_block
from richwords.richness import prefix_defects

n = 5000
words = {
    "fibonacci": fibonacci_word(n),
    "a->aba, b->bb": morphic_prefix(Morphism.parse("a=aba;b=bb"), "a", n),
    "(aabaabab)^w": periodic_prefix(psi_block(1), n),
    "abbbb...": kleene_staircase(n, 1),
    "abaabaaab...": kleene_staircase(n, 2),
}
for k in range(4):
    words[f"psi_{k}(f)"] = psi_of_fibonacci(k, n)

for name, w in words.items():
    print(f"{name:>16}  {w[:24]}...  defect {analyze(w).defect}")

###############################################################################
# For k >= 2 the image of the Fibonacci word loses richness early: the
# factor b^k is repeated as a longest palindromic suffix.

w = psi_of_fibonacci(2, 40)
d = prefix_defects(w)
print(w[:d.index(1)], "first defective prefix")
