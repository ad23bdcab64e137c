"""
Factor and palindromic complexity
=================================

For recurrent rich infinite words, P(n) + P(n+1) = C(n+1) - C(n) + 2.
Infinite words are approximated by windows long enough to contain every
factor of the lengths counted.
"""

from richwords import WindowSpec, complexity_profile, fibonacci_word
from richwords.complexity import find_identity_witness

print(complexity_profile(WindowSpec.periodic("aabaabab", 12), 12).table())
print(complexity_profile(WindowSpec.prefix(fibonacci_word(800)), 20).table())

###############################################################################
# A periodic word that is closed under reversal but not rich breaks the
# identity. The search returns the first such block.

block = find_identity_witness("abc", max_block=9, max_n=12)
print("witness block:", block)
print(complexity_profile(WindowSpec.periodic(block, 8), 8).table())
