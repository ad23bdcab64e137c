"""
Seven ways to say "rich"
========================

Each characterization of richness is implemented by a separate, naive
checker. On every short word they must return the same verdict.
"""

from richwords import characterization_matrix
from richwords.crossval import crossvalidate

for w in ["abac", "abca", "aabcbaaba", "abaabbaba"]:
    m = characterization_matrix(w)
    print(f"{w:>10}", m.to_dict(), "agree" if m.all_agree else "DISAGREE")

###############################################################################
# Exhaustive run over all binary words up to length 10.

print(crossvalidate(2, 10).table())
