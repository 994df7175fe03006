"""Reproducing the [48,12,24] record code by complete enumeration.

The catalog's flagship entry is a quaternary [48,12] code whose minimum
distance 24 beats the previous best for these parameters.  Its full weight
distribution takes only a moment to recompute: the enumerator walks all
4^12 = 16,777,216 codewords, and the stored distribution in the catalog
pins every coefficient.
"""

import time

from skewqc.distance import weight_enumerator
from skewqc.notation import poly_to_terms
from skewqc.tables import FLAGSHIP_ENUMERATOR, get

entry = get("new-l2-48-12-24")
code = entry.build()
print("code:", code.params(), " built from s =", entry.s, "blocks, l =", entry.l)
print("g =", poly_to_terms(code.g))

t0 = time.perf_counter()
enum = weight_enumerator(code, budget=2**32)
elapsed = time.perf_counter() - t0

print(f"\nenumerated {enum.total:,} codewords in {elapsed:.2f}s")
print("minimum distance:", enum.distance)
print("\nweight distribution (A_w = number of codewords of weight w):")
for w in sorted(enum.counts):
    if w:
        print(f"  A_{w} = {enum.counts[w]}")
assert dict(enum.counts) == dict(FLAGSHIP_ENUMERATOR)
assert sum(enum.counts.values()) == 4**12
print("\nmatches the stored distribution coefficient for coefficient,")
print("and the coefficients sum to 4^12 exactly.")
