"""From syllables to subsurfaces, and distance lower-bound certificates.

Each syllable of a minimal word moves a base subsurface by the mapping
classes of the prefix before it.  Symbolically the image is (prefix,
base vertex), with the prefix read modulo the star subgroup of the
base.  When the generator mapping classes translate their curve
complexes far enough (at least C = 2K), each syllable contributes
K * |exponent| to the distance between a basepoint marking and its
image, and the contributions add up.
"""

import json

from raagmcg import (
    DefiningGraph,
    check_order_embedding,
    check_representative_independence,
    default_constants,
    make_certificate,
    parse_word,
    syllable_subsurface_map,
)

pentagon = DefiningGraph.from_data(
    "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]
)

for text in ("a c", "a b", "a c a"):
    word = parse_word(text, pentagon)
    print(f"subsurface assignment for {text!r}:")
    for sid, value in syllable_subsurface_map(word).items():
        print(f"  {sid.label():>8} -> (prefix {str(value.prefix)!r}, base {value.base_vertex})")
    print(f"  independent of the representative: {check_representative_independence(word).ok}")
    print(f"  injective, unordered pairs disjoint: {check_order_embedding(word).ok}")
    print()

constants = default_constants(pentagon)
print(f"constants: K0={constants.k0}, D={constants.d} => K={constants.k}, C={constants.c}")
certificate = make_certificate(parse_word("a^2 c^-1", pentagon), constants)
print(json.dumps(certificate.to_json_dict(), indent=2))
