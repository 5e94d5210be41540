"""Classifying the mapping classes carried by group elements.

After conjugacy reduction, the support of a word splits along the
components of the complement graph.  Each piece acts as a pseudo-Anosov
on the subsurface its generators fill; the whole class is pseudo-Anosov
exactly when a single piece fills the ambient surface, with curve
complex translation length at least 1/(2r + 1) for r distinct
generators.
"""

import json

from raagmcg import (
    DefiningGraph,
    build_standard_realization,
    classify,
    parse_word,
    translation_length_bound,
    verify_power_properties,
)

pentagon = DefiningGraph.from_data(
    "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]
)
realization = build_standard_realization(pentagon)

for text in ("a c e b d", "a b", "a c a^-1", ""):
    report = classify(parse_word(text, pentagon), realization)
    print(f"classify({text!r}): {report.overall}")
    print(f"  reduced {str(report.reduced)!r}, conjugator {str(report.conjugator)!r}, r = {report.r}")
    for component in report.components:
        print(
            f"  component {component.generators}: word {str(component.word)!r}, "
            f"fills = {component.fills_ambient}"
        )
    if report.translation_bound is not None:
        print(f"  translation length on the curve complex >= {report.translation_bound}")
    print()

print("the filling word certifies its bound:")
bound = translation_length_bound(parse_word("a c e b d", pentagon), realization)
print(f"  1/(2*5 + 1) = {bound}")
print()

print("brute-force verification of the power structure behind the bound:")
report = verify_power_properties(parse_word("a c e b d", pentagon))
print(json.dumps(report, indent=2))
