"""Realizing a graph by overlapping subsurfaces, and the fill test.

The standard construction takes one annulus per generator, glues annuli
along squares exactly when the generators do not commute, and plants a
one-holed torus in each annulus.  The tori are the subsurfaces; the
annulus cores and one curve per torus are the reference curves that
stand in for "all essential curves" in fill tests.
"""

from raagmcg import (
    DefiningGraph,
    build_standard_realization,
    fill,
    validate_realization,
)

pentagon = DefiningGraph.from_data(
    "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]
)
realization = build_standard_realization(pentagon)
validate_realization(realization)

print(f"ambient: {realization.ambient_label}, curves: {list(realization.reference_curves)}")
for sub in realization.subsurfaces:
    print(f"  {sub.label}: core {sub.core}, meets {sorted(sub.intersects)}")
print()

print("pairs of subsurfaces are disjoint exactly on edges of the graph;")
print("the complement graph (non-commuting pairs) drives the fill components:")
print(pentagon.complement().to_json_dict())
print()

for indices in (list("abcde"), ["a"], ["a", "b"], ["a", "c", "e"]):
    result = fill(realization, indices)
    print(f"fill({indices}):")
    print(f"  components      = {result.components}")
    print(f"  fills ambient   = {result.fills_ambient}")
    if result.uncovered_curves:
        print(f"  uncovered       = {sorted(result.uncovered_curves)}")
    print()

print("realization JSON (round-trips through the CLI and the validator):")
print(realization.to_json()[:400] + " ...")
