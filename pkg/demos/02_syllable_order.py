"""The partial order on syllables.

Every minimal word for an element lists the same syllables; two
syllables are ordered when one precedes the other in *every* minimal
word.  The order is what survives of "temporal structure" once all
commutations are taken into account.
"""

from raagmcg import (
    DefiningGraph,
    cyclically_reduce,
    minimal_representatives,
    parse_word,
    power_shift_map,
    syllable_order,
)

pentagon = DefiningGraph.from_data(
    "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]
)

for text in ("a b", "a c", "a b c", "a c a"):
    word = parse_word(text, pentagon)
    reps = minimal_representatives(word)
    order = syllable_order(word)
    print(f"word {text!r}")
    print("  minimal representatives:", [str(r) for r in reps])
    print("  relations:", sorted(f"{s.label()} < {t.label()}" for s, t in order.precedes) or "none")
    print()

print("Hasse diagram of the order for 'a c a' (DOT):")
print(syllable_order(parse_word("a c a", pentagon)).to_dot())

print("conjugacy-minimal forms:")
for text in ("a c a^-1", "b a c b^-1", "a c"):
    reduced, conjugator = cyclically_reduce(parse_word(text, pentagon))
    print(f"  {text!r} -> reduced {str(reduced)!r}, conjugator {str(conjugator)!r}")
print()

print("shifting syllables into powers (block 1 of w^2):")
shift = power_shift_map(parse_word("a c", pentagon), 1, 2)
for source, target in shift.items():
    print(f"  {source.label()} -> {target.label()}")
