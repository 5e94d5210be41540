"""Normal forms in a right-angled Artin group, step by step.

The pentagon group has five generators a, b, c, d, e with consecutive
ones commuting.  We rewrite words with the three moves (drop zero
exponents, merge equal neighbors, swap commuting neighbors), compute
canonical minimal forms, and double-check syllable counts against the
exhaustive move-graph oracle.
"""

from raagmcg import (
    DefiningGraph,
    apply_move,
    equal_elements,
    invert,
    is_minimal,
    multiply,
    normalize,
    oracle_min_syllables,
    parse_word,
    power,
)

pentagon = DefiningGraph.from_data(
    "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]
)
print("pentagon graph:", pentagon.to_json_dict())
print("star(a) =", sorted(pentagon.star("a")))
print()

w = parse_word("a b a^-1", pentagon)
print(f"w = {w}")
print("  a and b commute, so the a-syllables cancel:")
print(f"  normalize(w) = {normalize(w)}")
print(f"  oracle minimum = {oracle_min_syllables(w)} syllable(s)")
print()

blocked = parse_word("a c", pentagon)
print(f"{blocked}: a and c do not commute, nothing reduces:")
print(f"  normalize = {normalize(blocked)}, minimal: {is_minimal(blocked)}")
print()

print("single moves:")
print(f"  a^2 a^3 --merge-->  {apply_move(parse_word('a^2 a^3', pentagon), 2, 1)}")
print(f"  a b     --swap-->   {apply_move(parse_word('a b', pentagon), 3, 1)}")
try:
    apply_move(parse_word("a c", pentagon), 3, 1)
except Exception as err:
    print(f"  a c     --swap-->   rejected: {err}")
print()

print("group arithmetic always lands on the canonical form:")
u, v = parse_word("a c", pentagon), parse_word("c^-1 b", pentagon)
print(f"  ({u}) * ({v}) = {multiply(u, v)}")
print(f"  ({u})^-1 = {invert(u)}")
print(f"  ({u})^3 = {power(u, 3)}")
print(f"  a b equals b a: {equal_elements(parse_word('a b', pentagon), parse_word('b a', pentagon))}")
print(f"  a c equals c a: {equal_elements(parse_word('a c', pentagon), parse_word('c a', pentagon))}")
