"""Independent brute-force routines the tests check the library against.

Everything here is deliberately written from scratch against the move
definitions, without reusing the library's search or ordering code.
"""

from __future__ import annotations

from itertools import product

from raagmcg import Syllable, Word, multiply, invert, normalize


def naive_swap_closure(word: Word) -> set[tuple[tuple[str, int], ...]]:
    """Fixpoint closure of a word under single adjacent commuting swaps,
    via repeated full rescans of a plain set."""
    graph = word.graph
    start = tuple((s.generator, s.exponent) for s in word.syllables)
    closure = {start}
    grew = True
    while grew:
        grew = False
        for w in list(closure):
            for i in range(len(w) - 1):
                (g, e), (h, f) = w[i], w[i + 1]
                if g != h and graph.has_edge(g, h):
                    swapped = w[:i] + ((h, f), (g, e)) + w[i + 2:]
                    if swapped not in closure:
                        closure.add(swapped)
                        grew = True
    return closure


def positional_ids(syllables) -> list[tuple[str, int, int]]:
    counts: dict[tuple[str, int], int] = {}
    out = []
    for g, e in syllables:
        counts[(g, e)] = counts.get((g, e), 0) + 1
        out.append((g, e, counts[(g, e)]))
    return out


def intersection_order(closure) -> set[tuple[tuple, tuple]]:
    """Pairs (s, t) such that s comes before t in every word of the
    closure, on positionally-identified syllables."""
    words = [positional_ids(w) for w in closure]
    ids = set(words[0])
    pairs = set()
    for s in ids:
        for t in ids:
            if s == t:
                continue
            if all(w.index(s) < w.index(t) for w in words):
                pairs.add((s, t))
    return pairs


def conjugacy_oracle_min_syllables(word: Word, letter_bound: int) -> int:
    """Minimum syllable count over all conjugates by words of letter
    length up to ``letter_bound`` (exhaustive at desk scale)."""
    graph = word.graph
    letters = [
        Word((Syllable(g, e),), graph) for g in graph.vertices for e in (1, -1)
    ]
    best = len(normalize(word).syllables)
    for length in range(1, letter_bound + 1):
        for combo in product(letters, repeat=length):
            tau = combo[0]
            for factor in combo[1:]:
                tau = multiply(tau, factor)
            conjugate = multiply(multiply(tau, word), invert(tau))
            best = min(best, len(conjugate.syllables))
    return best
