"""Stable syllable identities, the strict partial order on them, shift
maps between syllables of powers, and cyclic (conjugacy-minimal)
reduction.

A syllable of a minimal word keeps its identity across all minimal
representatives: move-(3) swaps never let two syllables with the same
generator and exponent pass each other (they would have to become
adjacent, where a merge would shorten the word).  So the triple
(generator, exponent, occurrence rank) names a syllable unambiguously,
and positional comparisons can be intersected over all minimal words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotCyclicallyReduced, ShiftMapUndefined
from .words import (
    DEFAULT_CAP,
    Syllable,
    Word,
    empty_word,
    invert,
    minimal_representatives,
    multiply,
    normalize,
    power,
)


@dataclass(frozen=True, order=True)
class SyllableId:
    """(generator, exponent, occurrence): the occurrence rank counts equal
    syllables left to right in any minimal word."""

    generator: str
    exponent: int
    occurrence: int

    def label(self) -> str:
        return f"{self.generator}^{self.exponent}#{self.occurrence}"


def _ids_of_sequence(syllables: Sequence[Syllable]) -> list[SyllableId]:
    counts: dict[tuple[str, int], int] = {}
    ids = []
    for s in syllables:
        key = (s.generator, s.exponent)
        counts[key] = counts.get(key, 0) + 1
        ids.append(SyllableId(s.generator, s.exponent, counts[key]))
    return ids


def syllable_ids(word: Word) -> tuple[SyllableId, ...]:
    """The syllables of the canonical form of ``word``, as stable ids in
    canonical positional order."""
    return tuple(_ids_of_sequence(normalize(word).syllables))


@dataclass(frozen=True)
class SyllableOrder:
    """The strict partial order: s precedes t iff s comes before t in
    every minimal representative."""

    elements: tuple[SyllableId, ...]
    precedes: frozenset[tuple[SyllableId, SyllableId]]

    def comparable(self, s: SyllableId, t: SyllableId) -> bool:
        return (s, t) in self.precedes or (t, s) in self.precedes

    def covering_pairs(self) -> list[tuple[SyllableId, SyllableId]]:
        """Transitive reduction: the Hasse diagram edges."""
        covers = []
        for s, t in self.precedes:
            if not any(
                (s, u) in self.precedes and (u, t) in self.precedes
                for u in self.elements
            ):
                covers.append((s, t))
        pos = {sid: i for i, sid in enumerate(self.elements)}
        covers.sort(key=lambda p: (pos[p[0]], pos[p[1]]))
        return covers

    def to_json_dict(self) -> dict:
        return {
            "elements": [s.label() for s in self.elements],
            "covering": [[s.label(), t.label()] for s, t in self.covering_pairs()],
        }

    def to_dot(self, name: str = "syllable_order") -> str:
        lines = [f"digraph {name} {{"]
        for s in self.elements:
            lines.append(f'  "{s.label()}";')
        for s, t in self.covering_pairs():
            lines.append(f'  "{s.label()}" -> "{t.label()}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def syllable_order(word: Word, cap: int = DEFAULT_CAP) -> SyllableOrder:
    """Intersect the positional total orders of all minimal representatives.

    Raises CapExceeded if the set of minimal representatives outgrows
    ``cap``.
    """
    canonical = normalize(word)
    reps = minimal_representatives(canonical, cap)
    ids = tuple(_ids_of_sequence(canonical.syllables))
    index = {sid: i for i, sid in enumerate(ids)}
    k = len(ids)
    all_bits = (1 << k) - 1
    after = [all_bits] * k  # after[i]: ids that follow i in every word so far
    for rep in reps:
        seq = _ids_of_sequence(rep.syllables)
        mask = 0
        for s in reversed(seq):
            i = index[s]
            after[i] &= mask
            mask |= 1 << i
    precedes = frozenset(
        (ids[i], ids[j])
        for i in range(k)
        for j in range(k)
        if after[i] >> j & 1
    )
    return SyllableOrder(ids, precedes)


# -- shift maps between powers ---------------------------------------------


def power_shift_map(
    word: Word, m: int, n: int, cap: int = DEFAULT_CAP
) -> dict[SyllableId, SyllableId]:
    """Map each syllable of word^m to its copy n - m blocks later in
    word^n (so the block-j copy of a syllable goes to block j + n - m).

    Requires 1 <= m < n and a cyclically reduced word whose support has
    a connected complement graph with at least two generators; those
    conditions keep powers of minimal words minimal, so the blocks stay
    intact.  Single-generator words are rejected: their powers merge
    into one syllable and there is no block structure to shift.
    """
    if not 1 <= m < n:
        raise ValueError("need 1 <= m < n")
    w = normalize(word)
    if not is_cyclically_reduced(w, cap):
        raise NotCyclicallyReduced("word is not conjugacy-minimal")
    support = sorted(w.support(), key=w.graph.index.get)
    if len(support) < 2:
        raise ShiftMapUndefined(
            "support has fewer than two generators; power blocks merge",
            support=support,
        )
    if len(w.graph.complement().components(support)) != 1:
        raise ShiftMapUndefined(
            "support is disconnected in the complement graph; power blocks may merge",
            support=support,
        )
    counts: dict[tuple[str, int], int] = {}
    for s in w.syllables:
        key = (s.generator, s.exponent)
        counts[key] = counts.get(key, 0) + 1
    base = power(w, m)
    if len(base.syllables) != m * len(w.syllables):
        raise ShiftMapUndefined("power of the word collapsed", m=m)
    shift: dict[SyllableId, SyllableId] = {}
    for sid in _ids_of_sequence(base.syllables):
        step = counts[(sid.generator, sid.exponent)]
        shift[sid] = SyllableId(
            sid.generator, sid.exponent, sid.occurrence + (n - m) * step
        )
    return shift


# -- cyclic reduction --------------------------------------------------------


def _one_syllable(word: Word, s: Syllable) -> Word:
    return Word((s,), word.graph)


def _find_reduction(current: Word, cap: int) -> tuple[Word, Word] | None:
    # Try conjugating away the first syllable, or the last syllable, of
    # every minimal representative; report the first strict decrease.
    # Returns (shorter conjugate, conjugator factor) with
    # current = factor * shorter * factor^-1.
    k = len(current.syllables)
    if k == 0:
        return None
    for rep in minimal_representatives(current, cap):
        first = _one_syllable(current, rep.syllables[0])
        candidate = multiply(multiply(invert(first), current), first)
        if len(candidate.syllables) < k:
            return candidate, first
        last = _one_syllable(current, rep.syllables[-1])
        candidate = multiply(multiply(last, current), invert(last))
        if len(candidate.syllables) < k:
            return candidate, invert(last)
    return None


def cyclically_reduce(word: Word, cap: int = DEFAULT_CAP) -> tuple[Word, Word]:
    """A representative with the fewest syllables in the conjugacy class,
    plus a conjugator: word = conjugator * reduced * conjugator^-1.

    Strategy: repeatedly conjugate away the first syllable or the last
    syllable of some minimal representative whenever that strictly drops
    the syllable count.  Termination is immediate (the count decreases);
    that the fixed point is conjugacy-minimal is certified against an
    exhaustive conjugation oracle in the test suite.
    """
    current = normalize(word)
    conjugator = empty_word(word.graph)
    while True:
        found = _find_reduction(current, cap)
        if found is None:
            return current, conjugator
        current, factor = found
        conjugator = multiply(conjugator, factor)


def is_cyclically_reduced(word: Word, cap: int = DEFAULT_CAP) -> bool:
    return _find_reduction(normalize(word), cap) is None
