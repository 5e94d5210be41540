"""The map sending each syllable of a word to a subsurface of the
ambient surface, in symbolic form, together with its consistency checks
and the quasi-isometry lower-bound certificates.

The syllable at position i of a minimal word maps to the image of its
generator's supporting subsurface under the mapping classes of the
prefix before it.  Symbolically the value is the pair (prefix word,
base vertex), and the prefix only matters modulo the subgroup generated
by the star of the base vertex: generators commuting with the base fix
its subsurface.

Certificates record, per syllable, the guaranteed projection distance
K * |exponent| between a basepoint marking and its image, where

    K = K0 + 20 + 2*D,

K0 being the distance-formula threshold of the ambient surface and D a
bound on the pairwise base projections.  The basepoint marking is an
uninterpreted symbol: certificates are inequality templates, never
evaluated geometrically, and the default constants are model
parameters, not derived from any surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Real
from typing import Mapping

from .defining_graph import DefiningGraph
from .errors import InvalidConstants
from .syllables import SyllableId, _ids_of_sequence, syllable_order
from .words import (
    DEFAULT_CAP,
    Word,
    empty_word,
    in_special_subgroup,
    invert,
    minimal_representatives,
    multiply,
    normalize,
)


@dataclass(frozen=True)
class MappedSubsurface:
    """A translate of a base subsurface: (prefix word, base vertex).

    Two values denote the same subsurface iff the base vertices agree
    and the prefixes differ by an element of the star subgroup of the
    base.
    """

    prefix: Word
    base_vertex: str

    def equivalent(self, other: "MappedSubsurface") -> bool:
        if self.base_vertex != other.base_vertex:
            return False
        difference = multiply(invert(self.prefix), other.prefix)
        return in_special_subgroup(difference, self.prefix.graph.star(self.base_vertex))


def syllable_subsurface_map(word: Word) -> dict[SyllableId, MappedSubsurface]:
    """Assign to each syllable of the canonical form the translate of its
    generator's subsurface by the prefix before it.  The values do not
    depend on the choice of minimal representative (modulo star cosets);
    ``check_representative_independence`` certifies this exhaustively."""
    canonical = normalize(word)
    ids = _ids_of_sequence(canonical.syllables)
    out: dict[SyllableId, MappedSubsurface] = {}
    prefix = empty_word(word.graph)
    for sid, syllable in zip(ids, canonical.syllables):
        out[sid] = MappedSubsurface(prefix, syllable.generator)
        prefix = multiply(prefix, Word((syllable,), word.graph))
    return out


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    detail: str = ""


def check_representative_independence(word: Word, cap: int = DEFAULT_CAP) -> CheckResult:
    """Recompute the syllable-to-subsurface values along every minimal
    representative and compare with the canonical values under star-coset
    equality.  Returns the first counterexample found, if any."""
    canonical = normalize(word)
    reference = syllable_subsurface_map(canonical)
    for rep in minimal_representatives(canonical, cap):
        ids = _ids_of_sequence(rep.syllables)
        prefix = empty_word(word.graph)
        for sid, syllable in zip(ids, rep.syllables):
            value = MappedSubsurface(prefix, syllable.generator)
            if not value.equivalent(reference[sid]):
                return CheckResult(
                    False,
                    f"syllable {sid.label()} gets a different subsurface in {rep}",
                )
            prefix = multiply(prefix, Word((syllable,), word.graph))
    return CheckResult(True)


def check_order_embedding(word: Word, cap: int = DEFAULT_CAP) -> CheckResult:
    """Check that distinct syllables map to distinct subsurfaces and that
    every pair unordered by the syllable order maps to disjoint
    subsurfaces: a common translate of two base subsurfaces attached to
    commuting generators."""
    canonical = normalize(word)
    reference = syllable_subsurface_map(canonical)
    ids = list(reference)
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if reference[ids[i]].equivalent(reference[ids[j]]):
                return CheckResult(
                    False,
                    f"{ids[i].label()} and {ids[j].label()} map to the same subsurface",
                )
    order = syllable_order(canonical, cap)
    incomparable = [
        (s, t)
        for i, s in enumerate(ids)
        for t in ids[i + 1:]
        if not order.comparable(s, t)
    ]
    if not incomparable:
        return CheckResult(True)
    reps = minimal_representatives(canonical, cap)
    reps_ids = [(rep, _ids_of_sequence(rep.syllables)) for rep in reps]
    graph = word.graph
    for s, t in incomparable:
        if not graph.has_edge(s.generator, t.generator):
            return CheckResult(
                False,
                f"unordered pair {s.label()}, {t.label()} with non-commuting generators",
            )
        witness = None
        for rep, rep_ids in reps_ids:
            pos = {sid: p for p, sid in enumerate(rep_ids)}
            if abs(pos[s] - pos[t]) == 1:
                witness = (rep, min(pos[s], pos[t]))
                break
        if witness is None:
            return CheckResult(
                False,
                f"unordered pair {s.label()}, {t.label()} never becomes adjacent",
            )
        rep, cut = witness
        shared_prefix = Word(rep.syllables[:cut], graph)
        for sid in (s, t):
            candidate = MappedSubsurface(shared_prefix, sid.generator)
            if not candidate.equivalent(reference[sid]):
                return CheckResult(
                    False,
                    f"{sid.label()} is not the shared-prefix translate of its base",
                )
    return CheckResult(True)


# -- constants and certificates ---------------------------------------------


def _check_number(name: str, value) -> None:
    if not isinstance(value, Real):
        raise InvalidConstants(f"{name} must be a real number", field=name)


@dataclass(frozen=True)
class Constants:
    """The constant pack behind a certificate.

    k = k0 + 20 + 2*d, the threshold above which projection distances
    accumulate; c = 2*k, the translation length every generator's
    mapping class must beat; (a, b) the coarse-comparison constants of
    the ambient distance formulas; tau the per-vertex translation
    lengths assumed for the generators.
    """

    k0: float
    d: float
    k: float
    c: float
    a: float
    b: float
    tau: Mapping[str, float]

    @classmethod
    def create(
        cls,
        graph: DefiningGraph,
        k0: float = 10,
        d: float = 6,
        a: float = 2,
        b: float = 10,
        k: float | None = None,
        c: float | None = None,
        tau: Mapping[str, float] | None = None,
    ) -> "Constants":
        for name, value in (("K0", k0), ("D", d), ("A", a), ("B", b)):
            _check_number(name, value)
        if k is None:
            k = k0 + 20 + 2 * d
        if c is None:
            c = 2 * k
        if tau is None:
            tau = {v: c for v in graph.vertices}
        constants = cls(k0=k0, d=d, k=k, c=c, a=a, b=b, tau=dict(tau))
        constants.validate(graph)
        return constants

    def validate(self, graph: DefiningGraph) -> None:
        if self.k < 20:
            raise InvalidConstants(f"K >= 20 violated (K = {self.k})", field="K")
        if self.k != self.k0 + 20 + 2 * self.d:
            raise InvalidConstants(
                f"K must equal K0 + 20 + 2*D (got K = {self.k}, "
                f"K0 + 20 + 2*D = {self.k0 + 20 + 2 * self.d})",
                field="K",
            )
        if self.k0 <= 0:
            raise InvalidConstants("K0 must be positive", field="K0")
        if self.d < 0:
            raise InvalidConstants("D must be nonnegative", field="D")
        if self.c != 2 * self.k:
            raise InvalidConstants(f"C must equal 2*K (got {self.c})", field="C")
        if self.a < 1:
            raise InvalidConstants("A must be at least 1", field="A")
        if self.b < 0:
            raise InvalidConstants("B must be nonnegative", field="B")
        for v in graph.vertices:
            if v not in self.tau:
                raise InvalidConstants(f"tau undefined for vertex {v!r}", field="tau")
            if self.tau[v] < self.c:
                raise InvalidConstants(
                    f"tau({v}) = {self.tau[v]} is below C = {self.c}", field="tau"
                )

    def to_json_dict(self) -> dict:
        return {
            "K0": self.k0,
            "D": self.d,
            "K": self.k,
            "C": self.c,
            "A": self.a,
            "B": self.b,
            "tau": {v: self.tau[v] for v in sorted(self.tau)},
        }


def default_constants(graph: DefiningGraph) -> Constants:
    """Model parameters K0 = 10, D = 6 (so K = 42, C = 84), A = 2, B = 10;
    not derived from any surface."""
    return Constants.create(graph)


@dataclass(frozen=True)
class CertificateEntry:
    syllable: SyllableId
    subsurface: MappedSubsurface
    bound: float


@dataclass(frozen=True)
class Certificate:
    """Per-syllable projection lower bounds and their aggregation into
    distance lower-bound templates for the marking graph, Weil-Petersson
    and Teichmueller metrics."""

    sigma: Word
    constants: Constants
    entries: tuple[CertificateEntry, ...]
    total: float
    templates: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "sigma": str(self.sigma),
            "constants": self.constants.to_json_dict(),
            "entries": [
                {
                    "syllable": e.syllable.label(),
                    "prefix": str(e.subsurface.prefix),
                    "base": e.subsurface.base_vertex,
                    "bound": e.bound,
                }
                for e in self.entries
            ],
            "total": self.total,
            "templates": list(self.templates),
        }


def make_certificate(word: Word, constants: Constants) -> Certificate:
    """One entry per syllable of the canonical form, each bounding the
    projection distance to its subsurface from below by K * |exponent|;
    the entries sum to K times the letter length, which feeds the
    distance-formula templates.

    All the mapped subsurfaces are nonannular, so the Weil-Petersson
    template keeps the full sum and the Teichmueller template has an
    empty annular term.
    """
    constants.validate(word.graph)
    canonical = normalize(word)
    assignment = syllable_subsurface_map(canonical)
    entries = tuple(
        CertificateEntry(sid, sub, constants.k * abs(sid.exponent))
        for sid, sub in assignment.items()
    )
    total = constants.k * canonical.letter_length()
    rhs = f"({_fmt(total)} - {_fmt(constants.b)})/{_fmt(constants.a)}"
    templates = (
        f"d_MM >= {rhs}",
        f"d_WP >= {rhs}",
        f"d_T >= {rhs}",
    )
    return Certificate(canonical, constants, entries, total, templates)


def _fmt(x) -> str:
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    return str(x)
