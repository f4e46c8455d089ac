"""Spherical realizations of Gauss codes as combinatorial maps.

A realization is a rotation system on 4n darts.  Traversing the curve, edge t
runs from the t-th code position to the (t+1)-th; its tail dart is 2t and its
head dart is 2t+1, so the edge involution is ``d ^ 1``.  Each vertex is
visited by two strand passages, and transversality forces the in- and
out-dart of one passage to sit opposite each other in the rotation, which
leaves exactly two admissible rotations per vertex.  A rotation assignment is
a spherical realization exactly when face tracing yields n + 2 orbits
(Euler's formula with V = n, E = 2n).

Faces, monogons, strong 2-gons, teardrop loops and the connected-sum
structure all live here because they need the realized map (or feed it).

A code can admit several inequivalent spherical embeddings (``1 1 2 2``
already has two, with face profiles (1,1,2,4) and (1,1,3,3)), so
face-derived quantities are properties of a realization, not of the code.
:func:`realize` always returns the first admissible rotation system in a
fixed search order; that deterministic choice is the semantics of every
code-level entry point.  :func:`all_realizations` exposes the full set for
callers that want to quantify over embeddings.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import chords
from .chords import ChordDiagram, interleaved
from .errors import InvalidSite, NoCrossings, NotRealizable

__all__ = [
    "Face",
    "Teardrop",
    "PlanarCurve",
    "U",
    "realize",
    "all_realizations",
    "faces",
    "monogons",
    "strong_bigons",
    "find_teardrops",
    "innermost_teardrop",
    "is_reduced",
    "prime_decompose",
    "connected_sum",
]


@dataclass(frozen=True)
class Face:
    """One face of the realized map.

    ``dart_cycle`` lists the darts of the face-tracing orbit starting from
    the smallest one; ``corners`` gives the vertex passed at each step, so a
    face of degree d has d corners counted with multiplicity.  The two faces
    of U have degree 0 and no corners by convention.
    """

    dart_cycle: tuple[int, ...]
    corners: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.dart_cycle)


@dataclass(frozen=True)
class Teardrop:
    """A simple sub-loop from a crossing back to itself.

    ``origin`` is the crossing C at the loop's corner, ``loop_start`` the code
    position of C where the loop begins, and ``interval`` the code positions
    strictly inside the loop (each label there occurs exactly once, so the
    loop is embedded).  ``boundary_labels`` is (C, P_1, ..., P_2m) in loop
    order.  Walking the complementary arc of the curve meets the boundary
    crossings as Q_1, ..., Q_2m with Q_i = P_{sigma(i)}; ``sigma`` stores
    (sigma(1), ..., sigma(2m)).
    """

    origin: int
    loop_start: int
    interval: tuple[int, ...]
    boundary_labels: tuple[int, ...]
    sigma: tuple[int, ...]


@dataclass(frozen=True)
class PlanarCurve:
    """A Gauss code together with a spherical rotation system.

    ``rotations[v-1]`` is the cyclic dart order at vertex v; ``faces`` is the
    full face list.  The curve's Euler circuit visits the darts in numeric
    order (tail 2t, head 2t+1 for edge t), so ``traversal`` is just
    0..4n-1.
    """

    word: tuple[int, ...]
    rotations: tuple[tuple[int, int, int, int], ...]
    faces: tuple[Face, ...]

    @property
    def n(self) -> int:
        return len(self.word) // 2

    @property
    def code(self) -> ChordDiagram:
        return ChordDiagram(self.word)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.word)

    @property
    def traversal(self) -> tuple[int, ...]:
        return tuple(range(self.dart_count))

    def opposite(self, dart: int) -> int:
        return dart ^ 1

    def __repr__(self) -> str:
        return f"PlanarCurve({' '.join(map(str, self.word)) or 'U'!r})"


U = PlanarCurve(word=(), rotations=(), faces=(Face((), ()), Face((), ())))


def _vertex_dart_table(word: tuple[int, ...]) -> dict[int, tuple[int, int, int, int]]:
    """Per vertex: (in1, out1, in2, out2) darts of its two passages."""
    m = len(word)
    occ: dict[int, list[int]] = {}
    for t, v in enumerate(word):
        occ.setdefault(v, []).append(t)
    table = {}
    for v, (t1, t2) in occ.items():
        table[v] = (
            2 * ((t1 - 1) % m) + 1,
            2 * t1,
            2 * ((t2 - 1) % m) + 1,
            2 * t2,
        )
    return table


def _rotation_for(darts: tuple[int, int, int, int], flip: int) -> tuple[int, int, int, int]:
    # transversality: in1 opposite out1, in2 opposite out2; two cyclic orders remain
    in1, out1, in2, out2 = darts
    return (in1, out2, out1, in2) if flip else (in1, in2, out1, out2)


def _trace_faces(
    word: tuple[int, ...], rotations: tuple[tuple[int, int, int, int], ...]
) -> list[Face]:
    m = len(word)
    nd = 2 * m
    succ = [0] * nd
    for rot in rotations:
        for k in range(4):
            succ[rot[k]] = rot[(k + 1) % 4]
    # dart incidence: tail 2t at word[t], head 2t+1 at word[t+1]
    vertex_of = [0] * nd
    for t in range(m):
        vertex_of[2 * t] = word[t]
        vertex_of[2 * t + 1] = word[(t + 1) % m]
    out: list[Face] = []
    seen = [False] * nd
    for start in range(nd):
        if seen[start]:
            continue
        cycle = []
        corners = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            corners.append(vertex_of[d ^ 1])
            d = succ[d ^ 1]
        out.append(Face(tuple(cycle), tuple(corners)))
    return out


def _search_rotations(cd: ChordDiagram) -> PlanarCurve | None:
    """First rotation assignment whose face count is n + 2, in mask order."""
    n = cd.n
    table = _vertex_dart_table(cd.word)
    for mask in range(1 << n):
        rotations = tuple(
            _rotation_for(table[v], (mask >> (v - 1)) & 1) for v in range(1, n + 1)
        )
        fl = _trace_faces(cd.word, rotations)
        if len(fl) == n + 2:
            return PlanarCurve(cd.word, rotations, tuple(fl))
    return None


def all_realizations(cd: ChordDiagram) -> list[PlanarCurve]:
    """Every accepted rotation assignment, with no parity prefilter.

    Exhaustive over all 2**n transversal rotation systems; used to verify
    that the parity rejection in :func:`realize` never disagrees with the
    full search, and that realization-dependent quantities do not actually
    depend on the realization found first.
    """
    if cd.n == 0:
        return [U]
    n = cd.n
    table = _vertex_dart_table(cd.word)
    found = []
    for mask in range(1 << n):
        rotations = tuple(
            _rotation_for(table[v], (mask >> (v - 1)) & 1) for v in range(1, n + 1)
        )
        fl = _trace_faces(cd.word, rotations)
        if len(fl) == n + 2:
            found.append(PlanarCurve(cd.word, rotations, tuple(fl)))
    return found


def realize(cd: ChordDiagram) -> PlanarCurve:
    """Realize a Gauss code on the sphere, deterministically.

    Raises :class:`NotRealizable` when no transversal rotation system has
    n + 2 faces; the message names the failing parity chord when the cheap
    necessary condition already rules the code out.
    """
    if cd.n == 0:
        return U
    odd = chords.gauss_parity_violations(cd)
    if odd:
        raise NotRealizable(
            f"not realizable (parity fails at chord {odd[0]})", parity_chord=odd[0]
        )
    p = _search_rotations(cd)
    if p is None:
        raise NotRealizable("not realizable (no spherical rotation system)")
    return p


def faces(p: PlanarCurve) -> list[Face]:
    """All faces of the realized map (n + 2 of them; two 0-gons for U)."""
    return list(p.faces)


def monogons(p: PlanarCurve) -> list[Face]:
    """Faces of degree 1."""
    return [f for f in p.faces if f.degree == 1]


def strong_bigons(p: PlanarCurve) -> list[Face]:
    """Degree-2 faces with distinct, non-interleaved corner chords.

    A 2-gon face has corners (a, b).  When a == b (the outer face of the
    figure-eight) it is no 2-gon for move purposes.  When the corner chords
    interleave, the code reads a b .. a b .. and the strands run parallel
    through the face: the weak case.  The strong case is the nested pattern
    a b .. b a .. with antiparallel strands, and only those faces admit the
    s2b move.
    """
    out = []
    cd = p.code
    for f in p.faces:
        if f.degree != 2:
            continue
        a, b = f.corners
        if a == b:
            continue
        if not interleaved(cd, a, b):
            out.append(f)
    return out


def _cyclic_interior(m: int, s: int, e: int) -> list[int]:
    out = []
    i = (s + 1) % m
    while i != e:
        out.append(i)
        i = (i + 1) % m
    return out


def find_teardrops(p: PlanarCurve) -> list[Teardrop]:
    """All embedded sub-loops based at a crossing.

    One candidate per (vertex, side): the loop from one occurrence of v to
    the other is embedded exactly when no label repeats strictly inside that
    code interval.  Every curve with n >= 1 has at least one (trace the curve
    to the first repeated crossing).  Ordered by vertex, then by side
    (first-to-second occurrence before the wraparound side).
    """
    if p.n == 0:
        raise NoCrossings("U has no crossings, hence no teardrops")
    w = p.word
    m = len(w)
    out = []
    cd = p.code
    for v in range(1, p.n + 1):
        t1, t2 = cd.positions(v)
        for s, e in ((t1, t2), (t2, t1)):
            interior = _cyclic_interior(m, s, e)
            plabels = [w[i] for i in interior]
            if len(set(plabels)) != len(plabels):
                continue
            bset = set(plabels)
            q = [w[i] for i in _cyclic_interior(m, e, s) if w[i] in bset]
            index = {lab: k + 1 for k, lab in enumerate(plabels)}
            out.append(
                Teardrop(
                    origin=v,
                    loop_start=s,
                    interval=tuple(interior),
                    boundary_labels=(v, *plabels),
                    sigma=tuple(index[lab] for lab in q),
                )
            )
    return out


def innermost_teardrop(p: PlanarCurve) -> Teardrop:
    """A teardrop whose interval contains no other teardrop's interval.

    Containment is proper inclusion of the position sets; ties are broken by
    shortest interval, then smallest origin label, then loop start, so the
    result is deterministic.
    """
    cands = find_teardrops(p)
    sets = [frozenset(t.interval) for t in cands]
    inner = [
        t
        for t, si in zip(cands, sets)
        if not any(sj < si for sj in sets)
    ]
    return min(inner, key=lambda t: (len(t.interval), t.origin, t.loop_start))


def is_reduced(p: PlanarCurve) -> bool:
    """No nugatory crossing (every chord interleaves something); U is reduced."""
    cd = p.code
    return all(not chords.is_nugatory(cd, a) for a in range(1, p.n + 1))


def prime_decompose(p: PlanarCurve) -> list[PlanarCurve]:
    """Connected-sum factors, each prime, in recursive split order.

    U decomposes into no factors.  The factor multiset (by canonical code)
    does not depend on which valid split is taken first; tests assert this.
    """
    if p.n == 0:
        return []
    split = chords.split_connected_sum(p.code)
    if split is None:
        return [p]
    inner, outer = split
    return prime_decompose(realize(inner)) + prime_decompose(realize(outer))


def _check_site(p: PlanarCurve, site, name: str) -> None:
    if not isinstance(site, int) or isinstance(site, bool):
        raise InvalidSite(f"{name} must be an edge index, got {site!r}")
    if not 0 <= site < 2 * p.n:
        raise InvalidSite(f"{name}={site} out of range 0..{2 * p.n - 1}")


def connected_sum(
    p1: PlanarCurve,
    p2: PlanarCurve,
    site1: int | None = None,
    site2: int | None = None,
) -> PlanarCurve:
    """Splice ``p2`` into ``p1``, cutting edge ``site1`` of p1 and ``site2`` of p2.

    Edge t runs between code positions t and t+1.  U is the neutral element
    on either side (its site must be None, having no edges).  The spliced
    code is relabeled and realized; the result always is realizable.
    """
    if p1.n == 0:
        if site1 is not None:
            raise InvalidSite("U has no edges; its site must be None")
        if p2.n == 0:
            if site2 is not None:
                raise InvalidSite("U has no edges; its site must be None")
            return U
        _check_site(p2, site2, "site2")
        return p2
    if p2.n == 0:
        if site2 is not None:
            raise InvalidSite("U has no edges; its site must be None")
        _check_site(p1, site1, "site1")
        return p1
    _check_site(p1, site1, "site1")
    _check_site(p2, site2, "site2")
    w1, w2 = p1.word, p2.word
    shifted = tuple(x + p1.n for x in w2[site2 + 1:] + w2[: site2 + 1])
    merged = w1[: site1 + 1] + shifted + w1[site1 + 1:]
    return realize(ChordDiagram.from_labels(merged))
