"""Reduction moves 1b and s2b, and membership in the class S.

1b deletes the crossing at a monogon; s2b deletes the two crossings of a
strong 2-gon.  Both are implemented on the code (drop the occurrences, then
re-realize) rather than by map surgery: the deleted faces bound empty disks,
so the pruned code is again realizable.

S is the class of curves reducible to the simple closed curve U using only
these two moves.  Crossing numbers strictly decrease, so membership is a
finite backtracking search.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import planar
from .chords import CanonicalCode, ChordDiagram, canonicalize, count_tr
from .errors import InapplicableMove, PreconditionTripleChord, TheoremViolation
from .planar import PlanarCurve

__all__ = [
    "Move",
    "ReductionTrace",
    "applicable_moves",
    "apply_move",
    "reduce_no_triple",
    "in_S",
]


@dataclass(frozen=True)
class Move:
    """A single reduction move: kind "1b" with site (v,), or "s2b" with (a, b)."""

    kind: str
    site: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}@{','.join(map(str, self.site))}"


@dataclass(frozen=True)
class ReductionTrace:
    """A witness reduction: the codes visited and the moves taken.

    ``steps`` pairs each move with the canonical code it produced; the trace
    serializes to a JSON array of {move, site, code} records.
    """

    start: CanonicalCode
    steps: tuple[tuple[Move, CanonicalCode], ...]
    terminal: CanonicalCode

    def to_json_obj(self) -> list[dict]:
        return [
            {"move": mv.kind, "site": list(mv.site), "code": code.text}
            for mv, code in self.steps
        ]


def applicable_moves(p: PlanarCurve) -> list[Move]:
    """Every applicable move, 1b sites first, each site listed once, ascending."""
    ones = sorted({f.corners[0] for f in planar.monogons(p)})
    twos = sorted({tuple(sorted(f.corners)) for f in planar.strong_bigons(p)})
    return [Move("1b", (v,)) for v in ones] + [Move("s2b", ab) for ab in twos]


def apply_move(p: PlanarCurve, move: Move) -> PlanarCurve:
    """Apply one currently-applicable move and re-realize the pruned code."""
    if move not in applicable_moves(p):
        raise InapplicableMove(f"{move} is not applicable to {p!r}")
    drop = set(move.site)
    word = tuple(x for x in p.word if x not in drop)
    return planar.realize(ChordDiagram.from_labels(word))


def reduce_no_triple(p: PlanarCurve) -> ReductionTrace:
    """Greedily reduce a triple-chord-free curve all the way to U.

    The move taken at each step is the first applicable one (1b before s2b,
    smallest site first), making the trace reproducible.  A triple-chord-free
    curve with crossings always admits a move; if that ever failed,
    :class:`TheoremViolation` would report the counterexample.
    """
    if count_tr(p.code):
        raise PreconditionTripleChord(
            f"curve {canonicalize(p.code).text!r} contains a triple chord"
        )
    start = canonicalize(p.code)
    steps = []
    cur = p
    while cur.n:
        ms = applicable_moves(cur)
        if not ms:
            raise TheoremViolation(
                f"no 1b/s2b move applies to triple-chord-free curve "
                f"{canonicalize(cur.code).text!r}"
            )
        cur = apply_move(cur, ms[0])
        steps.append((ms[0], canonicalize(cur.code)))
    return ReductionTrace(start=start, steps=tuple(steps), terminal=canonicalize(cur.code))


def in_S(p: PlanarCurve) -> tuple[bool, ReductionTrace | None]:
    """Decide membership in S; on success also return a witness trace.

    Backtracking over applicable moves in their deterministic order, with
    results memoized per canonical code for the duration of this call (every
    move deletes chords, so the search space is the finite set of sub-codes).
    """
    memo: dict[str, bool] = {}
    succ: dict[str, tuple[Move, PlanarCurve]] = {}

    def dfs(cur: PlanarCurve) -> bool:
        key = canonicalize(cur.code).text
        if key in memo:
            return memo[key]
        if cur.n == 0:
            memo[key] = True
            return True
        memo[key] = False
        for mv in applicable_moves(cur):
            child = apply_move(cur, mv)
            if dfs(child):
                memo[key] = True
                succ[key] = (mv, child)
                return True
        return False

    if not dfs(p):
        return False, None
    steps = []
    cur = p
    while cur.n:
        mv, child = succ[canonicalize(cur.code).text]
        steps.append((mv, canonicalize(child.code)))
        cur = child
    return True, ReductionTrace(
        start=canonicalize(p.code), steps=tuple(steps), terminal=canonicalize(cur.code)
    )
