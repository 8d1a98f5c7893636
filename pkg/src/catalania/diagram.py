"""Diagrams of order t+1 with boundary conditions and their equivalence moves.

A diagram is stored as its tuple of column heights.  Columns are 1-indexed
in every public signature (``column=1`` is the leftmost column) and 0-indexed
internally.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    """Raised when a diagram or move violates a side condition."""


@dataclass(frozen=True, order=True)
class Diagram:
    heights: tuple[int, ...]

    def __init__(self, heights: Iterable[int]):
        hs = tuple(int(h) for h in heights)
        if not hs:
            raise DiagramError("a diagram has at least one column")
        if any(h < 0 for h in hs):
            raise DiagramError(f"negative column height in {hs}")
        object.__setattr__(self, "heights", hs)

    @classmethod
    def empty(cls, order: int) -> "Diagram":
        return cls((0,) * order)

    @property
    def order(self) -> int:
        return len(self.heights)

    @property
    def t(self) -> int:
        return len(self.heights) - 1

    @property
    def height(self) -> int:
        return max(self.heights)

    def __len__(self) -> int:
        return len(self.heights)

    def __getitem__(self, column: int) -> int:
        """Height of column ``column`` (1-indexed)."""
        return self.heights[column - 1]

    def row(self, u: int) -> tuple[int, ...]:
        """1-indexed columns having a block in row ``u``."""
        return tuple(i + 1 for i, h in enumerate(self.heights) if h >= u)

    def ascii(self) -> str:
        lines = []
        for u in range(self.height, 0, -1):
            lines.append("".join("#" if h >= u else "." for h in self.heights))
        lines.append("-" * self.order)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"order": self.order, "heights": list(self.heights)}

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        d = cls(data["heights"])
        if d.order != data.get("order", d.order):
            raise DiagramError("order does not match the number of heights")
        return d

    def __repr__(self) -> str:
        return f"Diagram{self.heights}"


# -- neighbours and extremality ------------------------------------------


def left_neighbour(hs: Sequence[int], i: int, s: int) -> int | None:
    """0-indexed left neighbour of column ``i`` at height ``s``.

    At height 0 every column qualifies, so the neighbour is the adjacent one.
    """
    for k in range(i - 1, -1, -1):
        if hs[k] >= s:
            return k
    return None


def right_neighbour(hs: Sequence[int], i: int, s: int) -> int | None:
    for k in range(i + 1, len(hs)):
        if hs[k] >= s:
            return k
    return None


def is_left_extremal(hs: Sequence[int], i: int) -> bool:
    return left_neighbour(hs, i, hs[i]) is None


def is_right_extremal(hs: Sequence[int], i: int) -> bool:
    return right_neighbour(hs, i, hs[i]) is None


def _boundary_ok(hs: Sequence[int]) -> bool:
    top = max(hs)
    running = -1
    for h in hs:
        # left extremal: strictly taller than everything to its left
        if h > running:
            if h % 2 == 1 and h != top:
                return False
            running = h
    running = -1
    for h in reversed(hs):
        if h > running:
            if h % 2 == 0 and h != top:
                return False
            running = h
    return True


def check_boundary(d: Diagram) -> bool:
    """Left/right boundary conditions on ``d``."""
    return _boundary_ok(d.heights)


def _strongly_extremal(hs: Sequence[int]) -> int:
    top = max(hs)
    if top % 2 == 1:
        return hs.index(top)
    return len(hs) - 1 - hs[::-1].index(top)


def strongly_extremal_column(d: Diagram) -> int:
    """1-indexed strongly extremal column (the last column when ``d`` is empty)."""
    if not check_boundary(d):
        raise DiagramError(f"{d} fails the boundary conditions")
    return _strongly_extremal(d.heights) + 1


# -- moves ---------------------------------------------------------------


class MoveKind(str, Enum):
    DOMINO = "domino"
    HALF_DOMINO = "half-domino"
    ROW_PAIR = "row-pair"


class DominoSide(str, Enum):
    LEFT_EVEN = "left-even"
    RIGHT_ODD = "right-odd"


@dataclass(frozen=True, order=True)
class Move:
    """One equivalence move.

    ``column`` is 1-indexed (dominoes and half-dominoes).  A row-pair move at
    ``row`` cancels (or inserts) rows ``row+1`` and ``row+2``; for adjunction
    ``raised`` lists the columns of height exactly ``row`` that are lifted,
    every taller column being lifted as well.
    """

    kind: MoveKind
    adjoin: bool
    column: int = 0
    side: DominoSide | None = None
    row: int = 0
    raised: tuple[int, ...] = field(default=())

    def __str__(self) -> str:
        verb = "adjoin" if self.adjoin else "remove"
        if self.kind is MoveKind.DOMINO:
            return f"{verb} {self.side.value} domino at column {self.column}"
        if self.kind is MoveKind.HALF_DOMINO:
            return f"{verb} half-domino at column {self.column}"
        return f"{verb} row pair above row {self.row}"


def _domino_side(hs: Sequence[int], i: int) -> DominoSide | None:
    """Side of a domino adjoined to column ``i`` if that adjunction is legal."""
    low = hs[i]
    if low % 2 == 0:
        k = right_neighbour(hs, i, low + 1)
        if k is not None and hs[k] >= low + 2:
            return DominoSide.LEFT_EVEN
    else:
        k = left_neighbour(hs, i, low + 1)
        if k is not None and hs[k] >= low + 2:
            return DominoSide.RIGHT_ODD
    return None


def _with(hs: Sequence[int], i: int, delta: int) -> tuple[int, ...]:
    out = list(hs)
    out[i] += delta
    return tuple(out)


def domino_adjunctions(hs: Sequence[int]) -> Iterator[tuple[int, DominoSide]]:
    for i in range(len(hs)):
        side = _domino_side(hs, i)
        if side is not None:
            yield i, side


def domino_removals(hs: Sequence[int]) -> Iterator[tuple[int, DominoSide]]:
    for i, h in enumerate(hs):
        if h < 2:
            continue
        lower = _with(hs, i, -2)
        side = _domino_side(lower, i)
        if side is not None and _boundary_ok(lower):
            yield i, side


def half_domino_removable(hs: Sequence[int]) -> int | None:
    top = max(hs)
    if top == 0 or hs.count(top) != 1:
        return None
    return hs.index(top)


def row_pair_removals(hs: Sequence[int]) -> Iterator[int]:
    """Rows ``u`` such that rows u+1 and u+2 coincide and are non-empty."""
    present = set(hs)
    for u in range(0, max(hs) - 1):
        if (u + 1) not in present:
            yield u


def _remove_rows(hs: Sequence[int], u: int) -> tuple[int, ...]:
    return tuple(h - 2 if h >= u + 2 else h for h in hs)


def row_pair_adjunctions(hs: Sequence[int]) -> Iterator[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """All insertions of two equal rows that keep the boundary conditions.

    Yields ``(u, raised, result)`` with ``raised`` 0-indexed.
    """
    top = max(hs)
    for u in range(0, top + 1):
        level = [i for i, h in enumerate(hs) if h == u]
        for n in range(len(level) + 1):
            for raised in itertools.combinations(level, n):
                if u == top and not raised:
                    continue
                lifted = set(raised)
                new = tuple(h + 2 if (h > u or i in lifted) else h for i, h in enumerate(hs))
                if _boundary_ok(new):
                    yield u, raised, new


def legal_moves(d: Diagram) -> list[Move]:
    hs = d.heights
    if not _boundary_ok(hs):
        raise DiagramError(f"{d} fails the boundary conditions")
    moves: list[Move] = []
    for i, side in domino_adjunctions(hs):
        moves.append(Move(MoveKind.DOMINO, True, column=i + 1, side=side))
    for i, side in domino_removals(hs):
        moves.append(Move(MoveKind.DOMINO, False, column=i + 1, side=side))
    moves.append(Move(MoveKind.HALF_DOMINO, True, column=_strongly_extremal(hs) + 1))
    i = half_domino_removable(hs)
    if i is not None:
        moves.append(Move(MoveKind.HALF_DOMINO, False, column=i + 1))
    for u, raised, _ in row_pair_adjunctions(hs):
        moves.append(Move(MoveKind.ROW_PAIR, True, row=u, raised=tuple(r + 1 for r in raised)))
    for u in row_pair_removals(hs):
        moves.append(Move(MoveKind.ROW_PAIR, False, row=u))
    return moves


def _apply(hs: tuple[int, ...], m: Move) -> tuple[int, ...]:
    if m.kind is MoveKind.DOMINO:
        return _with(hs, m.column - 1, 2 if m.adjoin else -2)
    if m.kind is MoveKind.HALF_DOMINO:
        return _with(hs, m.column - 1, 1 if m.adjoin else -1)
    if m.adjoin:
        lifted = {c - 1 for c in m.raised}
        return tuple(h + 2 if (h > m.row or i in lifted) else h for i, h in enumerate(hs))
    return _remove_rows(hs, m.row)


def apply_move(d: Diagram, m: Move) -> Diagram:
    hs = d.heights
    if not _boundary_ok(hs):
        raise DiagramError(f"{d} fails the boundary conditions")
    if m not in legal_moves(d):
        raise DiagramError(_illegal_reason(hs, m))
    new = _apply(hs, m)
    assert _boundary_ok(new), (hs, m, new)
    if m.kind is not MoveKind.HALF_DOMINO:
        assert _strongly_extremal(new) == _strongly_extremal(hs), (hs, m, new)
    elif m.adjoin:
        assert _strongly_extremal(new) == m.column - 1
    return Diagram(new)


def _illegal_reason(hs: Sequence[int], m: Move) -> str:
    if m.kind is MoveKind.DOMINO:
        if not 1 <= m.column <= len(hs):
            return f"column {m.column} out of range"
        base = hs[m.column - 1] - (0 if m.adjoin else 2)
        if base < 0:
            return f"column {m.column} too short to remove a domino"
        if m.side is DominoSide.LEFT_EVEN and base % 2:
            return f"left domino at column {m.column} needs even height, got {base}"
        if m.side is DominoSide.RIGHT_ODD and base % 2 == 0:
            return f"right domino at column {m.column} needs odd height, got {base}"
        return f"column {m.column} has no neighbour of height >= {base + 2} on the domino side"
    if m.kind is MoveKind.HALF_DOMINO:
        if m.adjoin:
            return f"half-dominoes go on the strongly extremal column {_strongly_extremal(hs) + 1}"
        return "half-domino removal needs a unique column of maximal height"
    if m.adjoin:
        return f"inserting rows above row {m.row} lifting {m.raised} breaks the boundary conditions"
    return f"rows {m.row + 1} and {m.row + 2} are not equal and non-empty"


# -- completion, canonical form, duality --------------------------------


def _complete(hs: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        for i, _ in domino_adjunctions(hs):
            hs = _with(hs, i, 2)
            break
        else:
            return hs


def is_complete(d: Diagram) -> bool:
    return next(domino_adjunctions(d.heights), None) is None


def is_reduced(d: Diagram) -> bool:
    return next(row_pair_removals(d.heights), None) is None


def complete(d: Diagram) -> Diagram:
    if not _boundary_ok(d.heights):
        raise DiagramError(f"{d} fails the boundary conditions")
    return Diagram(_complete(d.heights))


def _removal_step(hs: tuple[int, ...]) -> tuple[int, ...] | None:
    """One greedy removal: row pairs, then dominoes (leftmost), then half-dominoes."""
    for u in row_pair_removals(hs):
        return _remove_rows(hs, u)
    for i, _ in domino_removals(hs):
        return _with(hs, i, -2)
    i = half_domino_removable(hs)
    if i is not None:
        return _with(hs, i, -1)
    return None


def _deplete(hs: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        nxt = _removal_step(hs)
        if nxt is None:
            return hs
        hs = nxt


def is_deplete(d: Diagram) -> bool:
    return _removal_step(d.heights) is None


@dataclass(frozen=True, order=True)
class ClassKey:
    """Canonical (deplete) representative of an equivalence class."""

    deplete: Diagram
    strongly_extremal: int
    class_height: int

    @property
    def order(self) -> int:
        return self.deplete.order

    @property
    def t(self) -> int:
        return self.deplete.order - 1

    def to_json(self) -> dict:
        out = self.deplete.to_json()
        out["strongly_extremal"] = self.strongly_extremal
        out["class_height"] = self.class_height
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ClassKey":
        key = canonicalize(Diagram.from_json(data))
        if (key.strongly_extremal, key.class_height) != (data["strongly_extremal"], data["class_height"]):
            raise DiagramError(f"inconsistent class key {data}")
        if key.deplete != Diagram(data["heights"]):
            raise DiagramError(f"{data['heights']} is not deplete")
        return key

    def __repr__(self) -> str:
        return f"ClassKey({self.deplete.heights}, j={self.strongly_extremal}, r={self.class_height})"


def canonicalize(d: Diagram) -> ClassKey:
    hs = d.heights
    if not _boundary_ok(hs):
        raise DiagramError(f"{d} fails the boundary conditions")
    j = _strongly_extremal(hs)
    low = _deplete(hs)
    assert _strongly_extremal(low) == j, (hs, low)
    return ClassKey(Diagram(low), j + 1, max(low))


def equivalent(a: Diagram, b: Diagram) -> bool:
    return canonicalize(a) == canonicalize(b)


def half_domino(d: Diagram) -> Diagram:
    return Diagram(_with(d.heights, _strongly_extremal(d.heights), 1))


def add_full_rows(d: Diagram, n: int) -> Diagram:
    return Diagram(h + n for h in d.heights)


def complete_representatives(key: ClassKey, extra: int = 1) -> list[Diagram]:
    """Complete diagrams of heights h, h+1, ..., h+extra in the class."""
    low = Diagram(_complete(key.deplete.heights))
    high = Diagram(_complete(half_domino(low).heights))
    reps = [low, high]
    while len(reps) < extra + 1:
        reps.append(add_full_rows(reps[-2], 2))
    return reps[: extra + 1]


def reduced_completes(key: ClassKey) -> tuple[Diagram, Diagram]:
    """The two complete reduced diagrams of the class, heights h and h+1."""
    low, high = complete_representatives(key, 1)
    return low, high


def dual(d: Diagram) -> Diagram:
    if not _boundary_ok(d.heights):
        raise DiagramError(f"{d} fails the boundary conditions")
    return Diagram(h + 1 for h in reversed(d.heights))


def merge(left: Diagram, right: Diagram) -> Diagram:
    """Glue ``left`` and ``right`` along left's last column and right's first."""
    a, b = left.heights[-1], right.heights[0]
    if (a - b) % 2:
        raise DiagramError(f"cannot merge: shared column heights {a} and {b} differ in parity")
    if a < b:
        left = add_full_rows(left, b - a)
    elif b < a:
        right = add_full_rows(right, a - b)
    out = Diagram(left.heights + right.heights[1:])
    assert _boundary_ok(out.heights), (left, right, out)
    return out


# -- brute-force equivalence closure --------------------------------------

BFS_HEIGHT_SLACK = 3


def neighbours(hs: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Every diagram one move away from ``hs`` (all three families, both ways)."""
    for i, _ in domino_adjunctions(hs):
        yield _with(hs, i, 2)
    for i, _ in domino_removals(hs):
        yield _with(hs, i, -2)
    yield _with(hs, _strongly_extremal(hs), 1)
    i = half_domino_removable(hs)
    if i is not None:
        yield _with(hs, i, -1)
    for _, _, new in row_pair_adjunctions(hs):
        yield new
    for u in row_pair_removals(hs):
        yield _remove_rows(hs, u)


def closure(d: Diagram, cap: int | None = None) -> set[Diagram]:
    """BFS over the move graph restricted to heights <= ``cap``."""
    if cap is None:
        cap = d.height + BFS_HEIGHT_SLACK
    start = d.heights
    seen = {start}
    todo = deque([start])
    while todo:
        cur = todo.popleft()
        for nxt in neighbours(cur):
            if max(nxt) <= cap and nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return {Diagram(hs) for hs in seen}
