"""Exhaustive enumeration of diagram classes and the counting recursions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal

from . import _kernels
from .diagram import (
    ClassKey,
    Diagram,
    DiagramError,
    canonicalize,
    complete_representatives,
    merge,
)

DEFAULT_MAX_ORDER = 7


class CapacityError(ValueError):
    pass


@dataclass(frozen=True)
class ClassTable:
    order: int
    classes: tuple[ClassKey, ...]
    index: dict[tuple[int, int], tuple[ClassKey, ...]] = field(compare=False, repr=False)

    @classmethod
    def from_keys(cls, order: int, keys: Iterable[ClassKey]) -> "ClassTable":
        keys = tuple(sorted(set(keys), key=lambda k: k.deplete.heights))
        index: dict[tuple[int, int], list[ClassKey]] = {}
        for k in keys:
            if k.order != order:
                raise ValueError(f"{k} does not have order {order}")
            index.setdefault((k.strongly_extremal, k.class_height), []).append(k)
        return cls(order, keys, {jr: tuple(v) for jr, v in sorted(index.items())})

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def select(self, j: int | None = None, r: int | None = None, max_r: int | None = None) -> list[ClassKey]:
        out = []
        for (jj, rr), ks in self.index.items():
            if j is not None and jj != j:
                continue
            if r is not None and rr != r:
                continue
            if max_r is not None and rr > max_r:
                continue
            out.extend(ks)
        return sorted(out, key=lambda k: k.deplete.heights)

    def count(self, j: int | None = None, r: int | None = None, max_r: int | None = None) -> int:
        return len(self.select(j, r, max_r))

    def to_json(self) -> dict:
        return {"order": self.order, "classes": [k.to_json() for k in self.classes]}

    @classmethod
    def from_json(cls, data: dict) -> "ClassTable":
        return cls.from_keys(data["order"], (ClassKey.from_json(c) for c in data["classes"]))


def _keys_from_depletes(rows) -> list[ClassKey]:
    keys = []
    for row in rows:
        d = Diagram(int(x) for x in row)
        key = canonicalize(d)
        # the batch kernel and the scalar routine must agree
        assert key.deplete == d, (row, key)
        keys.append(key)
    return keys


def enumerate_classes(
    order: int,
    max_order: int = DEFAULT_MAX_ORDER,
    top: int | None = None,
    use_numba: bool | None = None,
    cache=None,
) -> ClassTable:
    """All classes of the given order, from the height grid [0..top]^order.

    ``top`` defaults to t; reduced representatives never need more.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if order > max_order:
        raise CapacityError(f"order {order} exceeds the configured maximum {max_order}")
    if top is None and cache is not None:
        hit = cache.load(order)
        if hit is not None:
            return hit
    t = order - 1
    grid_top = t if top is None else top
    rows = _kernels.unique_depletes(order, grid_top, use_numba)
    tbl = ClassTable.from_keys(order, _keys_from_depletes(rows))
    assert all(k.class_height <= t for k in tbl), "a class of height above t"
    if top is None and cache is not None:
        cache.store(tbl)
    return tbl


# -- Catalan numbers --------------------------------------------------------


def catalan_closed(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def catalan_recursive(n: int) -> int:
    if n == 0:
        return 1
    return sum(catalan_recursive(i) * catalan_recursive(n - 1 - i) for i in range(n))


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = catalan_closed(n), catalan_recursive(n)
    if a != b:
        raise AssertionError(f"closed form {a} and recursion {b} disagree at {n}")
    return a


def count_by_column(tbl: ClassTable) -> dict[int, int]:
    return {j: tbl.count(j=j) for j in range(1, tbl.order + 1)}


def column_formula(order: int) -> dict[int, int]:
    t = order - 1
    return {j: catalan(j - 1) * catalan(t - j + 1) for j in range(1, order + 1)}


def catalan_polynomial(tbl: ClassTable) -> list[int]:
    """Coefficients over r = 0..t of the class-height generating polynomial."""
    return [tbl.count(r=r) for r in range(tbl.order)]


# -- recursions ---------------------------------------------------------------


@lru_cache(maxsize=None)
def height_count(r: int, n: int) -> int:
    """Number of order-n classes of height r, via the summed recursion.

    Order 0 stands for the single empty class.
    """
    if r < 0:
        return 0
    if n == 0:
        return 1 if r == 0 else 0
    if r == 0:
        return 1
    if r >= n:
        return 0
    total = 0
    for j in range(1, n + 1):
        left = height_count(r, j - 1) + height_count(r - 1, j - 1)
        total += left * sum(height_count(s, n - j) for s in range(r))
    return total - 1 if r == 1 else total


@lru_cache(maxsize=None)
def column_height_count(r: int, n: int, j: int) -> int:
    """Number of order-n classes of height r with strongly extremal column j."""
    if not 1 <= j <= n:
        raise ValueError(f"column {j} outside 1..{n}")
    if r == 0:
        return 1 if j == n else 0
    if r >= n:
        return 0
    if j == 1 and n > 1:
        return height_count(r - 1, n - 1) + height_count(r, n - 1) if r % 2 else 0
    if j == n:
        return height_count(r, n - 1) + height_count(r - 1, n - 1) if r % 2 == 0 else 0
    if r % 2 == 0:
        left = height_count(r, j - 1) + height_count(r - 1, j - 1)
        return left * sum(height_count(s, n - j) for s in range(r))
    right = height_count(r, n - j) + height_count(r - 1, n - j)
    return sum(height_count(s, j - 1) for s in range(r)) * right


def catalan_polynomial_recursive(order: int) -> list[int]:
    summed = [height_count(r, order) for r in range(order)]
    by_column = [sum(column_height_count(r, order, j) for j in range(1, order + 1)) for r in range(order)]
    if summed != by_column:
        raise AssertionError(f"summed and per-column recursions disagree: {summed} vs {by_column}")
    return summed


@lru_cache(maxsize=None)
def cumulative_count(r: int, n: int) -> int:
    """Classes of order n and height at most r, by the product recursion."""
    if n == 0:
        return 1 if r >= -1 else 0
    if r < 0:
        return 0
    return sum(cumulative_count(r, j - 1) * cumulative_count(r - 1, n - j) for j in range(1, n + 1))


def cumulative_counts(order: int, r: int) -> int:
    if r < 0:
        raise ValueError("r must be non-negative")
    return cumulative_count(r, order)


def dyck_paths(semilength: int, max_height: int | None = None) -> int:
    """Dyck paths of the given semilength never rising above ``max_height``."""
    n = semilength
    cap = n if max_height is None else max_height
    if cap < 0:
        return 0
    ways = [0] * (cap + 2)
    ways[0] = 1
    for _ in range(2 * n):
        nxt = [0] * (cap + 2)
        for h in range(cap + 1):
            if ways[h]:
                if h + 1 <= cap:
                    nxt[h + 1] += ways[h]
                if h >= 1:
                    nxt[h - 1] += ways[h]
        ways = nxt
    return ways[0]


def dyck_paths_exact(semilength: int, height: int) -> int:
    return dyck_paths(semilength, height) - dyck_paths(semilength, height - 1)


# -- bijections between class sets --------------------------------------------


def _low(key: ClassKey) -> Diagram:
    return complete_representatives(key, 1)[0]


def _high(key: ClassKey) -> Diagram:
    return complete_representatives(key, 1)[1]


def split_class(key: ClassKey) -> tuple[ClassKey, ClassKey]:
    """Cut the minimal complete reduced diagram at its strongly extremal column."""
    j, n = key.strongly_extremal, key.order
    if not 1 < j < n:
        raise DiagramError(f"split needs 1 < j < {n}, got j={j}")
    d = _low(key)
    minus = Diagram(d.heights[:j])
    plus = Diagram(d.heights[j - 1:])
    return canonicalize(minus), canonicalize(plus)


def merge_class(minus: ClassKey, plus: ClassKey) -> ClassKey:
    """Inverse of :func:`split_class`."""
    if minus.strongly_extremal != minus.order:
        raise DiagramError(f"{minus} must have its last column strongly extremal")
    if plus.strongly_extremal != 1:
        raise DiagramError(f"{plus} must have its first column strongly extremal")
    a, b = minus.class_height, plus.class_height
    if a % 2 or not b % 2:
        raise DiagramError(f"heights {a}, {b} have the wrong parities")
    if a > b:
        left, right = _low(minus), _high(plus)
    else:
        left, right = _high(minus), _low(plus)
    return canonicalize(merge(left, right))


Side = Literal["first", "last"]


def extend_class(key: ClassKey, side: Side = "first", lift: bool = False) -> ClassKey:
    """Adjoin a full-height column on one side of a complete reduced representative.

    With ``lift`` the taller complete reduced diagram is used, so the image has
    height one more than the source class.
    """
    r = key.class_height + (1 if lift else 0)
    if side == "first":
        if r % 2 == 0:
            raise DiagramError(f"a new first column needs odd height, got {r}")
    elif side == "last":
        if r % 2 or r < 2:
            raise DiagramError(f"a new last column needs even height >= 2, got {r}")
    else:
        raise ValueError(f"unknown side {side!r}")
    base = _high(key) if lift else _low(key)
    assert base.height == r, (key, base)
    hs = (r,) + base.heights if side == "first" else base.heights + (r,)
    out = canonicalize(Diagram(hs))
    assert out.class_height == r
    return out


def restrict_class(key: ClassKey, side: Side = "first") -> tuple[ClassKey, bool]:
    """Inverse of :func:`extend_class`: drop the extremal end column.

    Returns the source class and whether the lifted injection was used.
    """
    j = key.strongly_extremal
    if side == "first" and j != 1 or side == "last" and j != key.order:
        raise DiagramError(f"{key} is not extremal on the {side} side")
    if key.order < 2:
        raise DiagramError("cannot remove the only column")
    d = _low(key)
    rest = Diagram(d.heights[1:] if side == "first" else d.heights[:-1])
    src = canonicalize(rest)
    return src, src.class_height == key.class_height - 1
