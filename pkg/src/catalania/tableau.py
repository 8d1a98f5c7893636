"""Block labels, assigned partial orders and the linear functions of classes.

Functions are linear in the coefficients ``c_1..c_t`` and in the variables
``r^1..r^{t+1}``; they are stored in the m-basis, where each difference
``r^i - r^{i+1}`` becomes ``m^i + m^{i+1}``.  Only r-difference combinations
map back, which is what separates class functions from e.g. the driving
function ``h = -sum c_i m^i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

from .diagram import (
    ClassKey,
    Diagram,
    DiagramError,
    check_boundary,
    complete_representatives,
    is_complete,
    left_neighbour,
    right_neighbour,
)

MAX_T = 16


# -- labelling -----------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    diagram: Diagram
    labels: Mapping[tuple[int, int], int | None]

    def label(self, column: int, row: int) -> int | None:
        """Label of block B(column, row), both 1-indexed; ``None`` if blank."""
        if row == 0:
            return column - 1 if column >= 2 else None
        return self.labels[(column, row)]

    def is_well_numbered(self) -> bool:
        n = self.diagram.order
        for (i, j), b in self.labels.items():
            if j % 2:
                want = None if i == n else i
            else:
                want = None if i == 1 else i - 1
            if b != want:
                return False
        return True

    def ascii(self) -> str:
        hs = self.diagram.heights
        width = max(2, len(str(self.diagram.order)) + 1)
        lines = []
        for u in range(self.diagram.height, 0, -1):
            cells = []
            for i, h in enumerate(hs, start=1):
                if h < u:
                    cells.append(" " * width)
                else:
                    b = self.labels[(i, u)]
                    cells.append(("." if b is None else str(b)).rjust(width))
            lines.append("".join(cells))
        return "\n".join(lines)


def label_tableau(d: Diagram) -> Tableau:
    if not check_boundary(d):
        raise DiagramError(f"{d} fails the boundary conditions")
    hs = d.heights
    labels: dict[tuple[int, int], int | None] = {}
    for j in range(1, d.height + 1):
        cols = d.row(j)
        blank = cols[0] if j % 2 == 0 else cols[-1]
        for i in cols:
            if i == blank:
                labels[(i, j)] = None
            elif j == 1:
                labels[(i, 1)] = i
            else:
                below = j - 1
                if below % 2:
                    k = left_neighbour(hs, i - 1, below)
                else:
                    k = right_neighbour(hs, i - 1, below)
                b = labels[(k + 1, below)]
                assert b is not None, (d, i, j)
                labels[(i, j)] = b
    return Tableau(d, labels)


# -- partial orders ------------------------------------------------------


@dataclass(frozen=True)
class PartialOrder:
    """Relations ``c_a <= c_b`` stored as pairs ``(a, b)`` with ``a != b``."""

    t: int
    pairs: frozenset[tuple[int, int]]

    def closure(self) -> frozenset[tuple[int, int]]:
        rel = set(self.pairs)
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and a != d and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        return frozenset(rel)

    def is_acyclic(self) -> bool:
        return not any((b, a) in self.closure() for a, b in self.pairs)

    def compatible_with(self, perm: Sequence[int]) -> bool:
        """True if every ``c_a <= c_b`` holds in the linear order ``perm``."""
        pos = {x: p for p, x in enumerate(perm)}
        return all(pos[a] < pos[b] for a, b in self.pairs)

    def contains(self, a: int, b: int) -> bool:
        return (a, b) in self.closure()

    def __str__(self) -> str:
        if not self.pairs:
            return "{}"
        return "{" + ", ".join(f"c{a}<=c{b}" for a, b in sorted(self.pairs)) + "}"


def tableau_partial_order(tab: Tableau) -> PartialOrder:
    hs = tab.diagram.heights
    pairs = set()
    for (i, j), b in tab.labels.items():
        if b is None:
            continue
        if j % 2 == 0:
            k = left_neighbour(hs, i - 1, j) + 1
            span = range(k, i)
        else:
            k = right_neighbour(hs, i - 1, j) + 1
            span = range(i + 1, k + 1)
        for ell in span:
            if hs[ell - 1] < j - 1:
                continue
            other = tab.label(ell, j - 1)
            if other is not None and other != b:
                pairs.add((b, other))
    return PartialOrder(tab.diagram.t, frozenset(pairs))


def partial_order(key: ClassKey) -> PartialOrder:
    """Partial order carried by the complete tableaux of the class."""
    low, high = complete_representatives(key, 1)
    po = tableau_partial_order(label_tableau(low))
    other = tableau_partial_order(label_tableau(high))
    if po.pairs != other.pairs:
        raise AssertionError(f"complete representatives of {key} disagree: {po} vs {other}")
    return po


# -- linear forms --------------------------------------------------------


def r_to_m(r_row: Sequence[int]) -> list[int]:
    """m-coordinates of an r-difference combination ``sum a_i r^i``."""
    if sum(r_row) != 0:
        raise ValueError(f"{list(r_row)} is not a combination of r-differences")
    n = len(r_row)
    f = np.cumsum(r_row)[: n - 1]
    m = [0] * n
    for i, b in enumerate(f):
        m[i] += int(b)
        m[i + 1] += int(b)
    return m


def m_to_f(m_row: Sequence[int]) -> list[int] | None:
    """Coordinates over ``f^i = r^i - r^{i+1}``, or None if not expressible."""
    out = []
    prev = 0
    for x in m_row[:-1]:
        prev = int(x) - prev
        out.append(prev)
    if int(m_row[-1]) != prev:
        return None
    return out


def f_to_r(f_row: Sequence[int]) -> list[int]:
    n = len(f_row) + 1
    r = [0] * n
    for i, b in enumerate(f_row):
        r[i] += b
        r[i + 1] -= b
    return r


@dataclass(frozen=True)
class LinearForm:
    """Coefficient matrix ``rows[k-1][i-1]`` of ``c_k * m^i``."""

    rows: tuple[tuple[int, ...], ...]
    note: str = ""

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1 or (self.rows and widths != {len(self.rows) + 1}):
            raise ValueError("a form over t coefficients needs t rows of t+1 entries")

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    @property
    def t(self) -> int:
        return len(self.rows)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.t, self.t + 1)

    @classmethod
    def zero(cls, t: int, note: str = "") -> "LinearForm":
        return cls(tuple((0,) * (t + 1) for _ in range(t)), note)

    @classmethod
    def from_matrix(cls, mat, note: str = "") -> "LinearForm":
        return cls(tuple(tuple(int(x) for x in row) for row in np.asarray(mat)), note)

    @classmethod
    def from_r_rows(cls, r_rows: Sequence[Sequence[int]], note: str = "") -> "LinearForm":
        return cls(tuple(tuple(r_to_m(r)) for r in r_rows), note)

    def r_rows(self) -> list[list[int]]:
        out = []
        for k, row in enumerate(self.rows, start=1):
            f = m_to_f(row)
            if f is None:
                raise ValueError(f"c_{k} row {row} is not an r-difference combination")
            out.append(f_to_r(f))
        return out

    def is_r_difference(self) -> bool:
        return all(m_to_f(row) is not None for row in self.rows)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm.from_matrix(self.matrix + other.matrix, self.note)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm.from_matrix(self.matrix - other.matrix, self.note)

    def with_coefficient_zero(self, k: int) -> "LinearForm":
        mat = self.matrix
        mat[k - 1, :] = 0
        return LinearForm.from_matrix(mat, self.note)

    def to_json(self) -> dict:
        return {"t": self.t, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "LinearForm":
        form = cls(tuple(tuple(int(x) for x in r) for r in data["rows"]))
        if form.t != data["t"]:
            raise ValueError("row count does not match t")
        return form

    def describe(self) -> str:
        """Human readable r-basis expansion (falls back to m-basis)."""
        terms = []
        try:
            rows, var = self.r_rows(), "r"
        except ValueError:
            rows, var = [list(r) for r in self.rows], "m"
        for k, row in enumerate(rows, start=1):
            inner = " ".join(f"{'+' if x > 0 else '-'}{abs(x) if abs(x) != 1 else ''}{var}{i}"
                             for i, x in enumerate(row, start=1) if x)
            if inner:
                terms.append(f"c{k}({inner.lstrip('+')})")
        return " + ".join(terms) or "0"


def driving_function(t: int) -> LinearForm:
    """h = -sum c_i m^i."""
    mat = np.zeros((t, t + 1), dtype=np.int64)
    for i in range(t):
        mat[i, i] = -1
    return LinearForm.from_matrix(mat, "driving function")


def tableau_function(d: Diagram) -> LinearForm:
    """Row sum of ``f_{R_u}`` for a complete diagram, as an m-basis form."""
    if not is_complete(d):
        raise DiagramError(f"{d} is not complete")
    t = d.t
    if t > MAX_T:
        raise ValueError(f"t={t} exceeds the supported maximum {MAX_T}")
    r = np.zeros((t, t + 1), dtype=np.int64)
    for u in range(1, d.height + 1):
        cols = d.row(u)
        if u % 2:
            for a, b in zip(cols, cols[1:]):
                r[a - 1, a - 1] += 1
                r[a - 1, b - 1] -= 1
        else:
            for a, b in zip(cols, cols[1:]):
                # -c_{b-1} (r^a - r^b)
                r[b - 2, a - 1] -= 1
                r[b - 2, b - 1] += 1
    return LinearForm.from_r_rows(r.tolist(), f"f{d.heights}")


def class_function(key: ClassKey) -> LinearForm:
    reps = complete_representatives(key, 2)
    forms = [tableau_function(d) for d in reps]
    if any(f != forms[0] for f in forms[1:]):
        raise AssertionError(f"class function of {key} depends on the representative")
    return LinearForm(forms[0].rows, f"f[{key.deplete.heights}]")


def dual_function(f: LinearForm) -> LinearForm:
    """c_i -> c_{t+1-i}, r^i -> r^{t+2-i}, then add sum c_i (r^i - r^{i+1})."""
    t = f.t
    r = f.r_rows()
    out = [[0] * (t + 1) for _ in range(t)]
    for k in range(t):
        for i in range(t + 1):
            out[k][i] = r[t - 1 - k][t - i]
        out[k][k] += 1
        out[k][k + 1] -= 1
    return LinearForm.from_r_rows(out, f"dual of {f.note}" if f.note else "")


def evaluate(f: LinearForm, c_values: Sequence[int]) -> tuple[int, ...]:
    """m-basis vector of the form at the given coefficients."""
    if len(c_values) != f.t:
        raise ValueError(f"expected {f.t} coefficient values, got {len(c_values)}")
    if f.t == 0:
        return (0,)
    vec = np.asarray(c_values, dtype=np.int64) @ f.matrix
    return tuple(int(x) for x in vec)


class Comparison(str, Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare_vectors(a: Sequence[int], b: Sequence[int]) -> Comparison:
    diff = [x - y for x, y in zip(a, b)]
    coords = m_to_f(diff)
    if coords is None:
        raise ValueError("difference is not a combination of r-differences")
    if all(x == 0 for x in coords):
        return Comparison.EQUAL
    if all(x >= 0 for x in coords):
        return Comparison.GREATER
    if all(x <= 0 for x in coords):
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def compare(f: LinearForm, g: LinearForm, c_values: Sequence[int]) -> Comparison:
    return compare_vectors(evaluate(f, c_values), evaluate(g, c_values))


def function_distinct(forms: Iterable[LinearForm], c_values: Sequence[int]) -> bool:
    seen = set()
    for f in forms:
        v = evaluate(f, c_values)
        if v in seen:
            return False
        seen.add(v)
    return True
