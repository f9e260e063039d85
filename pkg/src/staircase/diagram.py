"""Block diagrams of monomial ideals, represented as integer partitions.

A zero-dimensional monomial subscheme of the plane is recorded by its block
diagram: the tuple of row lengths ``(h_1, h_2, ...)`` read bottom-to-top,
weakly decreasing, every entry positive.  The empty tuple is the empty scheme
(unit ideal).  Row ``j`` covers the lattice boxes ``{(a, j-1) : 0 <= a < h_j}``
of monomials *outside* the ideal with y-exponent ``j - 1``.
"""

from __future__ import annotations

import re

Diagram = tuple[int, ...]
Generator = tuple[int, int]  # monomial x^a y^b as the exponent pair (a, b)

EMPTY: Diagram = ()


def as_diagram(rows) -> Diagram:
    """Validate an iterable of row lengths and return it as a diagram tuple.

    Zero rows are dropped; negative or increasing rows are rejected.
    """
    cleaned = []
    for h in rows:
        if h != int(h):
            raise ValueError(f"row length {h!r} is not an integer")
        h = int(h)
        if h < 0:
            raise ValueError(f"row length {h} is negative")
        if h > 0:
            cleaned.append(h)
    for prev, cur in zip(cleaned, cleaned[1:]):
        if cur > prev:
            raise ValueError(
                f"rows must be weakly decreasing bottom-to-top, got {prev} before {cur}"
            )
    return tuple(cleaned)


def degree(diagram: Diagram) -> int:
    """Number of boxes (the length of the subscheme)."""
    return sum(diagram)


def row_count(diagram: Diagram) -> int:
    """Number of rows r(D)."""
    return len(diagram)


def col_count(diagram: Diagram) -> int:
    """Number of columns c(D), the length of the bottom row."""
    return diagram[0] if diagram else 0


def full_row_count(diagram: Diagram) -> int:
    """Number of rows of maximal length c(D)."""
    if not diagram:
        return 0
    return sum(1 for h in diagram if h == diagram[0])


def full_col_count(diagram: Diagram) -> int:
    """Number of columns of maximal height r(D); equals the top row length."""
    return diagram[-1] if diagram else 0


def transpose(diagram: Diagram) -> Diagram:
    """Reflect the diagram across the main diagonal (conjugate partition)."""
    if not diagram:
        return EMPTY
    return tuple(
        sum(1 for h in diagram if h >= c) for c in range(1, diagram[0] + 1)
    )


def slice_above(diagram: Diagram, k: int) -> Diagram:
    """Rows strictly above the k-th: the diagram of the quotient (I : y^k)."""
    _check_nonnegative(k)
    return diagram[k:]


def slice_below(diagram: Diagram, k: int) -> Diagram:
    """The bottom k rows."""
    _check_nonnegative(k)
    return diagram[:k]


def slice_right(diagram: Diagram, k: int) -> Diagram:
    """Columns strictly right of the k-th: the diagram of (I : x^k)."""
    _check_nonnegative(k)
    return tuple(h - k for h in diagram if h > k)


def slice_left(diagram: Diagram, k: int) -> Diagram:
    """The left k columns."""
    _check_nonnegative(k)
    if k == 0:
        return EMPTY
    return tuple(min(h, k) for h in diagram)


def complement_rotate(diagram: Diagram, k: int, i: int) -> Diagram:
    """Complement of the diagram inside a k x i box, rotated half a turn.

    Requires the diagram to fit in the box.  The operation is an involution
    for fixed box dimensions.
    """
    if row_count(diagram) > k or col_count(diagram) > i:
        raise ValueError(
            f"diagram {diagram} does not fit in a {k} x {i} box"
        )
    padded = diagram + (0,) * (k - len(diagram))
    return tuple(i - h for h in reversed(padded) if h < i)


def to_generators(diagram: Diagram) -> tuple[Generator, ...]:
    """Minimal monomial generators (a, b) of the ideal, ordered by falling a.

    The exponents satisfy ``a_1 > ... > a_r = 0`` and ``0 = b_1 < ... < b_r``;
    the empty diagram gives the unit ideal, generated by the monomial 1.
    """
    if not diagram:
        return ((0, 0),)
    gens = [(diagram[0], 0)]
    for j, h in enumerate(diagram[1:], start=2):
        if h < diagram[j - 2]:
            gens.append((h, j - 1))
    gens.append((0, len(diagram)))
    return tuple(gens)


def from_generators(generators) -> Diagram:
    """Diagram of the monomial ideal generated by the exponent pairs given.

    Redundant generators are dropped.  The ideal must contain a pure x-power
    and a pure y-power (otherwise the subscheme is not zero-dimensional).
    """
    gens = sorted(set((int(a), int(b)) for a, b in generators))
    if any(a < 0 or b < 0 for a, b in gens):
        raise ValueError("generator exponents must be nonnegative")
    if not gens:
        raise ValueError("at least one generator is required")
    minimal: list[Generator] = []
    best_b = None  # smallest b seen so far while a increases
    for a, b in gens:  # ascending a, then ascending b
        if best_b is not None and b >= best_b:
            continue
        minimal.append((a, b))
        best_b = b
    if minimal[0][0] != 0:
        raise ValueError("ideal lacks a pure y-power; scheme is not zero-dimensional")
    if minimal[-1][1] != 0:
        raise ValueError("ideal lacks a pure x-power; scheme is not zero-dimensional")
    rows: list[int] = []
    height = minimal[0][1]  # the pure y-power caps the number of rows
    for a, b in minimal[1:]:
        rows.extend([a] * (height - b))
        height = b
    return tuple(sorted(rows, reverse=True))


class IdealSyntaxError(ValueError):
    """Malformed ideal text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


_MONOMIAL = re.compile(r"x(?:\^(\d+))?(?:y(?:\^(\d+))?)?|y(?:\^(\d+))?|1")
_ROWS_ITEM = re.compile(r"\d+")


def parse_ideal(text: str) -> Diagram:
    """Parse ideal text into a diagram.

    Two grammars are accepted, whitespace-insensitive:

    * a comma-separated list of monomials, e.g. ``x^9, x^7y^2, y^8`` (an
      exponent of 1 may be omitted, ``1`` denotes the unit ideal);
    * explicit row lengths, e.g. ``rows:9,9,7,7,6,4,3,3``.

    Syntax problems raise :class:`IdealSyntaxError` with the position of the
    offending character; a well-formed ideal without a pure x- and y-power
    raises a plain :class:`ValueError`.
    """
    compact = "".join(text.split())
    if compact.startswith("rows:"):
        return _parse_rows(compact, len("rows:"))
    if not compact:
        raise IdealSyntaxError("empty ideal text", 0)
    gens: list[Generator] = []
    pos = 0
    while True:
        match = _MONOMIAL.match(compact, pos)
        if match is None or match.end() == match.start():
            raise IdealSyntaxError(
                f"expected a monomial, found {compact[pos:pos + 1]!r}", pos
            )
        token = match.group(0)
        if token == "1":
            gens.append((0, 0))
        elif token.startswith("x"):
            a = int(match.group(1)) if match.group(1) is not None else 1
            if "y" in token:
                b = int(match.group(2)) if match.group(2) is not None else 1
            else:
                b = 0
            gens.append((a, b))
        else:
            b = int(match.group(3)) if match.group(3) is not None else 1
            gens.append((0, b))
        pos = match.end()
        if pos == len(compact):
            break
        if compact[pos] != ",":
            raise IdealSyntaxError(
                f"expected ',' between monomials, found {compact[pos]!r}", pos
            )
        pos += 1
        if pos == len(compact):
            raise IdealSyntaxError("trailing comma", pos)
    return from_generators(gens)


def _parse_rows(compact: str, start: int) -> Diagram:
    if start == len(compact):
        return EMPTY
    rows: list[int] = []
    pos = start
    while True:
        match = _ROWS_ITEM.match(compact, pos)
        if match is None:
            raise IdealSyntaxError(
                f"expected a row length, found {compact[pos:pos + 1]!r}", pos
            )
        rows.append(int(match.group(0)))
        pos = match.end()
        if pos == len(compact):
            break
        if compact[pos] != ",":
            raise IdealSyntaxError(
                f"expected ',' between row lengths, found {compact[pos]!r}", pos
            )
        pos += 1
        if pos == len(compact):
            raise IdealSyntaxError("trailing comma", pos)
    try:
        return as_diagram(rows)
    except ValueError as exc:
        raise IdealSyntaxError(str(exc), start) from exc


def render_ideal(diagram: Diagram) -> str:
    """Inverse of :func:`parse_ideal` for the monomial grammar."""
    return ",".join(_render_monomial(a, b) for a, b in to_generators(diagram))


def _render_monomial(a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "1"
    parts = []
    if a == 1:
        parts.append("x")
    elif a > 1:
        parts.append(f"x^{a}")
    if b == 1:
        parts.append("y")
    elif b > 1:
        parts.append(f"y^{b}")
    return "".join(parts)


def enumerate_diagrams(n: int):
    """Yield every diagram of degree n in reverse-lexicographic order."""
    _check_nonnegative(n)
    yield from _partitions(n, n)


def enumerate_diagrams_upto(n_max: int):
    """Yield every nonempty diagram of degree 1..n_max, degrees ascending."""
    for n in range(1, n_max + 1):
        yield from enumerate_diagrams(n)


def _partitions(n: int, max_part: int):
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _check_nonnegative(k: int) -> None:
    if k < 0:
        raise ValueError(f"slice index must be nonnegative, got {k}")
