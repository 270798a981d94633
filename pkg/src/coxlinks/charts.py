"""Chart labels for the free nested Hilbert scheme and their combinatorics.

A chart is labeled by a *nested set pair* ``S``: two chains of sets

    S_x^1 ⊇ S_x^2 ⊇ … ⊇ S_x^n = ∅,   S_y^1 ⊇ … ⊇ S_y^n = ∅,

with ``S_x^k, S_y^k ⊆ {k+1, …, n}`` and ``|S_x^i| + |S_y^i| = n - i``.
Exactly one new element joins exactly one chain at each level going up, so
there are ``n!`` labels.  (The two chains may overlap: nothing in the
defining conditions forces levelwise disjointness, and the n = 4 chart with
``S_x = {3,4} ⊃ {3}`` and ``S_y = {4} ⊃ {4} ⊃ {4}`` — which is needed below —
has ``4`` in both chains at level 1.)

From a label the chart data is derived:

* pivots  ``P_x(S) = {(i, j) : j ∈ S_x^i \\ S_x^{i+1}}`` (entries pinned to 1),
* constrained zeros ``x_{i-1,j} = 0`` for ``j ∈ S_x^i``, ``i ≥ 2``,
* free coordinates ``N_x, N_y`` (the rest; ``|N_x| + |N_y| = n(n-1)/2``),
* base-point matrices with 1 at the pivots and 0 elsewhere,
* a vector of non-commutative monomials in X, Y and its generalized-Young-
  tableau image.

All values are immutable; every function is pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import CapacityError, ConsistencyError

IndexPair = Tuple[int, int]
Matrix = Tuple[Tuple[int, ...], ...]

MAX_ENUMERATION_N = 9
MAX_INJECTIVITY_N = 7


@dataclass(frozen=True)
class NestedSetPair:
    """The chart label: two nested chains of subsets of {1..n}.

    ``sx[i-1]`` holds the level-``i`` set ``S_x^i`` (1-based levels), and
    likewise for ``sy``.  Validation happens on construction.
    """

    n: int
    sx: Tuple[FrozenSet[int], ...]
    sy: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if len(self.sx) != n or len(self.sy) != n:
            raise ValueError("chains must have exactly n levels")
        for chain, side in ((self.sx, "x"), (self.sy, "y")):
            for level in range(1, n + 1):
                level_set = chain[level - 1]
                if not level_set <= set(range(level + 1, n + 1)):
                    raise ValueError(
                        f"S_{side}^{level} = {sorted(level_set)} is not a "
                        f"subset of {{{level + 1}..{n}}}"
                    )
                if level < n and not chain[level - 1] >= chain[level]:
                    raise ValueError(f"S_{side} chain is not nested at level {level}")
            if chain[n - 1]:
                raise ValueError(f"S_{side}^{n} must be empty")
        for level in range(1, n + 1):
            total = len(self.sx[level - 1]) + len(self.sy[level - 1])
            if total != n - level:
                raise ValueError(
                    f"|S_x^{level}| + |S_y^{level}| = {total}, expected {n - level}"
                )

    @classmethod
    def from_lists(
        cls, n: int, sx: Sequence[Iterable[int]], sy: Sequence[Iterable[int]]
    ) -> "NestedSetPair":
        return cls(
            n,
            tuple(frozenset(level) for level in sx),
            tuple(frozenset(level) for level in sy),
        )

    def flat_key(self) -> tuple:
        """Flattened chain representation, the canonical sort key."""
        return tuple(tuple(sorted(level)) for level in self.sx) + tuple(
            tuple(sorted(level)) for level in self.sy
        )

    def mirror(self) -> "NestedSetPair":
        """Swap the x- and y-chains."""
        return NestedSetPair(self.n, self.sy, self.sx)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "sx": [sorted(level) for level in self.sx],
            "sy": [sorted(level) for level in self.sy],
        }


def enumerate_nested_pairs(n: int) -> List[NestedSetPair]:
    """All nested set pairs for matrix size ``n``, in flat-key order.

    Builds the chains from level ``n`` (both empty) down to level 1; at each
    level one element of ``{level+1..n}`` not already in the chosen chain is
    added to exactly one side.  That yields each of the ``n!`` labels once.

    Raises:
        ValueError: if ``n < 1``.
        CapacityError: if ``n > 9`` (factorial growth).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_ENUMERATION_N:
        raise CapacityError(
            f"chart enumeration is limited to n <= {MAX_ENUMERATION_N} "
            f"(the census is n!, which grows too fast); got n = {n}"
        )
    results: List[NestedSetPair] = []
    empty: FrozenSet[int] = frozenset()

    def descend(level: int, sx_above: list, sy_above: list) -> None:
        # sx_above[0] is the level-(level+1) set; chains grow toward level 1.
        if level == 0:
            results.append(NestedSetPair(n, tuple(sx_above), tuple(sy_above)))
            return
        current_x, current_y = sx_above[0], sy_above[0]
        for element in range(level + 1, n + 1):
            if element not in current_x:
                descend(
                    level - 1,
                    [current_x | {element}] + sx_above,
                    [current_y] + sy_above,
                )
            if element not in current_y:
                descend(
                    level - 1,
                    [current_x] + sx_above,
                    [current_y | {element}] + sy_above,
                )

    if n == 1:
        results.append(NestedSetPair(1, (empty,), (empty,)))
    else:
        descend(n - 1, [empty], [empty])
    results.sort(key=NestedSetPair.flat_key)
    return results


@dataclass(frozen=True)
class Chart:
    """Derived data of one chart label.

    ``px``/``py`` are the pivot index pairs, ``nx``/``ny`` the free
    coordinates, ``zx``/``zy`` the constrained zeros; together they partition
    the strictly upper triangle of each matrix.  ``mx``/``my`` are the
    base-point matrices (pivots 1, everything else 0).
    """

    label: NestedSetPair
    px: FrozenSet[IndexPair]
    py: FrozenSet[IndexPair]
    nx: FrozenSet[IndexPair]
    ny: FrozenSet[IndexPair]
    zx: FrozenSet[IndexPair]
    zy: FrozenSet[IndexPair]
    mx: Matrix
    my: Matrix

    @property
    def n(self) -> int:
        return self.label.n

    def to_record(self) -> dict:
        return {
            "label": self.label.to_record(),
            "pivots": {
                "x": sorted(self.px),
                "y": sorted(self.py),
            },
            "free": {"x": sorted(self.nx), "y": sorted(self.ny)},
            "zeros": {"x": sorted(self.zx), "y": sorted(self.zy)},
            "base_mx": [list(row) for row in self.mx],
            "base_my": [list(row) for row in self.my],
            "monomials": [_word_str(word) for word in monomial_vector(self)],
            "commutes": is_commutative(self),
        }


def _pivots(chain: Tuple[FrozenSet[int], ...], n: int) -> FrozenSet[IndexPair]:
    pivots = set()
    for level in range(1, n):
        for j in chain[level - 1] - chain[level]:
            pivots.add((level, j))
    return frozenset(pivots)


def _zeros(chain: Tuple[FrozenSet[int], ...], n: int) -> FrozenSet[IndexPair]:
    zeros = set()
    for level in range(2, n + 1):
        for j in chain[level - 1]:
            zeros.add((level - 1, j))
    return frozenset(zeros)


def _base_matrix(n: int, pivots: FrozenSet[IndexPair]) -> Matrix:
    rows = [[0] * n for _ in range(n)]
    for i, j in pivots:
        rows[i - 1][j - 1] = 1
    return tuple(tuple(row) for row in rows)


def build_chart(label: NestedSetPair) -> Chart:
    """Derive pivots, free coordinates, zeros, and base matrices of a label."""
    n = label.n
    px = _pivots(label.sx, n)
    py = _pivots(label.sy, n)
    zx = _zeros(label.sx, n)
    zy = _zeros(label.sy, n)
    upper = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    for side, pivots, zeros in (("x", px, zx), ("y", py, zy)):
        if pivots & zeros:
            raise ConsistencyError(f"pivot/zero overlap on side {side}: {pivots & zeros}")
    nx = frozenset(upper - px - zx)
    ny = frozenset(upper - py - zy)
    if len(nx) + len(ny) != n * (n - 1) // 2:
        raise ConsistencyError(
            f"free-coordinate count {len(nx)} + {len(ny)} != n(n-1)/2 for {label}"
        )
    levels_covered = sorted(i for i, _ in px | py)
    if levels_covered != list(range(1, n)):
        raise ConsistencyError(f"pivot levels {levels_covered} do not cover 1..{n - 1}")
    return Chart(
        label=label,
        px=px,
        py=py,
        nx=nx,
        ny=ny,
        zx=zx,
        zy=zy,
        mx=_base_matrix(n, px),
        my=_base_matrix(n, py),
    )


def monomial_vector(chart: Chart) -> Tuple[str, ...]:
    """The non-commutative monomial vector ``(m_1, …, m_n)`` of a chart.

    Words are strings over ``{"X", "Y"}`` with ``""`` standing for 1.  The
    convention (fixed once, asserted uniformly): ``m_1 = 1`` and the pivot at
    level ``i`` prepends its letter to the word of the flag step its column
    points at,

        (i, j) ∈ P_x  ⇒  m_{n+1-i} = "X" + m_{n+1-j}.

    This is forced by the geometry: with quotient basis ``v_k = m_{n+1-k}``
    a pivot ``x_{ij} = 1`` says the matrix X sends basis vector ``v_j`` to
    ``v_i``, i.e. left-multiplying the word ``m_{n+1-j}`` by X yields
    ``m_{n+1-i}``.  Since ``j > i`` the recursion fills indices upward from
    ``m_1`` and is well-founded.  Words need not have length ``k - 1`` (a
    pivot column may point below the previous flag step), but the n words
    are always pairwise distinct — two equal words would force two pivots in
    one column on one side, which the nesting of the chains forbids.  Both
    facts are asserted.
    """
    n = chart.n
    words: List[str | None] = [None] * (n + 1)
    words[1] = ""
    pivot_of_level: Dict[int, tuple[str, int]] = {}
    for i, j in chart.px:
        pivot_of_level[i] = ("X", j)
    for i, j in chart.py:
        pivot_of_level[i] = ("Y", j)
    for level in range(n - 1, 0, -1):
        letter, j = pivot_of_level[level]
        source = words[n + 1 - j]
        if source is None:
            raise ConsistencyError(
                f"monomial recursion at level {level} references m_{n + 1 - j} "
                "before it is produced"
            )
        words[n + 1 - level] = letter + source
    result = tuple(words[1:])
    if any(word is None for word in result) or len(set(result)) != n:
        raise ConsistencyError(f"monomial vector is not a basis: {result!r}")
    return result


def _word_str(word: str) -> str:
    return word if word else "1"


@dataclass(frozen=True)
class GYT:
    """A generalized Young tableau: lattice cells labeled by subsets of {1..n}.

    ``cells`` maps ``(deg_X, deg_Y)`` to the set of indices whose monomial
    has that bidegree.  Stored translation-normalized (minimal occupied cell
    at the origin) and with a canonical sorted form for hashing.
    """

    cells: Tuple[Tuple[IndexPair, FrozenSet[int]], ...]

    @classmethod
    def from_dict(cls, cells: Dict[IndexPair, FrozenSet[int]]) -> "GYT":
        if not cells:
            raise ValueError("a tableau needs at least one cell")
        min_x = min(i for i, _ in cells)
        min_y = min(j for _, j in cells)
        normalized = {
            (i - min_x, j - min_y): frozenset(labels)
            for (i, j), labels in cells.items()
        }
        return cls(tuple(sorted(normalized.items())))

    def as_dict(self) -> Dict[IndexPair, FrozenSet[int]]:
        return dict(self.cells)

    def is_standard(self) -> bool:
        """True when the tableau is a genuine standard Young tableau.

        That means: every cell carries exactly one label, the occupied cells
        form a Young diagram (closed under stepping toward either axis), and
        labels strictly increase along both directions away from the origin.
        """
        cells = self.as_dict()
        if any(len(labels) != 1 for labels in cells.values()):
            return False
        for i, j in cells:
            if i > 0 and (i - 1, j) not in cells:
                return False
            if j > 0 and (i, j - 1) not in cells:
                return False
        label = {cell: min(labels) for cell, labels in cells.items()}
        for i, j in cells:
            for succ in ((i + 1, j), (i, j + 1)):
                if succ in cells and label[succ] <= label[(i, j)]:
                    return False
        return True

    def has_singleton_labels(self) -> bool:
        """True when every cell carries a single label (weaker than standard)."""
        return all(len(labels) == 1 for _, labels in self.cells)

    def to_record(self) -> list:
        return [[list(cell), sorted(labels)] for cell, labels in self.cells]


def to_gyt(chart: Chart) -> GYT:
    """Map a chart to its generalized Young tableau.

    Cell ``(i, j)`` collects every index ``k`` whose monomial ``m_k`` has
    X-degree ``i`` and Y-degree ``j``.  The occupied cells are always
    edge-connected (each word extends another by one letter); this is
    asserted rather than trusted.
    """
    words = monomial_vector(chart)
    cells: Dict[IndexPair, set] = {}
    for k, word in enumerate(words, start=1):
        cell = (word.count("X"), word.count("Y"))
        cells.setdefault(cell, set()).add(k)
    occupied = set(cells)
    frontier = [(0, 0)]
    seen = {(0, 0)}
    while frontier:
        i, j = frontier.pop()
        for neighbor in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if neighbor in occupied and neighbor not in seen:
                seen.add(neighbor)
                frontier.append(neighbor)
    if seen != occupied:
        raise ConsistencyError(f"tableau image is disconnected: {sorted(occupied)}")
    return GYT.from_dict({cell: frozenset(labels) for cell, labels in cells.items()})


def is_commutative(chart: Chart) -> bool:
    """True iff the base-point matrices commute (exact integer arithmetic)."""
    n = chart.n
    mx, my = chart.mx, chart.my

    def matmul(a: Matrix, b: Matrix) -> Matrix:
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    return matmul(mx, my) == matmul(my, mx)


def all_charts(n: int) -> List[Chart]:
    """Every chart for size ``n``, in the canonical label order."""
    return [build_chart(label) for label in enumerate_nested_pairs(n)]


def commuting_charts(n: int) -> List[Chart]:
    """The charts whose base-point matrices commute.

    These are exactly the charts whose tableau is a *hook-shaped* standard
    Young tableau, so there are ``2^(n-1)`` of them.  The first non-hook
    shape (two rows of two cells, n = 4) has a commuting flag of ideals
    whose matrices carry four ones — one more than the ``n - 1`` pivots a
    base point owns — so its tableau is reached only from charts whose base
    points do not commute.
    """
    return [chart for chart in all_charts(n) if is_commutative(chart)]


def standard_tableau_images(n: int) -> Dict[GYT, List[Chart]]:
    """The standard Young tableaux arising as chart images, with preimages.

    The commuting sublocus of the ambient scheme (the locus ``[X, Y] = 0``)
    has one torus-fixed point per standard Young tableau, and each such
    point lies in at least one chart, whose tableau image is that very
    tableau.  So the number of distinct standard images equals the
    independent tableau count — that equality is the cross-check this
    function feeds.  From n = 4 on, a standard image may have several chart
    preimages (the two-by-two tableau is reached by two charts that order
    the letters of the corner word differently), which is also why the
    image map is not injective on the full chart set.
    """
    images: Dict[GYT, List[Chart]] = {}
    for chart in all_charts(n):
        tableau = to_gyt(chart)
        if tableau.is_standard():
            images.setdefault(tableau, []).append(chart)
    return images


def gyt_injectivity_report(n: int) -> dict:
    """Group all charts by tableau image and report any collisions.

    Returns a dict ``{"n": n, "total": #charts, "collisions": [...]}`` where
    each collision lists the full labels of charts sharing one image.  An
    empty collision list is the expected outcome; the report is the
    deliverable either way.
    """
    if n > MAX_INJECTIVITY_N:
        raise CapacityError(
            f"injectivity scan is limited to n <= {MAX_INJECTIVITY_N}; got {n}"
        )
    charts = all_charts(n)
    groups: Dict[tuple, List[Chart]] = {}
    for chart in charts:
        key = to_gyt(chart).cells
        groups.setdefault(key, []).append(chart)
    collisions = [
        {
            "gyt": GYT(cells=key).to_record(),
            "labels": [chart.label.to_record() for chart in group],
        }
        for key, group in sorted(groups.items())
        if len(group) > 1
    ]
    return {"n": n, "total": len(charts), "collisions": collisions}


# -- independent standard-Young-tableaux enumerator -------------------------


def _partitions(n: int, largest: int | None = None) -> Iterable[Tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _filling_count(shape: Tuple[int, ...]) -> int:
    """Number of standard fillings of a Young diagram, by corner removal.

    The largest entry of a standard tableau sits at an outer corner; removing
    it leaves a standard tableau of the smaller shape.  Summing over corners
    gives the count directly, with no product formula involved.
    """
    if not shape:
        return 1
    total = 0
    for row in range(len(shape)):
        is_corner = shape[row] > 0 and (row + 1 == len(shape) or shape[row] > shape[row + 1])
        if is_corner:
            smaller = list(shape)
            smaller[row] -= 1
            while smaller and smaller[-1] == 0:
                smaller.pop()
            total += _filling_count(tuple(smaller))
    return total


def count_standard_tableaux(n: int) -> int:
    """The number of standard Young tableaux with ``n`` cells, any shape.

    This enumerator is independent of the chart machinery above: it sums the
    corner-removal recursion over all partitions of ``n``.  It exists as the
    oracle for the commuting-chart count.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(_filling_count(shape) for shape in _partitions(n))
