"""Exact randomized checks of the determinant identities behind cox_S.

The objects are small matrices over exact scalars (:class:`~fractions.
Fraction` for sampling, :class:`~coxlinks.polyalg.LaurentPoly` for the
symbolic identities).  Roles, enforced by the validators rather than by a
wrapper class:

* ``X`` — upper-triangular (``X`` in the Borel), with ``xhat(X) = X -
  x_11 Id``;
* ``g`` — invertible; the interesting locus is Hessenberg ``g``
  (``g_ij = 0`` for ``i - j > 1``);
* ``K`` — strictly upper-triangular.

``F(i, X, g)`` is the determinant of the ``(i+1) x (i+1)`` matrix whose
columns are the first ``i+1`` entries of ``g``'s columns ``1..i`` followed
by the first ``i+1`` entries of ``xhat(X)``'s column ``i+1``.  On the locus
``F_1 = ... = F_{n-1} = 0`` with ``g`` Hessenberg, column ``i+1`` of
``xhat(X)`` is a combination of ``g``'s columns ``1..i``, so ``xhat(X) =
g K`` with ``K`` strictly upper and ``g^-1 X g = K g + x_11 Id`` is
upper-triangular.  The suites here check exactly that story, forwards
(by-construction samples must pass) and backwards (dropping the Hessenberg
condition must break containment), with fixed seeds and exact arithmetic;
nothing is asserted beyond the identities themselves.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import SingularMatrixError
from .polyalg import LaurentPoly

Matrix = Tuple[tuple, ...]


# -- construction and validation ----------------------------------------------


def matrix_from_rows(rows: Sequence[Sequence]) -> Matrix:
    """Freeze rows into a square matrix, coercing ints to Fractions."""
    frozen = tuple(
        tuple(Fraction(v) if isinstance(v, int) else v for v in row)
        for row in rows
    )
    n = len(frozen)
    if any(len(row) != n for row in frozen):
        raise ValueError("matrix must be square")
    return frozen


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(a: Matrix, scalar) -> Matrix:  # noqa: ANN001
    return tuple(tuple(scalar * v for v in row) for row in a)


def is_upper(a: Matrix) -> bool:
    return all(not a[i][j] for i in range(len(a)) for j in range(i))


def is_strictly_upper(a: Matrix) -> bool:
    return all(not a[i][j] for i in range(len(a)) for j in range(i + 1))


def is_hessenberg(a: Matrix) -> bool:
    return all(not a[i][j] for i in range(len(a)) for j in range(len(a)) if i - j > 1)


def xhat(x: Matrix) -> Matrix:
    """``X - x_11 Id``, the column source for the determinant functions."""
    n = len(x)
    return tuple(
        tuple(x[i][j] - (x[0][0] if i == j else 0) for j in range(n))
        for i in range(n)
    )


def mat_inverse(g: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination over Fractions.

    Raises:
        SingularMatrixError: no inverse exists.
    """
    n = len(g)
    work = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(g)]
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if work[r][col] != 0), None
        )
        if pivot_row is None:
            raise SingularMatrixError(f"matrix has no inverse (rank < {n})")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [v / pivot for v in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def det(a: Matrix):  # noqa: ANN201
    """Determinant by first-column cofactor expansion.

    Generic over the scalar ring (Fractions and LaurentPoly both work);
    fine for the sizes here (at most 6 x 6).
    """
    n = len(a)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return a[0][0]
    total = None
    for i in range(n):
        entry = a[i][0]
        if not entry:
            continue
        minor = tuple(row[1:] for r, row in enumerate(a) if r != i)
        term = entry * det(minor)
        if i % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        zero_like = a[0][0]
        return zero_like - zero_like  # zero of the scalar ring
    return total


# -- the determinant functions and containment --------------------------------


def F(i: int, x: Matrix, g: Matrix):  # noqa: ANN201
    """The ``i``-th determinant function, ``1 <= i <= n-1``.

    Examples:
        >>> x = matrix_from_rows([[1, 5, 7], [0, 2, 6], [0, 0, 3]])
        >>> [F(i, x, identity_matrix(3)) for i in (1, 2)]
        [Fraction(1, 1), Fraction(2, 1)]
    """
    n = len(x)
    if not 1 <= i <= n - 1:
        raise ValueError(f"i must lie in 1..{n - 1}, got {i}")
    hat = xhat(x)
    size = i + 1
    columns = [
        tuple(g[row][col] for row in range(size)) for col in range(i)
    ]
    columns.append(tuple(hat[row][i] for row in range(size)))
    return det(tuple(zip(*columns)))


def all_F(x: Matrix, g: Matrix) -> List:
    return [F(i, x, g) for i in range(1, len(x))]


def hessenberg_check(g: Matrix, x: Matrix) -> bool:
    """Whether ``g^-1 X g`` is upper-triangular, exactly.

    The name records the locus this certifies: for invertible Hessenberg
    ``g`` with all ``F_i = 0`` the answer is always ``True``.  The check
    itself accepts any invertible ``g`` (the negative control feeds it
    non-Hessenberg samples on purpose).

    Raises:
        SingularMatrixError: ``g`` is not invertible.
    """
    return is_upper(mat_mul(mat_mul(mat_inverse(g), x), g))


def commutator(x: Matrix, y: Matrix) -> Matrix:
    return mat_add(mat_mul(x, y), mat_scale(mat_mul(y, x), Fraction(-1)))


def commutator_entries(
    x: Matrix, y: Matrix, link_s: Sequence[int] = ()
) -> List[Tuple[Tuple[int, int], object]]:
    """Commutator entries over the Koszul index set, 1-based pairs.

    The index set is all ``(i, j)`` with ``j - i > 1`` plus ``(i, i+1)``
    for each ``i`` in ``link_s`` — the same extension rule the weights
    module uses for its obstruction list.  For strictly upper-triangular
    arguments every entry outside this set (with empty ``link_s``)
    vanishes identically, so all-zero entries here is equivalent to the
    matrices commuting.

    Examples:
        >>> e12 = matrix_from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
        >>> e23 = matrix_from_rows([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
        >>> commutator_entries(e12, e23)
        [((1, 3), Fraction(1, 1))]
    """
    n = len(x)
    bracket = commutator(x, y)
    link_set = set(link_s)
    for i in link_set:
        if not 1 <= i <= n - 1:
            raise ValueError(f"link_s entry {i} outside 1..{n - 1}")
    pairs = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if j - i > 1 or i in link_set
    ]
    return [((i, j), bracket[i - 1][j - 1]) for (i, j) in pairs]


# -- seeded sampling suites ----------------------------------------------------


def _sample_entry(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9))


def sample_hessenberg(rng: random.Random, n: int) -> Matrix:
    """Random invertible Hessenberg matrix, entries in -9..9."""
    while True:
        g = tuple(
            tuple(
                _sample_entry(rng) if i - j <= 1 else Fraction(0)
                for j in range(n)
            )
            for i in range(n)
        )
        try:
            mat_inverse(g)
        except SingularMatrixError:
            continue
        return g


def sample_strictly_upper(rng: random.Random, n: int) -> Matrix:
    return tuple(
        tuple(_sample_entry(rng) if j > i else Fraction(0) for j in range(n))
        for i in range(n)
    )


def containment_suite(n: int, samples: int, seed: int) -> dict:
    """By-construction positive suite: Hessenberg ``g``, ``xhat(X) = g K``.

    Every sample must have all ``F_i = 0`` and ``g^-1 X g`` upper; any
    violation is reported with its sample index.
    """
    rng = random.Random(seed)
    failures = []
    for sample in range(samples):
        g = sample_hessenberg(rng, n)
        k = sample_strictly_upper(rng, n)
        c = _sample_entry(rng)
        x = mat_add(mat_mul(g, k), mat_scale(identity_matrix(n), c))
        if not is_upper(x):
            failures.append({"sample": sample, "reason": "X not upper"})
            continue
        values = all_F(x, g)
        if any(values):
            failures.append({"sample": sample, "reason": f"F = {values}"})
        elif not hessenberg_check(g, x):
            failures.append({"sample": sample, "reason": "containment failed"})
    return {
        "n": n,
        "samples": samples,
        "seed": seed,
        "failures": failures,
        "passed": not failures,
    }


def negative_control(n: int, samples: int, seed: int) -> dict:
    """Drop the Hessenberg condition and watch containment break.

    Samples use the same ``xhat(X) = g K`` construction (so all ``F_i``
    still vanish) but ``g`` gets a nonzero entry two steps below the
    diagonal.  The suite passes when at least one sample fails
    containment — that failure is the point: the Hessenberg condition is
    doing real work in the containment argument.
    """
    if n < 3:
        raise ValueError("the negative control needs n >= 3 for a (3,1) entry")
    rng = random.Random(seed)
    broken = 0
    checked = 0
    for _ in range(samples):
        g_rows = [list(row) for row in sample_hessenberg(rng, n)]
        g_rows[2][0] = Fraction(rng.randint(1, 9))
        g = tuple(tuple(row) for row in g_rows)
        try:
            mat_inverse(g)
        except SingularMatrixError:
            continue
        k = sample_strictly_upper(rng, n)
        x = mat_mul(g, k)  # xhat(X) itself; x_11 = 0 since K kills column 1
        checked += 1
        assert not any(all_F(x, g))
        if not hessenberg_check(g, x):
            broken += 1
    return {
        "n": n,
        "samples": samples,
        "checked": checked,
        "seed": seed,
        "containment_failures": broken,
        "passed": broken > 0,
    }


# -- symbolic identities -------------------------------------------------------


def symbolic_gid_check(n: int) -> bool:
    """``F_i`` at ``g = Id`` equals ``x_{i+1,i+1} - x_11`` as a polynomial.

    Builds ``X`` with one Laurent variable per upper-triangular entry and
    compares the determinant symbolically; exact, no interpolation.

    Examples:
        >>> all(symbolic_gid_check(n) for n in (2, 3, 4))
        True
    """
    names = tuple(
        f"x{i}{j}" for i in range(1, n + 1) for j in range(i, n + 1)
    )
    zero = LaurentPoly.zero(names)
    one = LaurentPoly.one(names)

    def var(i: int, j: int) -> LaurentPoly:
        return LaurentPoly.variable(names, f"x{i}{j}")

    x = tuple(
        tuple(var(i, j) if i <= j else zero for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    g = tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )
    for i in range(1, n):
        expected = var(i + 1, i + 1) - var(1, 1)
        if F(i, x, g) != expected:
            return False
    return True
