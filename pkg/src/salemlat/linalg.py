"""Exact linear algebra over the integers and rationals.

Matrices are tuples of tuples (rows). Integer routines never leave the
integers; rational routines use fractions.Fraction. Nothing here is
tolerant of floating point, by design.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def freeze(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> IntMatrix:
    return tuple((0,) * n for _ in range(m))


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(a, k):
    return tuple(tuple(k * x for x in row) for row in a)


def mat_pow(a: IntMatrix, k: int) -> IntMatrix:
    """a**k by binary powering; k < 0 uses the exact unimodular inverse."""
    n = len(a)
    if k < 0:
        a = unimodular_inverse(a)
        k = -k
    result = identity(n)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def det_bareiss(a: IntMatrix) -> int:
    """Exact integer determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly_coeffs(a: IntMatrix) -> list[int]:
    """Coefficients of det(tI - a), ascending degree, by Faddeev-LeVerrier.

    All intermediate matrices are integral; the trace divisions are exact.
    """
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = a
    c = -sum(m[i][i] for i in range(n))
    if n >= 1:
        coeffs[n - 1] = c
    for k in range(2, n + 1):
        m = mat_mul(a, mat_add(m, mat_scale(identity(n), c)))
        tr = sum(m[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
    return coeffs


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1."""
    inv = fraction_inverse(a)
    out = []
    for row in inv:
        out_row = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out_row.append(x.numerator)
        out.append(tuple(out_row))
    return tuple(out)


def fraction_inverse(a) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def fraction_solve(a, b) -> list[Fraction] | None:
    """Solve a x = b exactly; None when inconsistent.

    Accepts rectangular systems (least constraints ignored are detected as
    inconsistency). a is m x n, b length m.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, m):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv_p = 1 / aug[row][col]
        aug[row] = [x * inv_p for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, c in pivots:
        x[c] = aug[r][n]
    return x


def rational_rank(a) -> int:
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    work = [[Fraction(x) for x in row] for row in a]
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if work[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv_p = 1 / work[rank][col]
        work[rank] = [x * inv_p for x in work[rank]]
        for r in range(m):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


def adjugate(a: IntMatrix) -> IntMatrix:
    """Adjugate matrix: det(a) * a^{-1}, always integral."""
    d = det_bareiss(a)
    if d == 0:
        raise ValueError("adjugate of a singular matrix is not supported here")
    inv = fraction_inverse(a)
    out = []
    for row in inv:
        out_row = []
        for x in row:
            y = x * d
            assert y.denominator == 1
            out_row.append(y.numerator)
        out.append(tuple(out_row))
    return tuple(out)


def _centered_quotient(a: int, b: int) -> int:
    """q with |a - q b| <= |b| / 2."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (u, d, v) with u*a*v = d, u, v unimodular, d diagonal.

    Diagonal entries are non-negative and form a divisibility chain
    d1 | d2 | ... At every round the globally smallest nonzero entry of
    the trailing block becomes the pivot and reductions use centered
    quotients, which keeps intermediate entries under control.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(row) for row in a]
    u = [list(row) for row in identity(m)]
    v = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in d:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def move_min_pivot(t) -> bool:
        piv = None
        best = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                x = abs(row[j])
                if x != 0 and (best is None or x < best):
                    best = x
                    piv = (i, j)
                    if x == 1:
                        break
            if best == 1:
                break
        if piv is None:
            return False
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        return True

    t = 0
    while t < min(m, n):
        if not move_min_pivot(t):
            break
        while True:
            # reduce the pivot column, then the pivot row
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    add_row(i, t, -_centered_quotient(d[i][t], d[t][t]))
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    add_col(j, t, -_centered_quotient(d[t][j], d[t][t]))
            if any(d[i][t] for i in range(t + 1, m)) or \
               any(d[t][j] for j in range(t + 1, n)):
                # a remainder survived; it is at most half the pivot
                move_min_pivot(t)
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return freeze(u), freeze(d), freeze(v)


def snf_diagonal(a: IntMatrix) -> list[int]:
    _, d, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def integer_rank(a: IntMatrix) -> int:
    return sum(1 for x in snf_diagonal(a) if x != 0)


def integer_kernel(a: IntMatrix) -> IntMatrix:
    """Basis (rows) of {x : a x = 0} over the integers. Always saturated."""
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return identity(n)
    _, d, v = smith_normal_form(a)
    r = sum(1 for i in range(min(m, n)) if d[i][i] != 0)
    cols = []
    for j in range(r, n):
        cols.append(tuple(v[i][j] for i in range(n)))
    return tuple(cols)


def hermite_normal_form(a: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form with zero rows dropped.

    Pivots are positive, entries above a pivot are reduced to [0, pivot).
    The result is a canonical basis of the row space, so two integer
    matrices span the same sublattice iff their HNFs are equal.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [list(r) for r in a]
    pivot_rows: list[list[int]] = []
    col = 0
    while col < n and rows:
        sel = [r for r in rows if r[col] != 0]
        if not sel:
            col += 1
            continue
        while True:
            sel.sort(key=lambda r: abs(r[col]))
            piv = sel[0]
            done = True
            for r in sel[1:]:
                q = r[col] // piv[col]
                for j in range(n):
                    r[j] -= q * piv[j]
                if r[col] != 0:
                    done = False
            sel = [piv] + [r for r in sel[1:] if r[col] != 0]
            if done or len(sel) == 1:
                break
        if piv[col] < 0:
            for j in range(n):
                piv[j] = -piv[j]
        for r in pivot_rows:
            q = r[col] // piv[col]
            if q:
                for j in range(n):
                    r[j] -= q * piv[j]
        pivot_rows.append(piv)
        rows = [r for r in rows if r is not piv and any(r)]
        col += 1
    return freeze(pivot_rows)


def row_stack(*mats: IntMatrix) -> IntMatrix:
    rows: list[tuple[int, ...]] = []
    for m in mats:
        rows.extend(m)
    return tuple(rows)
