"""Pure-Python exact kernels: Bareiss elimination and Faddeev-LeVerrier.

All arithmetic stays on Python ints, so results are exact regardless of
entry size.  The compiled twin in _kernels_cy.pyx implements the same two
functions with the same contracts; powspec.kernels picks one at import.
"""

from __future__ import annotations


def det_bareiss(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    Every interior division is exact by the Sylvester identity, so no
    rational arithmetic is ever needed.  Zero pivots are repaired by row
    swaps; if no swap works the determinant is 0.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for i in range(col + 1, n):
                if m[i][col] != 0:
                    m[col], m[i] = m[i], m[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[col][col]
        mk = m[col]
        for i in range(col + 1, n):
            mi = m[i]
            factor = mi[col]
            for j in range(col + 1, n):
                mi[j] = (mi[j] * pivot - factor * mk[j]) // prev
            mi[col] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def charpoly_leverrier(rows: list[list[int]]) -> list[int]:
    """Coefficients of det(xI - A), ascending, by Faddeev-LeVerrier.

    The trace divisions are exact over the integers; any non-zero
    remainder means corrupted input and raises.  The final Cayley-Hamilton
    residue is checked to be the zero matrix, which makes silent
    miscomputation essentially impossible.
    """
    n = len(rows)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return coeffs
    a = [list(r) for r in rows]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for step in range(1, n + 1):
        # am = a @ m
        am = []
        for i in range(n):
            ai = a[i]
            row = []
            for j in range(n):
                acc = 0
                for t in range(n):
                    acc += ai[t] * m[t][j]
                row.append(acc)
            am.append(row)
        tr = 0
        for i in range(n):
            tr += am[i][i]
        if tr % step != 0:
            raise ArithmeticError("trace division is not exact; input is not an integer matrix")
        c = -(tr // step)
        coeffs[n - step] = c
        for i in range(n):
            am[i][i] += c
        m = am
    for i in range(n):
        for j in range(n):
            if m[i][j] != 0:
                raise ArithmeticError("Cayley-Hamilton residue is non-zero")
    return coeffs
