# cython: language_level=3
"""Compiled exact kernels, contracts identical to _kernels_py.

Arithmetic stays on arbitrary-precision Python ints; only the loop
machinery and list indexing are compiled down to C.
"""


def det_bareiss(rows):
    """Exact determinant by fraction-free Bareiss elimination."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t col, i, j
    cdef int sign = 1
    if n == 0:
        return 1
    m = [list(r) for r in rows]
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
    if sign > 0:
        return m[n - 1][n - 1]
    return -m[n - 1][n - 1]


def charpoly_leverrier(rows):
    """Coefficients of det(xI - A), ascending, by Faddeev-LeVerrier."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t step, i, j, t
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return coeffs
    a = [list(r) for r in rows]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for step in range(1, n + 1):
        am = []
        for i in range(n):
            ai = a[i]
            row = []
            for j in range(n):
                acc = 0
                for t in range(n):
                    acc = acc + ai[t] * m[t][j]
                row.append(acc)
            am.append(row)
        tr = 0
        for i in range(n):
            tr = tr + am[i][i]
        if tr % step != 0:
            raise ArithmeticError("trace division is not exact; input is not an integer matrix")
        c = -(tr // step)
        coeffs[n - step] = c
        for i in range(n):
            am[i][i] = am[i][i] + c
        m = am
    for i in range(n):
        for j in range(n):
            if m[i][j] != 0:
                raise ArithmeticError("Cayley-Hamilton residue is non-zero")
    return coeffs
