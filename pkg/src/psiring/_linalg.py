"""Exact integer matrices as tuples of row tuples."""


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def matadd(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def combine(coeffs, mats, rows, cols):
    """sum(c * M) over paired coefficients and matrices."""
    out = zeros(rows, cols)
    for c, m in zip(coeffs, mats):
        if c:
            out = matadd(out, scale(c, m))
    return out
