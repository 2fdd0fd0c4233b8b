"""Small dense linear algebra over exact fields.

Entries only need ``+ - * /`` and a zero test, so the same routines work for
``Fraction`` and for :class:`~qotoric.cyclotomic.CyclotomicNumber`.
"""
from fractions import Fraction


def _is_zero(x):
    return x == 0


def _lift(rows):
    return [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    A = _lift(rows)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if not _is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and not _is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[0])


def nullspace(rows, ncols):
    """Basis of ``{x : rows @ x = 0}`` as a list of vectors."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve_left(A, b):
    """Solve ``y @ A = b`` for a row vector y, or return None if inconsistent.

    A is a list of rows; the solution is unique when the rows are independent.
    """
    k = len(A)
    n = len(b)
    # transpose: A^T y^T = b^T, augmented
    aug = [[A[i][j] for i in range(k)] + [b[j]] for j in range(n)]
    R, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    y = [Fraction(0)] * k
    for row, p in zip(R, pivots):
        y[p] = row[k]
    return y


def det(M):
    """Determinant by fraction-producing Gaussian elimination."""
    A = _lift(M)
    n = len(A)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if not _is_zero(A[i][c])), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            result = -result
        result *= A[c][c]
        for i in range(c + 1, n):
            if not _is_zero(A[i][c]):
                f = A[i][c] / A[c][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return result


def inverse(M):
    n = len(M)
    aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*B)] for row in A]
