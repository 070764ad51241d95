"""Small exact linear algebra over the rationals (list-of-list matrices).

Everything uses fractions.Fraction; matrices are lists of row lists.  Sizes
here are tiny (modular symbol spaces, order bases for oracles), so clarity
beats asymptotics.
"""

from fractions import Fraction


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a, b):
    rb = len(b)
    cb = len(b[0])
    out = []
    for row in a:
        new = [Fraction(0)] * cb
        for k in range(rb):
            v = row[k]
            if v:
                brow = b[k]
                for j in range(cb):
                    if brow[j]:
                        new[j] += v * brow[j]
        out.append(new)
    return out


def mat_vec(a, v):
    return [sum((row[k] * v[k] for k in range(len(v)) if v[k]), Fraction(0))
            for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(mat):
    """Reduced row echelon form (copy); returns (rref_matrix, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def kernel(mat):
    """Right kernel basis (list of column vectors) of the matrix."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows == 0:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(cols)]
                for j in range(cols)]
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve_matrix(a_cols, b_cols):
    """Solve A X = B column-wise where A has full column rank.

    a_cols, b_cols are matrices (rows x k), (rows x l); returns X (k x l).
    Raises if the system is inconsistent.
    """
    rows = len(a_cols)
    k = len(a_cols[0])
    l = len(b_cols[0])
    aug = [list(a_cols[i]) + list(b_cols[i]) for i in range(rows)]
    red, pivots = rref(aug)
    if any(p >= k for p in pivots):
        raise ValueError("inconsistent linear system")
    if len(pivots) != k:
        raise ValueError("coefficient matrix does not have full column rank")
    x = zeros(k, l)
    for r, pc in enumerate(pivots):
        for j in range(l):
            x[pc][j] = red[r][k + j]
    return x


def charpoly(a):
    """Characteristic polynomial det(x*I - A) as a constant-first coefficient
    list, via Faddeev-LeVerrier (exact over Q, divisions only by integers)."""
    n = len(a)
    acc = identity(n)
    out = [Fraction(1)]
    for k in range(1, n + 1):
        acc = mat_mul(a, acc)
        tr = sum(acc[i][i] for i in range(n))
        c = -tr / k
        out.append(c)
        for i in range(n):
            acc[i][i] += c
    return list(reversed(out))


def poly_of_matrix(coeffs, a):
    """Evaluate a polynomial (constant-first Fractions/ints) at a matrix."""
    n = len(a)
    acc = zeros(n, n)
    for c in reversed(coeffs):
        acc = mat_mul(a, acc)
        for i in range(n):
            acc[i][i] += c
    return acc


def det(a):
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d
