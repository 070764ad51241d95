"""p-maximal orders in number fields Z[x]/(P) and prime decomposition data.

The chain: Dedekind's criterion decides p-maximality of the equation order
cheaply; when it fails, the multiplier-ring enlargement loop grows the order
until stable (radical of O/pO via iterated Frobenius kernels, then the ring
of multipliers of p*O + radical).  The stable order yields
v_p(Disc K) = v_p(disc P) - 2 * v_p(index), and splitting the F_p-algebra
O/pO by lifted idempotents yields the residue degrees f_i and ramification
indices e_i of the primes above p.

All linear algebra runs over Z/p^K with explicit precision accounting; K is
chosen from the current denominator depth and raised automatically if a
division assertion ever fires.
"""

from dataclasses import dataclass

from . import gfp
from .intpoly import IntPoly, discriminant


class PrecisionError(Exception):
    """Internal p-adic precision was insufficient; retried with more."""


@dataclass(frozen=True)
class OrderBasis:
    """Order in Q[x]/(P): row i of `rows` divided by p^denom_exp is the i-th
    basis element in the power basis.  Rows form a lower-triangular Hermite
    form with p-power pivots."""
    p: int
    n: int
    denom_exp: int
    rows: tuple            # tuple of row tuples (ints)
    index_valuation: int   # v_p of the index [O : Z[x]/(P)]

    def pivot_exponents(self):
        out = []
        for j in range(self.n):
            v = self.rows[j][j]
            a = 0
            while v % self.p == 0:
                v //= self.p
                a += 1
            out.append(a)
        return out

    def to_text(self):
        lines = [f"n {self.n}", f"p {self.p}", f"denom_exp {self.denom_exp}",
                 f"index_valuation {self.index_valuation}"]
        for row in self.rows:
            lines.append("row " + " ".join(str(x) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        vals = {}
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, rest = line.split(None, 1)
            if key == "row":
                rows.append(tuple(int(x) for x in rest.split()))
            else:
                vals[key] = int(rest)
        return cls(vals["p"], vals["n"], vals["denom_exp"], tuple(rows),
                   vals["index_valuation"])


def _power_basis_order(p, n):
    rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return OrderBasis(p, n, 0, rows, 0)


def _hnf_rows(rows, n, p, K):
    """Hermite form (lower triangular, p-power pivots) of the Z_p-lattice
    spanned by the given integer rows, computed mod p^K.  Unit scalings are
    harmless: only the Z_p-lattice matters downstream."""
    pK = p ** K
    basis = [None] * n
    aexp = [0] * n
    for raw in rows:
        row = [x % pK for x in raw]
        while True:
            j = n - 1
            while j >= 0 and row[j] == 0:
                j -= 1
            if j < 0:
                break
            v = row[j]
            a = 0
            while v % p == 0:
                v //= p
                a += 1
            if a >= K:
                raise PrecisionError("pivot valuation reached the precision")
            if basis[j] is None:
                u_inv = pow(v, -1, pK)
                basis[j] = [(x * u_inv) % pK for x in row]
                aexp[j] = a
                break
            if a < aexp[j]:
                basis[j], row = row, basis[j]
                vv = basis[j][j]
                a2 = 0
                while vv % p == 0:
                    vv //= p
                    a2 += 1
                u_inv = pow(vv, -1, pK)
                basis[j] = [(x * u_inv) % pK for x in basis[j]]
                aexp[j] = a2
            piv = p ** aexp[j]
            c = row[j] // piv
            brow = basis[j]
            row = [(row[t] - c * brow[t]) % pK for t in range(n)]
    if any(b is None for b in basis):
        raise ValueError("rows do not span a full-rank lattice")
    # reduce off-diagonal entries modulo the pivot of their column
    for i in range(n):
        for j in range(i - 1, -1, -1):
            piv = p ** aexp[j]
            c = basis[i][j] // piv
            if c:
                brow = basis[j]
                basis[i] = [(basis[i][t] - c * brow[t]) % pK
                            for t in range(n)]
    return [tuple(r) for r in basis], aexp


def _normalize_order(p, n, denom, rows, K):
    """Drop common p factors between the rows and the denominator."""
    while denom > 0 and all(x % p == 0 for row in rows for x in row):
        rows = [tuple(x // p for x in row) for row in rows]
        denom -= 1
    hnf, aexp = _hnf_rows(rows, n, p, K)
    idx = denom * n - sum(aexp)
    return OrderBasis(p, n, denom, tuple(hnf), idx)


def _working_precision(order):
    n, d = order.n, order.denom_exp
    return max(n * d + d + 10, n + 10)


def _structure_table(order, P, K=None):
    """Coordinates of b_i * b_j in the order basis, mod p^(K - loss).

    Entries are plain ints, correct modulo at least p^2 by the choice of K;
    exactness of every p-power division is asserted and surfaces precision
    bugs as PrecisionError.
    """
    p, n, d = order.p, order.n, order.denom_exp
    if K is None:
        K = _working_precision(order)
    pK = p ** K
    pbar = [c % pK for c in P.coeffs]
    aexp = order.pivot_exponents()
    rows = [list(r) for r in order.rows]
    pd = p ** d

    def polymul_mod(u, v):
        out = [0] * (2 * n - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        out[i + j] += a * b
        out = [x % pK for x in out]
        # reduce modulo the monic P
        for k in range(2 * n - 2, n - 1, -1):
            c = out[k]
            if c:
                out[k] = 0
                base = k - n
                for t in range(n):
                    out[base + t] = (out[base + t] - c * pbar[t]) % pK
        return out[:n]

    def backsolve(vec):
        cur = list(vec)
        y = [0] * n
        for j in range(n - 1, -1, -1):
            piv = p ** aexp[j]
            c = cur[j] % pK
            if c % piv:
                raise PrecisionError("division by pivot not exact")
            yj = c // piv
            y[j] = yj
            if yj:
                brow = rows[j]
                for t in range(j + 1):
                    if brow[t]:
                        cur[t] = (cur[t] - yj * brow[t]) % pK
        return y

    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = polymul_mod(rows[i], rows[j])
            if d:
                w = []
                for c in v:
                    c %= pK
                    if c % pd:
                        raise PrecisionError("product not divisible by p^d")
                    w.append(c // pd)
            else:
                w = v
            y = backsolve(w)
            table[i][j] = y
            table[j][i] = y
    return table


def _mult_mod(u, v, table, p, n):
    """Product of two O/pO elements in order coordinates."""
    out = [0] * n
    for i in range(n):
        ui = u[i] % p
        if ui:
            ti = table[i]
            for j in range(n):
                vj = v[j] % p
                if vj:
                    c = ui * vj
                    row = ti[j]
                    for t in range(n):
                        if row[t]:
                            out[t] += c * row[t]
    return [x % p for x in out]


def _kernel_mod_p(mat, p):
    """Right kernel basis of a matrix (list of rows) over F_p."""
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for rr, pc in enumerate(pivots):
            v[pc] = (-rows[rr][fc]) % p
        basis.append(v)
    return basis


def _radical_basis(table, p, n):
    """Basis of the radical of O/pO: kernel of the iterated Frobenius."""
    # columns of the Frobenius matrix: b_i^p in order coordinates mod p
    frob_cols = []
    for i in range(n):
        e = [1 if t == i else 0 for t in range(n)]
        acc = None
        base = e
        m = p
        while m:
            if m & 1:
                acc = base if acc is None else _mult_mod(acc, base, table, p, n)
            m >>= 1
            if m:
                base = _mult_mod(base, base, table, p, n)
        frob_cols.append(acc)
    # iterate until p^j >= n
    j = 1
    power = p
    mat = [[frob_cols[i][t] for i in range(n)] for t in range(n)]  # t rows
    while power < n:
        mat = [[sum(mat[t][k] * frob_cols[i][k] for k in range(n)) % p
                for i in range(n)] for t in range(n)]
        power *= p
        j += 1
    # kernel of x -> x^(p^j): columns index the input coordinates
    return _kernel_mod_p(mat, p)


def _multiplier_kernel(order, table, rad_rows):
    """Coordinate vectors u (mod p) with u * I_p inside p * I_p, where
    I_p = pO + radical; these are the new basis directions (1/p) u."""
    p, n = order.p, order.n
    stack = [[p if i == j else 0 for j in range(n)] for i in range(n)]
    stack.extend(rad_rows)
    g_rows, g_aexp = _hnf_rows(stack, n, p, 6)
    p6 = p ** 6

    def backsolve_g(vec):
        cur = [x % p6 for x in vec]
        y = [0] * n
        for j in range(n - 1, -1, -1):
            piv = p ** g_aexp[j]
            c = cur[j]
            if c % piv:
                raise PrecisionError("ideal coordinates not integral")
            yj = c // piv
            y[j] = yj
            if yj:
                brow = g_rows[j]
                for t in range(j + 1):
                    if brow[t]:
                        cur[t] = (cur[t] - yj * brow[t]) % p6
        return y

    cond_rows = []
    for i in range(n):
        big_row = []
        for k in range(n):
            # b_i * gamma_k in order coordinates
            vec = [0] * n
            for m in range(n):
                gm = g_rows[k][m]
                if gm:
                    tim = table[i][m]
                    for t in range(n):
                        if tim[t]:
                            vec[t] += gm * tim[t]
            z = backsolve_g(vec)
            big_row.extend(x % p for x in z)
        cond_rows.append(big_row)
    # kernel of u -> (coords of u * gamma_k mod p): transpose so that the
    # unknowns u_i are the columns
    mat = [[cond_rows[i][c] for i in range(n)] for c in range(n * n)]
    return _kernel_mod_p(mat, p)


def p_maximal_order(P, p, max_iterations=None):
    """A p-maximal order containing Z[x]/(P), via multiplier-ring growth.

    P must be monic (normalize non-monic input with monicize()); it should be
    irreducible, which callers certify separately.  The returned order is
    stable under the enlargement step, which is the p-maximality certificate.
    """
    if not P.is_monic:
        raise ValueError("p_maximal_order needs a monic polynomial "
                         "(apply monicize first)")
    n = P.degree
    v = disc_power_valuation(P, p)
    if max_iterations is None:
        max_iterations = v // 2 + 2
    order = _power_basis_order(p, n)
    if v <= 1:
        return order
    for _ in range(max_iterations):
        K = _working_precision(order)
        for attempt in range(4):
            try:
                table = _structure_table(order, P, K)
                rad = _radical_basis(table, p, n)
                mult = _multiplier_kernel(order, table, rad)
                break
            except PrecisionError:
                K *= 2
        else:
            raise PrecisionError(f"precision did not stabilize at p={p}")
        if not mult:
            return order
        pK = p ** K
        new_rows = [tuple((p * x) % pK for x in row) for row in order.rows]
        rows = list(new_rows)
        for u in mult:
            vec = [0] * n
            for i, ui in enumerate(u):
                if ui:
                    row = order.rows[i]
                    for t in range(n):
                        if row[t]:
                            vec[t] += ui * row[t]
            rows.append(tuple(x % pK for x in vec))
        order = _normalize_order(p, n, order.denom_exp + 1, rows, K)
        if 2 * order.index_valuation > v:
            raise RuntimeError("index exceeded the discriminant bound; "
                               "input is likely not squarefree")
    raise RuntimeError(f"maximal order at {p} did not stabilize")


_DISC_CACHE = {}


def disc_power_valuation(P, p):
    """v_p(disc P), with the exact discriminant cached per polynomial."""
    key = P.coeffs
    if key not in _DISC_CACHE:
        _DISC_CACHE[key] = discriminant(P)
    d = _DISC_CACHE[key]
    if d == 0:
        raise ValueError("zero discriminant: input not squarefree")
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return v


def dedekind_test(P, p):
    """Dedekind's criterion at p for the equation order Z[x]/(P).

    Returns a dict with "maximal" and, when not maximal, the one-step
    enlargement as an OrderBasis (index valuation = deg of the obstruction).
    """
    if not P.is_monic:
        raise ValueError("dedekind_test needs a monic polynomial")
    n = P.degree
    fbar = P.mod_small(p)
    _, facs = gfp.factor(fbar, p)
    g_rad = [1]
    for g, _e in facs:
        g_rad = gfp.mul(g_rad, g, p)
    h_bar = gfp.divmod_poly(fbar, g_rad, p)[0]
    g_lift = IntPoly(list(g_rad))
    h_lift = IntPoly(list(h_bar))
    diff = g_lift * h_lift - P
    f_poly = IntPoly([c // p for c in diff.coeffs])
    assert all(c % p == 0 for c in diff.coeffs), "Dedekind lift failed"
    u = gfp.gcd(gfp.gcd(g_rad, h_bar, p), f_poly.mod_small(p), p)
    m = gfp.degree(u)
    if m <= 0:
        return {"maximal": True, "order": _power_basis_order(p, n),
                "obstruction_degree": 0}
    t_bar = gfp.divmod_poly(fbar, u, p)[0]
    rows = [tuple(p if i == j else 0 for j in range(n)) for i in range(n)]
    for j in range(m):
        shifted = [0] * j + list(t_bar)
        shifted += [0] * (n - len(shifted))
        rows.append(tuple(shifted[:n]))
    order = _normalize_order(p, n, 1, rows, 6)
    assert order.index_valuation == m, (order.index_valuation, m)
    return {"maximal": False, "order": order, "obstruction_degree": m}


def disc_valuation(P, p, order=None):
    """v_p(Disc K) = v_p(disc P) - 2 * v_p(index of the p-maximal order)."""
    v = disc_power_valuation(P, p)
    if v == 0:
        return 0
    if order is None:
        order = p_maximal_order(P, p)
    out = v - 2 * order.index_valuation
    assert out >= 0, "index valuation exceeds half the discriminant valuation"
    return out


def monicize(P):
    """Monic integer polynomial with the same field: lc^(n-1) P(x / lc)."""
    if P.is_monic:
        return P
    n = P.degree
    lc = P.lc
    coeffs = [c * lc ** (n - 1 - i) for i, c in enumerate(P.coeffs[:-1])]
    return IntPoly(coeffs + [1])


def prime_splitting(P, p, order=None):
    """Residue degrees and ramification indices of the primes above p.

    Returns a sorted list of (f_i, e_i) with sum e_i * f_i = deg P, computed
    by decomposing O/pO for the p-maximal order O: the radical quotient
    splits into residue fields (giving the f_i), and lifted idempotents cut
    O/pO into local blocks of dimension e_i * f_i.
    """
    if order is None:
        order = p_maximal_order(P, p)
    p_, n = order.p, order.n
    assert p_ == p
    table = _structure_table(order, P)
    rad = _kernel_rows_echelon(_radical_basis(table, p, n), p)
    # complement of the radical: free coordinates of its echelon form
    piv_cols = [next(i for i, x in enumerate(row) if x % p) for row in rad]
    free_cols = [c for c in range(n) if c not in piv_cols]
    s = len(free_cols)

    def project(vec):
        v = [x % p for x in vec]
        for row, pc in zip(rad, piv_cols):
            c = v[pc]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return [v[c] for c in free_cols]

    def unproject(bvec):
        v = [0] * n
        for c, x in zip(free_cols, bvec):
            v[c] = x % p
        return v

    # multiplication table of B = A / radical
    btable = [[None] * s for _ in range(s)]
    for a in range(s):
        for b in range(a, s):
            prod = _mult_mod(unproject([1 if t == a else 0 for t in range(s)]),
                             unproject([1 if t == b else 0 for t in range(s)]),
                             table, p, n)
            y = project(prod)
            btable[a][b] = y
            btable[b][a] = y

    one_a = _one_coords(order)
    one_b = project(one_a)

    def bmult(u, v):
        out = [0] * s
        for i in range(s):
            ui = u[i] % p
            if ui:
                ti = btable[i]
                for j in range(s):
                    vj = v[j] % p
                    if vj:
                        c = ui * vj
                        row = ti[j]
                        for t in range(s):
                            if row[t]:
                                out[t] += c * row[t]
        return [x % p for x in out]

    # Frobenius-fixed subalgebra of B detects the number of components
    frob_cols = []
    for i in range(s):
        e = [1 if t == i else 0 for t in range(s)]
        acc = None
        base = e
        m = p
        while m:
            if m & 1:
                acc = base if acc is None else bmult(acc, base)
            m >>= 1
            if m:
                base = bmult(base, base)
        frob_cols.append(acc)
    fm = [[(frob_cols[i][t] - (1 if i == t else 0)) % p for i in range(s)]
          for t in range(s)]
    fixed = _kernel_mod_p(fm, p)

    components = [_kernel_rows_echelon(
        [[1 if j == i else 0 for j in range(s)] for i in range(s)], p)]
    for v in fixed:
        refined = []
        for comp in components:
            if len(comp) == 1:
                refined.append(comp)
                continue
            refined.extend(_split_component(comp, v, bmult, p, s))
        components = refined
    if len(components) != len(fixed):
        raise RuntimeError(
            "component count does not match the fixed subalgebra dimension")

    # identity element of each component = the component part of 1_B
    f_degrees = [len(comp) for comp in components]
    idems_b = []
    all_rows = [row for comp in components for row in comp]
    coords = _solve_coords(all_rows, one_b, p)
    at = 0
    for comp in components:
        e_b = [0] * s
        for row_i in range(len(comp)):
            c = coords[at + row_i]
            if c:
                e_b = [(x + c * y) % p for x, y in zip(e_b, comp[row_i])]
        idems_b.append(e_b)
        at += len(comp)

    # lift idempotents to A and measure block sizes
    result = []
    total = 0
    sum_e = [0] * n
    for f_deg, e_b in zip(f_degrees, idems_b):
        e_a = unproject(e_b)
        for _ in range(12):
            sq = _mult_mod(e_a, e_a, table, p, n)
            if sq == e_a:
                break
            cube = _mult_mod(sq, e_a, table, p, n)
            e_a = [(3 * a2 - 2 * a3) % p for a2, a3 in zip(sq, cube)]
        else:
            raise RuntimeError("idempotent lifting did not converge")
        # block dimension: rank of multiplication by the idempotent
        mat = [_mult_mod(e_a, [1 if t == i else 0 for t in range(n)],
                         table, p, n) for i in range(n)]
        dim = n - len(_kernel_mod_p([[mat[i][t] for i in range(n)]
                                     for t in range(n)], p))
        if f_deg == 0 or dim % f_deg:
            raise RuntimeError(
                f"block dimension {dim} not divisible by residue degree "
                f"{f_deg} at p={p}: inconsistent decomposition")
        result.append((f_deg, dim // f_deg))
        total += dim
        sum_e = [(x + y) % p for x, y in zip(sum_e, e_a)]
    if total != n or sum_e != [x % p for x in one_a]:
        raise RuntimeError(
            f"splitting blocks at p={p} do not partition the algebra "
            f"(total {total} of {n})")
    return sorted(result)


def _one_coords(order):
    """Order-basis coordinates of the ring identity (exact, then callers
    reduce mod p)."""
    p, n, d = order.p, order.n, order.denom_exp
    aexp = order.pivot_exponents()
    cur = [p ** d if t == 0 else 0 for t in range(n)]
    y = [0] * n
    for j in range(n - 1, -1, -1):
        piv = p ** aexp[j]
        assert cur[j] % piv == 0, "identity not in the order"
        yj = cur[j] // piv
        y[j] = yj
        if yj:
            row = order.rows[j]
            for t in range(j + 1):
                cur[t] -= yj * row[t]
    assert all(c == 0 for c in cur), "identity solve left a remainder"
    return y


def _poly_lcm_mod(a, b, p):
    g = gfp.gcd(a, b, p)
    q = gfp.divmod_poly(gfp.mul(a, b, p), g, p)[0]
    return gfp.monic(q, p)


def _split_component(comp, v, bmult, p, s):
    """Split one component (an ideal of the radical quotient) along the
    eigenvalues of multiplication by the Frobenius-fixed element v."""
    dim = len(comp)
    cols = [_solve_coords(comp, bmult(v, list(row)), p) for row in comp]
    # minimal polynomial of the multiplication matrix: lcm of Krylov minimal
    # polynomials; multiplication by a fixed element is semisimple with
    # eigenvalues in F_p, so the minimal polynomial splits into distinct
    # linear factors
    minp = [1]
    for start in range(dim):
        seed = [1 if t == start else 0 for t in range(dim)]
        mat_rows = []
        seq = seed
        while True:
            rel = _in_span(mat_rows, seq, p)
            if rel is not None:
                break
            mat_rows.append(list(seq))
            seq = [sum(cols[k][t] * seq[k] for k in range(dim)) % p
                   for t in range(dim)]
        this_min = [(-c) % p for c in rel] + [1]
        minp = _poly_lcm_mod(minp, this_min, p)
        if gfp.degree(minp) == dim:
            break
    root_list = gfp.roots(minp, p)
    if len(root_list) <= 1:
        return [comp]
    out = []
    for r in root_list:
        shifted = [[(cols[k][t] - (r if k == t else 0)) % p
                    for k in range(dim)] for t in range(dim)]
        kern = _kernel_mod_p(shifted, p)
        sub = []
        for kv in kern:
            vec = [0] * s
            for k in range(dim):
                if kv[k]:
                    vec = [(x + kv[k] * y) % p for x, y in zip(vec, comp[k])]
            sub.append(vec)
        out.append(_kernel_rows_echelon(sub, p))
    if sum(len(c) for c in out) != dim:
        raise RuntimeError("eigensplit lost dimensions")
    return out


def _solve_coords(basis_rows, vec, p):
    """Express vec in the span of basis_rows over F_p (raises if outside)."""
    rows = [list(r) + [0] * 0 for r in basis_rows]
    m = len(rows)
    ncols = len(vec)
    aug = [list(r) for r in rows]
    # solve x * rows = vec by transposing to columns
    mat = [[aug[i][c] for i in range(m)] + [vec[c]] for c in range(ncols)]
    red = [row[:] for row in mat]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, ncols) if red[i][c] % p), None)
        if piv is None:
            continue
        red[r], red[piv] = red[piv], red[r]
        inv = pow(red[r][c], -1, p)
        red[r] = [x * inv % p for x in red[r]]
        for i in range(ncols):
            if i != r and red[i][c] % p:
                f = red[i][c]
                red[i] = [(x - f * y) % p for x, y in zip(red[i], red[r])]
        pivots.append(c)
        r += 1
    sol = [0] * m
    for rr, pc in enumerate(pivots):
        sol[pc] = red[rr][m] % p
    for i in range(r, ncols):
        if red[i][m] % p:
            raise ValueError("vector outside the span")
    return sol


def _in_span(rows, vec, p):
    """If vec is in the row span, return the coefficients; else None."""
    try:
        return _solve_coords(rows, vec, p)
    except ValueError:
        return None


def _kernel_rows_echelon(rows, p):
    """Reduced row echelon basis of the span of the given rows."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    if not nrows:
        return []
    ncols = len(mat[0])
    out = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][c] % p), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == nrows:
            break
    for i in range(r):
        out.append([x % p for x in mat[i]])
    return out
