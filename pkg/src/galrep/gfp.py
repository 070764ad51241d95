"""Dense univariate polynomial arithmetic over prime fields F_p.

Polynomials are plain lists of ints in [0, p), constant term first, with no
trailing zeros (the zero polynomial is the empty list).  Everything here is
exact modular arithmetic; no objects, no caching, so the functions stay cheap
enough for the inner loops of factorization and maximal-order computations.
"""

import random


def trim(f):
    """Drop trailing zero coefficients in place and return f."""
    while f and f[-1] == 0:
        f.pop()
    return f


def from_int_coeffs(coeffs, p):
    """Reduce an integer coefficient sequence mod p."""
    return trim([c % p for c in coeffs])


def degree(f):
    """Degree, with the zero polynomial mapped to -1."""
    return len(f) - 1


def is_zero(f):
    return not f


def add(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return trim(out)


def neg(f, p):
    return [(-c) % p for c in f]


def scalar_mul(f, a, p):
    a %= p
    if a == 0:
        return []
    return [c * a % p for c in f]


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def divmod_poly(f, g, p):
    """Return (q, r) with f = q*g + r, deg r < deg g."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f)
    dg = len(g) - 1
    lg_inv = pow(g[-1], p - 2, p)
    q = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        c = r[-1] * lg_inv % p
        k = len(r) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = (r[k + i] - c * b) % p
        trim(r)
    return trim(q), r


def rem(f, g, p):
    return divmod_poly(f, g, p)[1]


def monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def gcd(f, g, p):
    a, b = list(f), list(g)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def gcdex(f, g, p):
    """Extended gcd: (s, t, h) with s*f + t*g = h, h monic."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return s0, t0, r0
    inv = pow(r0[-1], p - 2, p)
    return scalar_mul(s0, inv, p), scalar_mul(t0, inv, p), monic(r0, p)


def mulmod(f, g, h, p):
    return rem(mul(f, g, p), h, p)


def powmod(f, n, h, p):
    """f^n mod h."""
    result = [1 % p]
    base = rem(f, h, p)
    while n:
        if n & 1:
            result = mulmod(result, base, h, p)
        base = mulmod(base, base, h, p)
        n >>= 1
    return result


def powmod_plain(f, n, p):
    """f^n with no modulus (used by resultant bookkeeping)."""
    result = [1 % p]
    base = list(f)
    while n:
        if n & 1:
            result = mul(result, base, p)
        base = mul(base, base, p)
        n >>= 1
    return result


def deriv(f, p):
    return trim([i * c % p for i, c in enumerate(f)][1:])


def eval_at(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def squarefree_part(f, p):
    """Product of the distinct irreducible factors of f (monic)."""
    f = monic(f, p)
    if degree(f) <= 0:
        return f
    d = deriv(f, p)
    if not d:
        # f is a polynomial in x^p: take p-th root and recurse
        root = [f[i] for i in range(0, len(f), p)]
        return squarefree_part(root, p)
    g = gcd(f, d, p)
    if degree(g) == 0:
        return f
    w = divmod_poly(f, g, p)[0]
    # w covers the factors with multiplicity prime to p; what survives in g
    # after removing them is a p-th power holding the remaining factors
    rest = g
    while True:
        c = gcd(rest, w, p)
        if degree(c) == 0:
            break
        rest = divmod_poly(rest, c, p)[0]
    if degree(rest) > 0:
        w = mul(w, squarefree_part(rest, p), p)
    return monic(w, p)


def _is_squarefree(f, p):
    d = deriv(f, p)
    if not d:
        return degree(f) <= 0
    return degree(gcd(f, d, p)) == 0


def is_squarefree(f, p):
    return _is_squarefree(f, p)


def frobenius_matrix(f, p):
    """Columns: x^(p*i) mod f for i < deg f.  Used for fast repeated Frobenius."""
    n = degree(f)
    xp = powmod([0, 1], p, f, p)
    cols = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = mulmod(cur, xp, f, p)
        cols.append(list(cur) + [0] * (n - len(cur)))
    return cols


def apply_matrix(cols, g, p):
    """Image of g (deg < n) under the map with the given columns."""
    n = len(cols)
    out = [0] * n
    for i, c in enumerate(g):
        if c:
            col = cols[i]
            for j in range(n):
                if col[j]:
                    out[j] = (out[j] + c * col[j]) % p
    return trim(out)


def distinct_degree_factor(f, p):
    """Distinct-degree splitting of a squarefree monic f.

    Returns a list of (d, g) with g the product of all irreducible factors of
    degree d, ordered by increasing d.
    """
    f = monic(f, p)
    out = []
    cols = frobenius_matrix(f, p)
    h = [0, 1]  # x^(p^i) mod f, via the Frobenius matrix
    i = 0
    rest = f
    while degree(rest) >= 2 * (i + 1):
        i += 1
        h = apply_matrix(cols, h, p)
        g = gcd(sub(h, [0, 1], p), rest, p)
        if degree(g) > 0:
            out.append((i, g))
            rest = divmod_poly(rest, g, p)[0]
            if degree(rest) == 0:
                break
            # Frobenius matrix is for the original modulus; reduce h mod rest
            h = rem(h, rest, p)
            cols = frobenius_matrix(rest, p)
    if degree(rest) > 0:
        out.append((degree(rest), rest))
    return out


def _edf_split(f, d, p, rng):
    """Split a monic squarefree f that is a product of degree-d irreducibles."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        trim(r)
        if degree(r) < 1:
            continue
        if p == 2:
            # trace map over F_2
            t = list(r)
            acc = list(r)
            for _ in range(d - 1):
                t = mulmod(t, t, f, p)
                acc = add(acc, t, p)
            g = gcd(acc, f, p)
        else:
            e = (p ** d - 1) // 2
            g = gcd(sub(powmod(r, e, f, p), [1], p), f, p)
        if 0 < degree(g) < n:
            left = _edf_split(g, d, p, rng)
            right = _edf_split(divmod_poly(f, g, p)[0], d, p, rng)
            return left + right


def squarefree_decomposition(f, p):
    """Exact-multiplicity decomposition f = lc * prod S_j^j.

    Returns a sorted list of (j, S_j) with each S_j monic squarefree of
    positive degree and the S_j pairwise coprime (Yun's algorithm adapted to
    characteristic p: multiplicities divisible by p emerge from the p-th root
    branch).
    """
    if not f:
        raise ZeroDivisionError("cannot decompose the zero polynomial")
    parts = {}

    def rec(g, outer):
        if degree(g) <= 0:
            return
        d = deriv(g, p)
        if not d:
            root = [g[i] for i in range(0, len(g), p)]
            rec(monic(root, p), outer * p)
            return
        c = gcd(g, d, p)
        w = divmod_poly(g, c, p)[0]
        j = 1
        while degree(w) > 0:
            y = gcd(w, c, p)
            z = divmod_poly(w, y, p)[0]
            if degree(z) > 0:
                key = outer * j
                parts[key] = mul(parts[key], z, p) if key in parts else monic(z, p)
            w = y
            c = divmod_poly(c, y, p)[0]
            j += 1
        if degree(c) > 0:
            rec(c, outer)

    rec(monic(f, p), 1)
    return sorted(parts.items())


def factor(f, p, seed=None):
    """Full factorization over F_p.

    Returns (lc, [(g, e), ...]) with monic irreducible g sorted by
    (degree, coefficients).  Deterministic: the equal-degree splitting uses a
    generator seeded from the input unless an explicit seed is given.
    """
    if not f:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    lc = f[-1] % p
    if seed is None:
        seed = (p, tuple(c % p for c in f)).__hash__()
    rng = random.Random(seed)
    factors = {}
    for mult, part in squarefree_decomposition(f, p):
        for d, prod in distinct_degree_factor(part, p):
            for irr in _edf_split(prod, d, p, rng):
                factors[tuple(irr)] = mult
    items = sorted(factors.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return lc, [(list(g), e) for g, e in items]


def factor_degrees(f, p):
    """Multiset of (degree, multiplicity) pairs without running full EDF.

    Degree data comes straight from distinct-degree splitting of the
    squarefree decomposition, much cheaper than isolating each factor.
    """
    if not f:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    out = []
    for mult, part in squarefree_decomposition(f, p):
        for d, prod in distinct_degree_factor(part, p):
            out.extend([(d, mult)] * (degree(prod) // d))
    return sorted(out)


def roots(f, p):
    """Roots in F_p (without multiplicity), sorted."""
    f = squarefree_part(f, p)
    cols_needed = degree(f) > 1
    if cols_needed:
        linear = gcd(sub(powmod([0, 1], p, f, p), [0, 1], p), f, p)
    else:
        linear = f
    out = []
    if degree(linear) >= 1:
        _, facs = factor(linear, p)
        for g, _ in facs:
            if degree(g) == 1:
                out.append((-g[0]) % p)
    return sorted(out)


def is_irreducible(f, p):
    """Rabin irreducibility test (deterministic)."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    cols = frobenius_matrix(f, p)
    h = [0, 1]
    # x^(p^n) == x mod f, and x^(p^(n/q)) - x coprime to f for prime q | n
    prime_divs = set()
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            prime_divs.add(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        prime_divs.add(m)
    check_at = {n // q for q in prime_divs}
    for i in range(1, n + 1):
        h = apply_matrix(cols, h, p)
        if i in check_at:
            g = gcd(sub(h, [0, 1], p), f, p)
            if degree(g) != 0:
                return False
    return not sub(h, [0, 1], p)


def irreducible_poly(k, p):
    """The least monic irreducible of degree k, ordering coefficient words
    (c_{k-1}, ..., c_0) as base-p integers.  Deterministic by construction."""
    if k == 1:
        return [0, 1]
    count = p ** k
    for val in range(count):
        coeffs = []
        v = val
        for _ in range(k):
            coeffs.append(v % p)
            v //= p
        f = coeffs + [1]
        if is_irreducible(f, p):
            return f
    raise ValueError("no irreducible polynomial found (unreachable)")
