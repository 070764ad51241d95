"""Finite fields F_q, projective matrix classes and the trace-square map.

Fields are built as F_p[x]/(modulus) with a verified irreducible modulus.
Elements are immutable coordinate tuples in the power basis.  The map

    theta: PGL_2(F_q) -> F_q,   class of gamma |-> tr(gamma)^2 / det(gamma)

is the workhorse for projective image tests: its value set over a subgroup
of PSL_2(F_q) is all of F_q exactly when the subgroup is everything, and
theta = 4 detects coincident eigenvalues.
"""

from . import gfp


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for 64-bit inputs
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FqField:
    """F_q with q = p^k, as F_p[x]/(modulus)."""

    def __init__(self, p, k, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            modulus = gfp.irreducible_poly(k, p)
        else:
            modulus = gfp.from_int_coeffs(list(modulus), p)
            if gfp.degree(modulus) != k:
                raise ValueError("modulus degree does not match k")
            if not gfp.is_irreducible(modulus, p):
                raise ValueError("modulus is reducible over F_p")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = gfp.monic(modulus, p)

    def __repr__(self):
        return f"FqField(p={self.p}, k={self.k})"

    def __eq__(self, other):
        return (isinstance(other, FqField) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, tuple(self.modulus)))

    def element(self, coords):
        if isinstance(coords, int):
            coords = [coords]
        reduced = gfp.rem(gfp.from_int_coeffs(list(coords), self.p),
                          self.modulus, self.p)
        return FqElement(self, reduced)

    def zero(self):
        return FqElement(self, ())

    def one(self):
        return FqElement(self, (1,))

    def gen(self):
        return self.element([0, 1])

    def from_int(self, n):
        return self.element([n % self.p])

    def elements(self):
        """All q elements, in lexicographic coordinate order."""
        p, k = self.p, self.k
        for idx in range(self.q):
            coords = []
            v = idx
            for _ in range(k):
                coords.append(v % p)
                v //= p
            yield self.element(coords)


class FqElement:
    """Element of an FqField; coords is a trimmed power-basis tuple."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        c = list(coords)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("FqElement is immutable")

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("elements of different fields")

    @property
    def is_zero(self):
        return not self.coords

    def __eq__(self, other):
        return (isinstance(other, FqElement) and self.field == other.field
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        self._check(other)
        return FqElement(self.field,
                         gfp.add(list(self.coords), list(other.coords), self.field.p))

    def __sub__(self, other):
        self._check(other)
        return FqElement(self.field,
                         gfp.sub(list(self.coords), list(other.coords), self.field.p))

    def __neg__(self):
        return FqElement(self.field, gfp.neg(list(self.coords), self.field.p))

    def __mul__(self, other):
        if isinstance(other, int):
            return FqElement(self.field,
                             gfp.scalar_mul(list(self.coords), other, self.field.p))
        self._check(other)
        f = self.field
        return FqElement(f, gfp.mulmod(list(self.coords), list(other.coords),
                                       f.modulus, f.p))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        s, _, g = gfp.gcdex(list(self.coords), f.modulus, f.p)
        assert gfp.degree(g) == 0
        return FqElement(f, gfp.rem(s, f.modulus, f.p))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        f = self.field
        if n < 0:
            return self.inverse() ** (-n)
        return FqElement(f, gfp.powmod(list(self.coords), n, f.modulus, f.p))

    def frobenius(self):
        return self ** self.field.p

    def is_square(self):
        """Squareness in F_q; every element is a square in characteristic 2."""
        f = self.field
        if f.p == 2 or self.is_zero:
            return True
        return (self ** ((f.q - 1) // 2)) == f.one()

    def __repr__(self):
        return f"Fq({self.field.p}^{self.field.k}; {list(self.coords)})"


def make_field(p, k, modulus=None):
    """Construct F_(p^k); the default modulus is the least irreducible of
    degree k in base-p coefficient-word order (deterministic)."""
    return FqField(p, k, modulus)


class PGL2Class:
    """Conjugacy-invariant data (trace, det) of a class in PGL_2(F_q).

    Two pairs describe the same class data when (t, d) ~ (c*t, c^2*d); theta
    and the trace power recurrence only depend on that equivalence.
    """

    __slots__ = ("trace", "det")

    def __init__(self, trace, det):
        if det.is_zero:
            raise ValueError("determinant must be nonzero")
        object.__setattr__(self, "trace", trace)
        object.__setattr__(self, "det", det)

    def __setattr__(self, name, value):
        raise AttributeError("PGL2Class is immutable")


def theta(cls):
    """tr^2/det; invariant under scaling and conjugation."""
    return cls.trace * cls.trace / cls.det


def trace_power(trace, det, n):
    """(tr(gamma^n), det(gamma^n)) from (tr(gamma), det(gamma)).

    Uses t_{k+1} = trace*t_k - det*t_{k-1} with t_0 = 2, t_1 = trace; the
    determinant of the n-th power is det^n.
    """
    if det.is_zero:
        raise ValueError("determinant must be nonzero")
    field = trace.field
    if n == 0:
        return field.from_int(2), field.one()
    t_prev = field.from_int(2)
    t_cur = trace
    for _ in range(n - 1):
        t_prev, t_cur = t_cur, trace * t_cur - det * t_prev
    return t_cur, det ** n


def theta_image_of_psl2(field):
    """The attainable theta values on PSL_2(F_q).

    Classes in PSL_2 are the square-determinant classes, so their theta values
    tr^2/det are exactly the squares of F_q; in characteristic 2 that is all
    of F_q.  Coverage of this set is what detects the full group.
    """
    if field.p == 2:
        return set(field.elements())
    return {e * e for e in field.elements()}


def theta_coverage_verdict(seen, field):
    """Report whether collected theta values fill F_q, for q >= 4.

    Full coverage by theta values of a subgroup of PGL_2(F_q) certifies that
    the subgroup contains PSL_2(F_q) (brute-force checked for q <= 9 in the
    dickson module).  In characteristic 2 that coincides with the coverage
    test on PSL_2 itself.  For odd q a square-determinant class only ever
    yields square values, so the verdict also reports coverage of the
    attainable PSL_2 theta image (the squares) as supplementary data.
    """
    if field.q < 4:
        raise ValueError("coverage test requires q >= 4")
    seen = set(seen)
    missing = set(field.elements()) - seen
    psl_target = theta_image_of_psl2(field)
    return {
        "full": not missing,
        "missing": missing,
        "psl_image_full": not (psl_target - seen),
        "psl_image_missing": psl_target - seen,
    }


# ---------------------------------------------------------------------------
# cycle types of PGL_2 / PSL_2 acting on the projective line

def _pgl2_reps(field):
    """One matrix per PGL_2(F_q) class: (a, b, c, d) as int-encoded elements,
    normalized so the first nonzero entry is 1."""
    q = field.q
    elems = list(field.elements())
    for b_i in range(q):
        for c_i in range(q):
            for d_i in range(q):
                # a = 1
                yield (1, b_i, c_i, d_i)
    # a = 0, b = 1
    for c_i in range(1, q):
        for d_i in range(q):
            yield (0, 1, c_i, d_i)


def cycle_type_fingerprint(field, group="PGL2"):
    """Set of cycle types of all group elements acting on P^1(F_q).

    Cycle types are returned as sorted tuples of cycle lengths summing to
    q + 1.  group is "PGL2" or "PSL2"; for even q the two coincide.
    """
    if group not in ("PGL2", "PSL2"):
        raise ValueError("group must be PGL2 or PSL2")
    q, p = field.q, field.p
    elems = list(field.elements())
    index = {e: i for i, e in enumerate(elems)}
    # index 0 is zero and index 1 is one by the coordinate enumeration order
    mul_t = [[index[a * b] for b in elems] for a in elems]
    add_t = [[index[a + b] for b in elems] for a in elems]
    neg_t = [index[-a] for a in elems]
    inv_t = [0] + [index[a.inverse()] for a in elems[1:]]
    squares = {mul_t[i][i] for i in range(q)}
    npoints = q + 1
    types = set()
    psl_only = group == "PSL2" and p != 2
    for a, b, c, d in _pgl2_reps(field):
        det = add_t[mul_t[a][d]][neg_t[mul_t[b][c]]]
        if det == 0:
            continue
        if psl_only and det not in squares:
            continue
        ra, rc = mul_t[a], mul_t[c]
        # points of P^1: (x : 1) for x in field order, then (1 : 0) last
        perm = [0] * npoints
        for i in range(q):
            u = add_t[ra[i]][b]
            v = add_t[rc[i]][d]
            perm[i] = q if v == 0 else mul_t[u][inv_t[v]]
        perm[q] = q if c == 0 else mul_t[a][inv_t[c]]
        seen = [False] * npoints
        lengths = []
        for s in range(npoints):
            if seen[s]:
                continue
            ln = 0
            t = s
            while not seen[t]:
                seen[t] = True
                t = perm[t]
                ln += 1
            lengths.append(ln)
        types.add(tuple(sorted(lengths)))
    return types


def fingerprint_to_text(types):
    """Golden-file format: one sorted comma-separated type per line, lines
    sorted lexicographically."""
    lines = sorted(",".join(str(v) for v in t) for t in types)
    return "\n".join(lines) + "\n"
